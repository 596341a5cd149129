#include "addspan/bench.hpp"

#include <cstdio>

#include "addspan/graph.hpp"

namespace addspan {

std::string bench_csv_row(const BenchRow& row) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", row.build_ms);
    std::string out;
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.m);
    out += ',';
    out += std::to_string(row.mu);
    out += ',';
    out += std::to_string(row.g);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += row.algo;
    out += ',';
    out += ms;
    out += ',';
    out += std::to_string(row.spanner_edges);
    out += ',';
    out += format_double(row.ratio_n_mu);
    out += ',';
    if (row.violations) out += std::to_string(*row.violations);
    return out;
}

} // namespace addspan
