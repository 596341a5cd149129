// bench.hpp - CSV row schema for benchmark sweeps.

#ifndef ADDSPAN_BENCH_HPP
#define ADDSPAN_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace addspan {

inline constexpr const char* kBenchCsvHeader =
    "n,m,mu,g,seed,algo,build_ms,spanner_edges,ratio_n_mu,violations";

struct BenchRow {
    int n = 0;
    long long m = 0;
    int mu = 0;
    int g = 0;
    std::uint64_t seed = 0;
    std::string algo;
    double build_ms = 0.0;
    long long spanner_edges = 0;
    double ratio_n_mu = 0.0;
    std::optional<long long> violations; // empty when the run was not verified
};

std::string bench_csv_row(const BenchRow& row);

} // namespace addspan

#endif
