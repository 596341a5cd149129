// edge_bitset.hpp - Bitset over edge ids, used for gray sets and spanners.

#ifndef ADDSPAN_EDGE_BITSET_HPP
#define ADDSPAN_EDGE_BITSET_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace addspan {

class EdgeBitset {
public:
    EdgeBitset() = default;

    explicit EdgeBitset(int num_edges)
        : bits_((static_cast<std::size_t>(num_edges) + 63) / 64, 0), m_(num_edges) {}

    int size() const { return m_; }
    int count() const { return count_; }

    bool test(int e) const {
        return (bits_[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1u;
    }

    // Sets bit e; returns true if it was newly set.
    bool insert(int e) {
        if (e < 0 || e >= m_) throw std::out_of_range("EdgeBitset: edge id out of range");
        std::uint64_t& word = bits_[static_cast<std::size_t>(e) >> 6];
        const std::uint64_t mask = 1ULL << (e & 63);
        if (word & mask) return false;
        word |= mask;
        ++count_;
        return true;
    }

    void unite(const EdgeBitset& other) {
        if (other.m_ != m_) throw std::invalid_argument("EdgeBitset: size mismatch in unite");
        count_ = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            bits_[i] |= other.bits_[i];
            count_ += __builtin_popcountll(bits_[i]);
        }
    }

    // Bits not set in this set, over the same universe.
    EdgeBitset complement() const {
        EdgeBitset out(m_);
        for (int e = 0; e < m_; ++e) {
            if (!test(e)) out.insert(e);
        }
        return out;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count_);
        for (int e = 0; e < m_; ++e) {
            if (test(e)) out.push_back(e);
        }
        return out;
    }

    bool operator==(const EdgeBitset&) const = default;

private:
    std::vector<std::uint64_t> bits_;
    int m_ = 0;
    int count_ = 0;
};

// A gray edge set marks the constrained edges a path budget counts.
using GrayEdgeSet = EdgeBitset;

} // namespace addspan

#endif
