#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace racg::gf2 {

// Dense GF(2) vector packed into 64-bit words.
class BitVec {
public:
    static constexpr std::size_t npos = ~std::size_t(0);

    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o);
    bool any() const;
    std::size_t count() const;
    std::size_t lowest() const; // index of the lowest set bit, npos if none

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> w_;
};

// Rank of a set of rows by in-place Gaussian elimination (rows are consumed by value).
std::size_t rank(std::vector<BitVec> rows);

// Incremental row echelon over GF(2) with combination tracking.
//
// Every add() is numbered by insertion order.  Echelon rows remember which added
// vectors sum to them, so solve() can express a target as a sum of previously
// added vectors -- that is how brackets get rewritten over a preferred spanning set.
class Solver {
public:
    Solver() = default;
    explicit Solver(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t added() const { return added_; }

    // Reduces v against the current pivots.  Returns true (and stores a new
    // pivot row) when v is independent from everything added before it.
    bool add(BitVec v);

    // Sorted insertion indices of added vectors summing to target, or nullopt
    // if target lies outside the current span.
    std::optional<std::vector<std::uint32_t>> solve(BitVec target) const;

private:
    struct Row {
        BitVec v;
        std::size_t pivot;
        std::vector<std::uint32_t> combo; // sorted indices of added vectors
    };

    std::size_t width_ = 0;
    std::size_t added_ = 0;
    std::vector<Row> rows_;
};

} // namespace racg::gf2
