#include "racg/gf2.hpp"

#include <bit>
#include <cassert>

namespace racg::gf2 {

BitVec& BitVec::operator^=(const BitVec& o) {
    assert(bits_ == o.bits_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVec::any() const {
    for (auto x : w_)
        if (x) return true;
    return false;
}

std::size_t BitVec::count() const {
    std::size_t n = 0;
    for (auto x : w_) n += std::popcount(x);
    return n;
}

std::size_t BitVec::lowest() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return npos;
}

std::size_t rank(std::vector<BitVec> rows) {
    std::vector<BitVec> basis; // echelon rows, distinct pivots
    std::vector<std::size_t> pivots;
    for (auto& r : rows) {
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (r.test(pivots[j])) r ^= basis[j];
        std::size_t p = r.lowest();
        if (p != BitVec::npos) {
            basis.push_back(std::move(r));
            pivots.push_back(p);
        }
    }
    return basis.size();
}

namespace {

// symmetric difference of sorted index lists (GF(2) sum of combinations)
std::vector<std::uint32_t> xor_combo(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) out.push_back(a[i++]);
        else if (b[j] < a[i]) out.push_back(b[j++]);
        else { ++i; ++j; }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

} // namespace

bool Solver::add(BitVec v) {
    assert(v.size() == width_);
    std::vector<std::uint32_t> combo{static_cast<std::uint32_t>(added_++)};
    for (const Row& row : rows_) {
        if (v.test(row.pivot)) {
            v ^= row.v;
            combo = xor_combo(combo, row.combo);
        }
    }
    std::size_t p = v.lowest();
    if (p == BitVec::npos) return false;
    rows_.push_back(Row{std::move(v), p, std::move(combo)});
    return true;
}

std::optional<std::vector<std::uint32_t>> Solver::solve(BitVec target) const {
    assert(target.size() == width_);
    std::vector<std::uint32_t> combo;
    for (const Row& row : rows_) {
        if (target.test(row.pivot)) {
            target ^= row.v;
            combo = xor_combo(combo, row.combo);
        }
    }
    if (target.any()) return std::nullopt;
    return combo;
}

} // namespace racg::gf2
