#pragma once

// Gaussian elimination over GF(2) and the free/forced description of an
// affine system's solution set. Rows are packed bit vectors of width n+1;
// the extra column holds the right-hand side. Reduction goes to reduced
// row-echelon form with pivots chosen at the lowest eligible variable
// index, so the output is reproducible across runs and platforms. Which
// variables come out free is a property of that pivot rule, not of the
// system; callers comparing descriptions must compare solution sets.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "differsat/core.hpp"

namespace differsat {

// Value of one forced variable: XOR of the free variables in `support`,
// plus `constant`.
struct ForcedExpr {
    VarId target = 0;
    std::vector<VarId> support;  // sorted, subset of the free set
    bool constant = false;
    friend bool operator==(const ForcedExpr&, const ForcedExpr&) = default;
};

struct SolutionSpace {
    enum class Status { Consistent, Inconsistent };
    Status status = Status::Consistent;
    VarId n = 0;
    std::vector<VarId> free_vars;    // sorted
    std::vector<ForcedExpr> forced;  // one per non-free variable, sorted by target

    bool consistent() const { return status == Status::Consistent; }
};

inline SolutionSpace solve_affine(const AffineSystem& input) {
    AffineSystem sys = normalized(input);
    const VarId n = sys.n;
    const std::size_t words = std::size_t(n) / 64 + 1;  // bit n is the rhs
    const std::size_t rhs_word = std::size_t(n) >> 6;
    const std::uint64_t rhs_mask = std::uint64_t(1) << (n & 63);

    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(sys.equations.size());
    for (const AffineEquation& eq : sys.equations) {
        std::vector<std::uint64_t> row(words, 0);
        for (VarId v : eq.vars) row[v >> 6] |= std::uint64_t(1) << (v & 63);
        if (eq.rhs) row[rhs_word] |= rhs_mask;
        rows.push_back(std::move(row));
    }

    auto bit = [&](const std::vector<std::uint64_t>& row, VarId v) {
        return (row[v >> 6] >> (v & 63)) & 1u;
    };
    auto xor_into = [&](std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
        for (std::size_t w = 0; w < words; ++w) dst[w] ^= src[w];
    };

    std::vector<VarId> pivot_col;  // column of rows[0..rank)
    std::size_t rank = 0;
    for (VarId col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !bit(rows[pivot], col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && bit(rows[r], col)) xor_into(rows[r], rows[rank]);
        pivot_col.push_back(col);
        ++rank;
    }

    SolutionSpace space;
    space.n = n;
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][rhs_word] & rhs_mask) {
            space.status = SolutionSpace::Status::Inconsistent;
            return space;
        }

    std::vector<bool> is_pivot(n, false);
    for (VarId c : pivot_col) is_pivot[c] = true;
    for (VarId v = 0; v < n; ++v)
        if (!is_pivot[v]) space.free_vars.push_back(v);

    for (std::size_t r = 0; r < rank; ++r) {
        ForcedExpr e;
        e.target = pivot_col[r];
        e.constant = (rows[r][rhs_word] & rhs_mask) != 0;
        for (VarId v : space.free_vars)
            if (bit(rows[r], v)) e.support.push_back(v);
        space.forced.push_back(std::move(e));
    }
    std::sort(space.forced.begin(), space.forced.end(),
              [](const ForcedExpr& a, const ForcedExpr& b) { return a.target < b.target; });
    return space;
}

// Extends a choice of free-variable bits (aligned with space.free_vars) to
// the full assignment the space describes.
inline Assignment extend_free_assignment(const SolutionSpace& space,
                                         const std::vector<bool>& free_bits) {
    if (!space.consistent())
        throw std::logic_error("extend_free_assignment: inconsistent space");
    if (free_bits.size() != space.free_vars.size())
        throw std::invalid_argument("extend_free_assignment: wrong number of free bits");
    Assignment a(space.n);
    for (std::size_t i = 0; i < space.free_vars.size(); ++i)
        a.set(space.free_vars[i], free_bits[i]);
    for (const ForcedExpr& e : space.forced) {
        bool value = e.constant;
        for (VarId v : e.support) value ^= a.get(v);
        a.set(e.target, value);
    }
    return a;
}

// First `limit` solutions in lexicographic order of the free-variable bit
// tuple (free_vars[0] most significant); the whole set if it fits.
inline std::vector<Assignment> enumerate_solutions(const SolutionSpace& space,
                                                   std::uint64_t limit) {
    if (!space.consistent())
        throw std::logic_error("enumerate_solutions: inconsistent space");
    const std::size_t k = space.free_vars.size();
    std::uint64_t total = (k >= 63) ? ~std::uint64_t(0) : (std::uint64_t(1) << k);
    std::uint64_t count = std::min(total, limit);
    std::vector<Assignment> out;
    out.reserve(count);
    std::vector<bool> bits(k, false);
    for (std::uint64_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < k; ++j) bits[j] = (i >> (k - 1 - j)) & 1u;
        out.push_back(extend_free_assignment(space, bits));
    }
    return out;
}

// Forced variables whose support meets D in odd cardinality; D must be a
// subset of the free set. Flipping exactly the free variables in D flips
// exactly these forced variables.
inline std::vector<VarId> odd_dependents(const SolutionSpace& space,
                                         const std::vector<VarId>& D) {
    for (VarId v : D)
        if (!std::binary_search(space.free_vars.begin(), space.free_vars.end(), v))
            throw std::invalid_argument("odd_dependents: D is not a subset of the free set");
    std::vector<VarId> sorted_d = D;
    std::sort(sorted_d.begin(), sorted_d.end());
    std::vector<VarId> out;
    for (const ForcedExpr& e : space.forced) {
        std::size_t hits = 0;
        for (VarId v : e.support)
            if (std::binary_search(sorted_d.begin(), sorted_d.end(), v)) ++hits;
        if (hits % 2 == 1) out.push_back(e.target);
    }
    return out;
}

}  // namespace differsat
