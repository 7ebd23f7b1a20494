#pragma once

// Pair counting for hitting formulas. In a hitting formula no assignment
// falsifies two clauses at once, so the falsifying sets are disjoint per
// clause and inclusion-exclusion over ordered assignment pairs collapses
// to a closed form:
//
//   #pairs at distance d = (2^n - 2 * sum_i 2^(n-|Ci|)) * C(n,d)
//                          + sum_i sum_j alpha(i,j)
//
// where alpha(i,j) counts pairs with sigma1 falsifying Ci and sigma2
// falsifying Cj. Everything is exact big-integer arithmetic; the answer
// to a differ query is read off the counts. Witness extraction in
// polynomial time is open, so witnesses only come from brute force at
// small n.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "differsat/bigint.hpp"
#include "differsat/core.hpp"
#include "differsat/oracle.hpp"

namespace differsat {

namespace detail {

// literal polarity per variable for one clause, sorted by variable
inline std::vector<std::pair<VarId, bool>> clause_polarities(const Clause& c) {
    std::vector<std::pair<VarId, bool>> out;
    out.reserve(c.literals.size());
    for (const Literal& l : c.literals) out.emplace_back(l.var, l.positive);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Overlap profile of one ordered clause pair; lambda counts the shared
// variables that appear with opposite polarity.
struct ClausePairProfile {
    std::size_t i = 0;
    std::size_t j = 0;
    std::uint32_t lambda = 0;
    std::uint32_t only_i = 0;    // |vars(Ci) \ vars(Cj)|
    std::uint32_t only_j = 0;    // |vars(Cj) \ vars(Ci)|
    std::uint32_t outside = 0;   // n - |vars(Ci) u vars(Cj)|
};

inline ClausePairProfile clause_pair_profile(const CnfFormula& phi, std::size_t i,
                                             std::size_t j) {
    auto a = detail::clause_polarities(phi.clauses[i]);
    auto b = detail::clause_polarities(phi.clauses[j]);
    ClausePairProfile p;
    p.i = i;
    p.j = j;
    std::size_t x = 0, y = 0, shared = 0;
    while (x < a.size() && y < b.size()) {
        if (a[x].first < b[y].first) {
            ++p.only_i;
            ++x;
        } else if (a[x].first > b[y].first) {
            ++p.only_j;
            ++y;
        } else {
            ++shared;
            if (a[x].second != b[y].second) ++p.lambda;
            ++x;
            ++y;
        }
    }
    p.only_i += std::uint32_t(a.size() - x);
    p.only_j += std::uint32_t(b.size() - y);
    p.outside = phi.n - (p.only_i + p.only_j + std::uint32_t(shared));
    return p;
}

inline bool is_hitting(const CnfFormula& input) {
    CnfFormula phi = normalized(input);
    std::vector<std::vector<std::pair<VarId, bool>>> pol;
    pol.reserve(phi.clauses.size());
    for (const Clause& c : phi.clauses) pol.push_back(detail::clause_polarities(c));
    for (std::size_t i = 0; i < pol.size(); ++i)
        for (std::size_t j = i + 1; j < pol.size(); ++j) {
            bool clash = false;
            std::size_t x = 0, y = 0;
            while (x < pol[i].size() && y < pol[j].size()) {
                if (pol[i][x].first < pol[j][y].first)
                    ++x;
                else if (pol[i][x].first > pol[j][y].first)
                    ++y;
                else {
                    if (pol[i][x].second != pol[j][y].second) clash = true;
                    ++x;
                    ++y;
                }
            }
            if (!clash) return false;
        }
    return true;
}

// Binomial coefficients via cached Pascal rows; counts overflow fixed
// width integers long before n gets interesting.
class BinomialTable {
  public:
    explicit BinomialTable(std::uint32_t n_max) {
        rows_.reserve(n_max + 1);
        rows_.push_back({BigUint(1)});
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            std::vector<BigUint> row(n + 1, BigUint(1));
            for (std::uint32_t k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
            rows_.push_back(std::move(row));
        }
    }
    // C(n, k); zero when k > n
    BigUint at(std::uint32_t n, std::uint64_t k) const {
        if (k > n) return BigUint(0);
        return rows_[n][std::size_t(k)];
    }

  private:
    std::vector<std::vector<BigUint>> rows_;
};

inline BigUint count_unsat(const CnfFormula& input) {
    CnfFormula phi = normalized(input);
    if (!is_hitting(phi)) throw std::invalid_argument("count_unsat: not a hitting formula");
    BigUint total(0);
    for (const Clause& c : phi.clauses)
        total += BigUint::pow2(phi.n - std::uint32_t(c.literals.size()));
    return total;
}

inline BigUint count_satisfying(const CnfFormula& phi) {
    return BigUint::pow2(normalized(phi).n) - count_unsat(phi);
}

namespace detail {

inline BigUint alpha_term(const ClausePairProfile& p, std::uint32_t d,
                          const BinomialTable& binom) {
    if (p.lambda > d) return BigUint(0);
    const std::uint32_t rest = d - p.lambda;
    BigUint sum(0);
    for (std::uint32_t d1 = 0; d1 <= std::min(rest, p.only_i); ++d1)
        for (std::uint32_t d2 = 0; d1 + d2 <= rest && d2 <= p.only_j; ++d2) {
            std::uint32_t d3 = rest - d1 - d2;
            if (d3 > p.outside) continue;
            sum += binom.at(p.only_i, d1) * binom.at(p.only_j, d2) * binom.at(p.outside, d3);
        }
    return BigUint::pow2(p.outside) * sum;
}

}  // namespace detail

// Number of ORDERED pairs (sigma1, sigma2) of satisfying assignments at
// Hamming distance exactly d.
inline BigUint count_exact_pairs(const CnfFormula& input, std::int64_t d) {
    CnfFormula phi = normalized(input);
    if (!is_hitting(phi)) throw std::invalid_argument("count_exact_pairs: not a hitting formula");
    if (d < 0) throw std::invalid_argument("count_exact_pairs: d must be nonnegative");
    if (d > phi.n) return BigUint(0);
    const std::uint32_t dist = std::uint32_t(d);

    BinomialTable binom(phi.n);
    BigUint unsat = count_unsat(phi);

    // keep the arithmetic unsigned: positive parts first, one subtraction
    BigUint positive = BigUint::pow2(phi.n) * binom.at(phi.n, dist);
    for (std::size_t i = 0; i < phi.clauses.size(); ++i)
        for (std::size_t j = 0; j < phi.clauses.size(); ++j)
            positive += detail::alpha_term(clause_pair_profile(phi, i, j), dist, binom);
    BigUint negative = (unsat + unsat) * binom.at(phi.n, dist);
    internal_check(negative <= positive, "count_exact_pairs: identity went negative");
    return positive - negative;
}

inline constexpr std::uint32_t kDefaultHittingWitnessCap = 16;

// Exact mode: YES iff the count at d is nonzero. Max mode: YES iff some
// distance in [d, n] has a nonzero count; pair_count carries the summed
// count. Witnesses only via brute force when n is small enough.
inline DifferAnswer decide_differ_hitting(const CnfFormula& input, DifferQuery q,
                                          std::uint32_t witness_cap = kDefaultHittingWitnessCap) {
    CnfFormula phi = normalized(input);
    if (!is_hitting(phi))
        throw std::invalid_argument("decide_differ_hitting: not a hitting formula");

    if (count_satisfying(phi).is_zero()) {
        DifferAnswer ans = DifferAnswer::make_unsat();
        ans.pair_count = BigUint(0);
        return ans;
    }

    BigUint count(0);
    if (q.mode == Mode::Exact) {
        count = count_exact_pairs(phi, q.d);
    } else {
        for (std::uint32_t dd = q.d; dd <= phi.n; ++dd) count += count_exact_pairs(phi, dd);
    }

    DifferAnswer ans;
    ans.decision = count.is_zero() ? Decision::No : Decision::Yes;
    ans.pair_count = count;
    if (ans.yes() && phi.n <= witness_cap) {
        DifferAnswer brute = oracle_differ(Formula(phi), q, witness_cap);
        internal_check(brute.decision == ans.decision,
                       "decide_differ_hitting: closed form and brute force disagree");
        ans.witness = brute.witness;
    }
    return ans;
}

}  // namespace differsat
