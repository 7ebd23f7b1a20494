#pragma once

// Differ algorithms for affine systems.
//
//  - two_affine_differ: polynomial algorithm for systems whose equations
//    have at most two variables. Equations x^y=0 merge variables, x^y=1
//    two-colors them; each resulting component flips wholesale, so Max
//    compares d against the total flippable weight and Exact reduces to
//    Subset Sum over the component weights.
//  - max_differ_fpt: O*(2^d) algorithm over the free/forced solution-space
//    description. Two solutions differ exactly on D plus the forced
//    variables with odd dependence on D, so guessing D <= F suffices.
//  - exact_differ_free_enum: honest exponential enumeration of all free
//    subsets; the exact variant is W[1]-hard in d, so no FPT attempt.
//  - kernelize: polynomial preprocessing to an equivalent Max instance
//    with at most (d-1)^2 variables and (d-1)(d-2) equations.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "differsat/core.hpp"
#include "differsat/gf2.hpp"
#include "differsat/subset_sum.hpp"

namespace differsat {

// ---------------------------------------------------------------------------
// 2-affine systems

struct WeightedComponentSummary {
    // Weights of the flippable components, ordered by each component's
    // smallest variable index. Pinned variables (tied to a constant)
    // contribute to no component.
    std::vector<std::uint64_t> component_weights;
    bool bipartite_ok = true;
};

namespace detail {

// Union-find over variables plus a virtual constant node, tracking the
// parity of each element relative to its root. Merging with odd parity
// expresses x^y=1; a failed merge is exactly an odd cycle or a pin
// conflict, i.e. unsatisfiability.
class ParityDsu {
  public:
    explicit ParityDsu(std::size_t n) : parent_(n), parity_(n, 0) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = std::uint32_t(i);
    }

    std::pair<std::uint32_t, bool> find(std::uint32_t x) {
        bool p = false;
        std::uint32_t root = x;
        while (parent_[root] != root) {
            p ^= parity_[root];
            root = parent_[root];
        }
        // path compression, re-rooting parities
        std::uint32_t cur = x;
        bool cur_parity = p;
        while (parent_[cur] != cur) {
            std::uint32_t next = parent_[cur];
            bool next_parity = cur_parity ^ parity_[cur];
            parent_[cur] = root;
            parity_[cur] = cur_parity;
            cur = next;
            cur_parity = next_parity;
        }
        return {root, p};
    }

    // false iff the constraint contradicts the existing ones
    bool merge(std::uint32_t x, std::uint32_t y, bool parity) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return (px ^ py) == parity;
        parent_[rx] = ry;
        parity_[rx] = px ^ py ^ parity;
        return true;
    }

  private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> parity_;
};

struct TwoAffineAnalysis {
    bool consistent = true;
    Assignment base;  // canonical satisfying assignment
    // flippable components ordered by smallest variable index
    std::vector<std::vector<VarId>> components;
    std::vector<std::uint64_t> weights;
    std::uint64_t pinned_weight = 0;
};

inline TwoAffineAnalysis analyze_two_affine(const AffineSystem& sys) {
    const std::uint32_t kConst = sys.n;  // virtual node for arity<=1 equations
    ParityDsu dsu(std::size_t(sys.n) + 1);
    TwoAffineAnalysis out;
    for (const AffineEquation& eq : sys.equations) {
        if (eq.vars.size() > 2)
            throw std::invalid_argument("two_affine_differ: equation of arity >= 3 present");
        bool ok = true;
        if (eq.vars.empty())
            ok = !eq.rhs;
        else if (eq.vars.size() == 1)
            ok = dsu.merge(eq.vars[0], kConst, eq.rhs);
        else
            ok = dsu.merge(eq.vars[0], eq.vars[1], eq.rhs);
        if (!ok) {
            out.consistent = false;
            return out;
        }
    }

    const auto [const_root, const_parity] = dsu.find(kConst);
    std::vector<std::int64_t> comp_of_root(std::size_t(sys.n) + 1, -1);
    out.base = Assignment(sys.n);
    for (VarId v = 0; v < sys.n; ++v) {
        auto [root, parity] = dsu.find(v);
        if (root == const_root) {
            out.base.set(v, parity ^ const_parity);  // forced value
            out.pinned_weight += sys.weight(v);
            continue;
        }
        out.base.set(v, parity);
        if (comp_of_root[root] < 0) {
            comp_of_root[root] = std::int64_t(out.components.size());
            out.components.emplace_back();
            out.weights.push_back(0);
        }
        std::size_t c = std::size_t(comp_of_root[root]);
        out.components[c].push_back(v);
        out.weights[c] += sys.weight(v);
    }
    // canonical two-coloring: each flippable component's smallest variable
    // reads 0 in the base assignment
    for (const std::vector<VarId>& comp : out.components)
        if (out.base.get(comp.front()))
            for (VarId v : comp) out.base.flip(v);
    return out;  // components come out ordered by smallest member already
}

}  // namespace detail

inline WeightedComponentSummary two_affine_summary(const AffineSystem& input) {
    AffineSystem sys = normalized(input);
    detail::TwoAffineAnalysis a = detail::analyze_two_affine(sys);
    WeightedComponentSummary s;
    s.bipartite_ok = a.consistent;
    if (a.consistent) s.component_weights = a.weights;
    return s;
}

inline DifferAnswer two_affine_differ(const AffineSystem& input, DifferQuery q) {
    AffineSystem sys = normalized(input);
    detail::TwoAffineAnalysis a = detail::analyze_two_affine(sys);
    if (!a.consistent) return DifferAnswer::make_unsat();

    std::uint64_t total = 0;
    for (std::uint64_t w : a.weights) total += w;
    std::uint64_t all_weight = 0;
    for (VarId v = 0; v < sys.n; ++v) all_weight += sys.weight(v);
    // independent route to the Max threshold: flippable = everything minus pinned
    internal_check(total == all_weight - a.pinned_weight,
                   "two_affine_differ: component weights disagree with pinned weight");

    std::vector<std::size_t> chosen;
    if (q.mode == Mode::Max) {
        if (total < q.d) return DifferAnswer::make_no();
        chosen.resize(a.weights.size());
        for (std::size_t i = 0; i < chosen.size(); ++i) chosen[i] = i;
    } else {
        auto picked = subset_sum(a.weights, q.d);
        if (!picked) return DifferAnswer::make_no();
        chosen = std::move(*picked);
    }

    Assignment flipped = a.base;
    for (std::size_t c : chosen)
        for (VarId v : a.components[c]) flipped.flip(v);

    internal_check(evaluate_affine(sys, a.base) && evaluate_affine(sys, flipped),
                   "two_affine_differ: witness does not satisfy the system");
    std::uint64_t dist = weighted_distance(a.base, flipped, sys.weights);
    internal_check(q.mode == Mode::Max ? dist >= q.d : dist == q.d,
                   "two_affine_differ: witness distance violates the query");
    return DifferAnswer::make_yes(std::move(a.base), std::move(flipped));
}

// ---------------------------------------------------------------------------
// General affine systems, parameterized by d

struct FptStats {
    std::uint64_t subsets_enumerated = 0;
};

namespace detail {

// Incremental walk over subsets D of the free variables in numeric mask
// order. Going from mask m to m+1 flips the bits of m^(m+1), which costs
// amortized O(1) toggles of precomputed dependent masks, so each subset's
// |D| + |odd_dependents(D)| comes out in O(#forced/64).
class FreeSubsetWalker {
  public:
    explicit FreeSubsetWalker(const SolutionSpace& space)
        : free_count_(space.free_vars.size()),
          words_((space.forced.size() + 63) / 64, 0),
          dep_masks_(space.free_vars.size(),
                     std::vector<std::uint64_t>((space.forced.size() + 63) / 64, 0)) {
        std::vector<std::int64_t> free_index(space.n, -1);
        for (std::size_t i = 0; i < space.free_vars.size(); ++i)
            free_index[space.free_vars[i]] = std::int64_t(i);
        for (std::size_t k = 0; k < space.forced.size(); ++k)
            for (VarId v : space.forced[k].support)
                dep_masks_[std::size_t(free_index[v])][k >> 6] ^= std::uint64_t(1) << (k & 63);
    }

    std::size_t free_count() const { return free_count_; }

    // distance |D| + |odd(D)| for D = bits of `mask`; masks must be fed
    // in increasing order starting at 0
    std::uint32_t advance_to(std::uint64_t mask) {
        std::uint64_t changed = mask ^ current_;
        while (changed) {
            std::size_t j = std::size_t(std::countr_zero(changed));
            changed &= changed - 1;
            for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= dep_masks_[j][w];
        }
        current_ = mask;
        std::uint32_t dist = std::uint32_t(std::popcount(mask));
        for (std::uint64_t w : words_) dist += std::uint32_t(std::popcount(w));
        return dist;
    }

  private:
    std::size_t free_count_;
    std::uint64_t current_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::vector<std::uint64_t>> dep_masks_;
};

inline std::vector<bool> mask_to_free_bits(std::uint64_t mask, std::size_t k) {
    std::vector<bool> bits(k, false);
    for (std::size_t j = 0; j < k; ++j) bits[j] = (mask >> j) & 1u;
    return bits;
}

inline void check_affine_witness(const AffineSystem& sys, DifferQuery q,
                                 const DifferAnswer& ans) {
    if (!ans.witness) return;
    internal_check(evaluate_affine(sys, ans.witness->first) &&
                       evaluate_affine(sys, ans.witness->second),
                   "affine witness does not satisfy the system");
    std::uint32_t dist = hamming_distance(ans.witness->first, ans.witness->second);
    internal_check(q.mode == Mode::Max ? dist >= q.d : dist == q.d,
                   "affine witness distance violates the query");
}

}  // namespace detail

inline DifferAnswer max_differ_fpt(const AffineSystem& input, std::uint32_t d,
                                   FptStats* stats = nullptr) {
    AffineSystem sys = normalized(input);
    SolutionSpace space = solve_affine(sys);
    DifferQuery q{Mode::Max, d};
    if (!space.consistent()) return DifferAnswer::make_unsat();

    const std::size_t f = space.free_vars.size();
    if (f == 0) {
        if (d > 0) return DifferAnswer::make_no();
        Assignment only = extend_free_assignment(space, {});
        DifferAnswer ans = DifferAnswer::make_yes(only, only);
        detail::check_affine_witness(sys, q, ans);
        return ans;
    }
    if (f >= d) {
        DifferAnswer ans = DifferAnswer::make_yes(
            extend_free_assignment(space, std::vector<bool>(f, false)),
            extend_free_assignment(space, std::vector<bool>(f, true)));
        detail::check_affine_witness(sys, q, ans);
        return ans;
    }

    // f <= d-1: guess the differing free subset, at most 2^(d-1) guesses
    if (f >= 63)
        throw std::runtime_error("max_differ_fpt: 2^f subset enumeration is infeasible");
    detail::FreeSubsetWalker walker(space);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << f); ++mask) {
        if (stats) ++stats->subsets_enumerated;
        if (walker.advance_to(mask) >= d) {
            DifferAnswer ans = DifferAnswer::make_yes(
                extend_free_assignment(space, std::vector<bool>(f, false)),
                extend_free_assignment(space, detail::mask_to_free_bits(mask, f)));
            detail::check_affine_witness(sys, q, ans);
            return ans;
        }
    }
    return DifferAnswer::make_no();
}

inline constexpr std::size_t kDefaultFreeEnumCap = 24;

// Exhaustive in the number of free variables. Exact Differ on affine
// systems is W[1]-hard in d, so this deliberately stays an exponential
// oracle behind a cap rather than pretending to be an algorithm.
inline DifferAnswer exact_differ_free_enum(const AffineSystem& input, std::uint32_t d,
                                           std::size_t free_cap = kDefaultFreeEnumCap) {
    AffineSystem sys = normalized(input);
    SolutionSpace space = solve_affine(sys);
    DifferQuery q{Mode::Exact, d};
    if (!space.consistent()) return DifferAnswer::make_unsat();

    const std::size_t f = space.free_vars.size();
    if (f > free_cap || f >= 63)
        throw std::runtime_error("exact_differ_free_enum: free-variable cap exceeded");

    detail::FreeSubsetWalker walker(space);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << f); ++mask) {
        if (walker.advance_to(mask) == d) {
            DifferAnswer ans = DifferAnswer::make_yes(
                extend_free_assignment(space, std::vector<bool>(f, false)),
                extend_free_assignment(space, detail::mask_to_free_bits(mask, f)));
            detail::check_affine_witness(sys, q, ans);
            return ans;
        }
    }
    return DifferAnswer::make_no();
}

// ---------------------------------------------------------------------------
// Kernelization for Max Differ

struct ReducedInstance {
    AffineSystem system;
    std::uint32_t d = 0;
    std::vector<VarId> orig_of;  // reduced index -> original index
    std::vector<std::pair<VarId, bool>> dropped_constants;
};

struct KernelResult {
    std::variant<DifferAnswer, ReducedInstance> value;

    bool decided() const { return std::holds_alternative<DifferAnswer>(value); }
    const DifferAnswer& answer() const { return std::get<DifferAnswer>(value); }
    const ReducedInstance& reduced() const { return std::get<ReducedInstance>(value); }
};

inline KernelResult kernelize(const AffineSystem& input, std::uint32_t d) {
    AffineSystem sys = normalized(input);
    SolutionSpace space = solve_affine(sys);
    DifferQuery q{Mode::Max, d};
    if (!space.consistent()) return {DifferAnswer::make_unsat()};

    const std::size_t f = space.free_vars.size();
    if (f == 0) {
        if (d > 0) return {DifferAnswer::make_no()};
        Assignment only = extend_free_assignment(space, {});
        return {DifferAnswer::make_yes(only, only)};
    }
    if (f >= d) {
        DifferAnswer ans = DifferAnswer::make_yes(
            extend_free_assignment(space, std::vector<bool>(f, false)),
            extend_free_assignment(space, std::vector<bool>(f, true)));
        detail::check_affine_witness(sys, q, ans);
        return {std::move(ans)};
    }

    // A free variable with >= d-1 dependents yields distance >= d by
    // flipping it alone.
    std::vector<std::uint32_t> dependents(space.n, 0);
    for (const ForcedExpr& e : space.forced)
        for (VarId v : e.support) ++dependents[v];
    for (std::size_t i = 0; i < f; ++i) {
        if (dependents[space.free_vars[i]] + 1 >= d) {
            std::vector<bool> indicator(f, false);
            indicator[i] = true;
            DifferAnswer ans = DifferAnswer::make_yes(
                extend_free_assignment(space, std::vector<bool>(f, false)),
                extend_free_assignment(space, indicator));
            detail::check_affine_witness(sys, q, ans);
            return {std::move(ans)};
        }
    }

    // Rebuild the system from the forced expressions; constant forced
    // variables can never differ, so they and their equations go.
    ReducedInstance red;
    red.d = d;
    std::vector<std::int64_t> new_index(space.n, -1);
    for (VarId v : space.free_vars) {
        new_index[v] = std::int64_t(red.orig_of.size());
        red.orig_of.push_back(v);
    }
    for (const ForcedExpr& e : space.forced) {
        if (e.support.empty()) {
            red.dropped_constants.emplace_back(e.target, e.constant);
        } else {
            new_index[e.target] = std::int64_t(red.orig_of.size());
            red.orig_of.push_back(e.target);
        }
    }
    std::sort(red.orig_of.begin(), red.orig_of.end());
    for (std::size_t i = 0; i < red.orig_of.size(); ++i)
        new_index[red.orig_of[i]] = std::int64_t(i);

    red.system.n = VarId(red.orig_of.size());
    if (!sys.weights.empty()) {
        red.system.weights.reserve(red.orig_of.size());
        for (VarId v : red.orig_of) red.system.weights.push_back(sys.weights[v]);
    }
    for (const ForcedExpr& e : space.forced) {
        if (e.support.empty()) continue;
        AffineEquation eq;
        eq.rhs = e.constant;
        eq.vars.push_back(VarId(new_index[e.target]));
        for (VarId v : e.support) eq.vars.push_back(VarId(new_index[v]));
        red.system.equations.push_back(normalized_equation(eq));
    }

    internal_check(red.system.n <= (d - 1) * (d - 1) &&
                       red.system.equations.size() <= std::size_t(d - 1) * (d - 2),
                   "kernelize: size bound violated");
    return {std::move(red)};
}

// Kernel first, then the FPT search on whatever is left; witnesses found
// on the reduced system lift back by reinstating the dropped constants.
inline DifferAnswer max_differ_affine(const AffineSystem& input, std::uint32_t d,
                                      FptStats* stats = nullptr) {
    AffineSystem sys = normalized(input);
    KernelResult kr = kernelize(sys, d);
    if (kr.decided()) return kr.answer();

    const ReducedInstance& red = kr.reduced();
    DifferAnswer reduced_answer = max_differ_fpt(red.system, red.d, stats);
    internal_check(reduced_answer.decision != Decision::UnsatNo,
                   "max_differ_affine: reduced system cannot be inconsistent");
    if (!reduced_answer.yes() || !reduced_answer.witness) return reduced_answer;

    auto lift = [&](const Assignment& t) {
        Assignment a(sys.n);
        for (std::size_t i = 0; i < red.orig_of.size(); ++i) a.set(red.orig_of[i], t.get(VarId(i)));
        for (auto [v, value] : red.dropped_constants) a.set(v, value);
        return a;
    };
    DifferAnswer ans = DifferAnswer::make_yes(lift(reduced_answer.witness->first),
                                              lift(reduced_answer.witness->second));
    detail::check_affine_witness(sys, DifferQuery{Mode::Max, d}, ans);
    return ans;
}

}  // namespace differsat
