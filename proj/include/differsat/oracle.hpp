#pragma once

// Exhaustive ground truth: enumerate all 2^n assignments, collect the
// satisfying set in lexicographic order, and histogram the pairwise
// Hamming distances over ordered pairs. Verification infrastructure, not
// a solver; the cap is a hard error because a truncated oracle is worse
// than none.

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "differsat/core.hpp"

namespace differsat {

using Formula = std::variant<CnfFormula, AffineSystem>;

inline VarId formula_var_count(const Formula& f) {
    return std::visit([](const auto& x) { return x.n; }, f);
}

inline bool evaluate_formula(const Formula& f, const Assignment& sigma) {
    if (std::holds_alternative<CnfFormula>(f))
        return evaluate_cnf(std::get<CnfFormula>(f), sigma);
    return evaluate_affine(std::get<AffineSystem>(f), sigma);
}

struct OracleReport {
    VarId n = 0;
    std::vector<Assignment> satisfying;        // lexicographic order
    std::vector<std::uint64_t> pair_counts;    // ordered pairs per distance, size n+1
    std::uint32_t max_distance = 0;            // 0 when satisfying is empty

    std::uint64_t satisfying_count() const { return satisfying.size(); }
};

inline constexpr std::uint32_t kDefaultOracleCap = 20;

inline Assignment assignment_from_counter(VarId n, std::uint64_t i) {
    Assignment a(n);
    for (VarId j = 0; j < n; ++j)
        if ((i >> (n - 1 - j)) & 1u) a.set(j, true);
    return a;
}

inline OracleReport brute_force_report(const Formula& formula,
                                       std::uint32_t cap = kDefaultOracleCap) {
    const VarId n = formula_var_count(formula);
    if (n > cap) throw std::invalid_argument("brute_force_report: variable cap exceeded");

    OracleReport report;
    report.n = n;
    report.pair_counts.assign(std::size_t(n) + 1, 0);
    for (std::uint64_t i = 0; i < (std::uint64_t(1) << n); ++i) {
        Assignment a = assignment_from_counter(n, i);
        if (evaluate_formula(formula, a)) report.satisfying.push_back(std::move(a));
    }
    for (const Assignment& a : report.satisfying)
        for (const Assignment& b : report.satisfying) {
            std::uint32_t d = hamming_distance(a, b);
            ++report.pair_counts[d];
            if (d > report.max_distance) report.max_distance = d;
        }

    // internal sanity: column 0 counts the diagonal, the total is |sat|^2
    std::uint64_t total = 0;
    for (std::uint64_t c : report.pair_counts) total += c;
    std::uint64_t s = report.satisfying_count();
    if (total != s * s || report.pair_counts[0] != s)
        throw std::logic_error("brute_force_report: histogram self-check failed");
    return report;
}

// Decision straight off the histogram; the witness is the first pair in
// enumeration order that meets the query.
inline DifferAnswer oracle_differ(const Formula& formula, DifferQuery q,
                                  std::uint32_t cap = kDefaultOracleCap) {
    OracleReport report = brute_force_report(formula, cap);
    if (report.satisfying.empty()) return DifferAnswer::make_unsat();

    BigUint count;
    for (std::uint32_t d = 0; d <= report.n; ++d) {
        bool in_range = (q.mode == Mode::Exact) ? (d == q.d) : (d >= q.d);
        if (in_range) count += BigUint(report.pair_counts[d]);
    }
    if (count.is_zero()) {
        DifferAnswer ans = DifferAnswer::make_no();
        ans.pair_count = count;
        return ans;
    }
    for (const Assignment& a : report.satisfying)
        for (const Assignment& b : report.satisfying) {
            std::uint32_t d = hamming_distance(a, b);
            if (q.mode == Mode::Exact ? d == q.d : d >= q.d) {
                DifferAnswer ans = DifferAnswer::make_yes(a, b);
                ans.pair_count = count;
                return ans;
            }
        }
    throw std::logic_error("oracle_differ: histogram and scan disagree");
}

}  // namespace differsat
