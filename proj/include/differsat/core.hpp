#pragma once

// Shared vocabulary for the differ solvers: variables, literals, clauses,
// XOR equations, assignments, queries and answers, plus evaluation and
// Hamming distance. All types are plain immutable values; every operation
// here is a pure function.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "differsat/bigint.hpp"

namespace differsat {

using VarId = std::uint32_t;

struct Literal {
    VarId var = 0;
    bool positive = true;

    // 1-based signed encoding used by the file formats.
    int to_dimacs() const { return positive ? int(var) + 1 : -(int(var) + 1); }
    static Literal from_dimacs(int lit) {
        if (lit == 0) throw std::invalid_argument("literal 0 is reserved");
        return Literal{VarId(lit > 0 ? lit - 1 : -lit - 1), lit > 0};
    }
    friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(VarId v) { return Literal{v, true}; }
inline Literal neg(VarId v) { return Literal{v, false}; }

struct Clause {
    std::vector<Literal> literals;
    friend bool operator==(const Clause&, const Clause&) = default;
};

struct CnfFormula {
    VarId n = 0;
    std::vector<Clause> clauses;
    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// One XOR constraint: the variables in `vars` must sum to `rhs` mod 2.
// Empty `vars` with rhs=1 is the inconsistent equation 0=1 and is legal input.
struct AffineEquation {
    std::vector<VarId> vars;
    bool rhs = false;
    friend bool operator==(const AffineEquation&, const AffineEquation&) = default;
};

// Conjunction of XOR equations over GF(2). `weights` is either empty
// (every variable has weight 1) or has one entry >= 1 per variable; the
// weights only matter to the 2-affine component algorithm.
struct AffineSystem {
    VarId n = 0;
    std::vector<AffineEquation> equations;
    std::vector<std::uint32_t> weights;

    std::uint32_t weight(VarId v) const { return weights.empty() ? 1u : weights[v]; }
    friend bool operator==(const AffineSystem&, const AffineSystem&) = default;
};

// Total truth assignment, bit-packed so distance computations stay cheap.
class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(std::size_t n) : size_(n), blocks_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(VarId v) const { return (blocks_[v >> 6] >> (v & 63)) & 1u; }
    void set(VarId v, bool value) {
        std::uint64_t mask = std::uint64_t(1) << (v & 63);
        if (value)
            blocks_[v >> 6] |= mask;
        else
            blocks_[v >> 6] &= ~mask;
    }
    void flip(VarId v) { blocks_[v >> 6] ^= std::uint64_t(1) << (v & 63); }

    const std::vector<std::uint64_t>& blocks() const { return blocks_; }

    // "0101" with position 0 first; handy in tests and diagnostics.
    static Assignment from_string(const std::string& bits) {
        Assignment a(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != '0' && bits[i] != '1')
                throw std::invalid_argument("assignment string must be over {0,1}");
            a.set(VarId(i), bits[i] == '1');
        }
        return a;
    }
    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i)
            if (get(VarId(i))) s[i] = '1';
        return s;
    }

    friend bool operator==(const Assignment&, const Assignment&) = default;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> blocks_;
};

enum class Mode { Max, Exact };

struct DifferQuery {
    Mode mode = Mode::Max;
    std::uint32_t d = 0;
};

enum class Decision { Yes, No, UnsatNo };

// Answer to a differ query. A witness, when present, is a pair of
// satisfying assignments whose distance meets the query (>= d for Max,
// == d for Exact). UnsatNo means the formula has no satisfying
// assignment at all.
struct DifferAnswer {
    Decision decision = Decision::No;
    std::optional<std::pair<Assignment, Assignment>> witness;
    std::optional<BigUint> pair_count;

    bool yes() const { return decision == Decision::Yes; }

    static DifferAnswer make_yes(Assignment a, Assignment b) {
        DifferAnswer ans;
        ans.decision = Decision::Yes;
        ans.witness = {std::move(a), std::move(b)};
        return ans;
    }
    static DifferAnswer make_no() { return DifferAnswer{Decision::No, {}, {}}; }
    static DifferAnswer make_unsat() { return DifferAnswer{Decision::UnsatNo, {}, {}}; }
};

inline const char* to_string(Decision d) {
    switch (d) {
        case Decision::Yes: return "YES";
        case Decision::No: return "NO";
        default: return "UNSAT-NO";
    }
}

// Guards for conditions that only a bug can violate.
inline void internal_check(bool condition, const char* message) {
    if (!condition) throw std::logic_error(message);
}

inline std::uint32_t hamming_distance(const Assignment& a, const Assignment& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < a.blocks().size(); ++i)
        d += std::uint32_t(std::popcount(a.blocks()[i] ^ b.blocks()[i]));
    return d;
}

// Sum of per-variable weights over the positions where a and b disagree.
// Coincides with hamming_distance when weights are all 1 (or empty).
inline std::uint64_t weighted_distance(const Assignment& a, const Assignment& b,
                                       const std::vector<std::uint32_t>& weights) {
    if (a.size() != b.size())
        throw std::invalid_argument("weighted_distance: length mismatch");
    if (weights.empty()) return hamming_distance(a, b);
    std::uint64_t d = 0;
    for (VarId v = 0; v < a.size(); ++v)
        if (a.get(v) != b.get(v)) d += weights[v];
    return d;
}

inline bool evaluate_cnf(const CnfFormula& phi, const Assignment& sigma) {
    if (sigma.size() != phi.n)
        throw std::invalid_argument("evaluate_cnf: length mismatch");
    for (const Clause& c : phi.clauses) {
        bool sat = false;
        for (const Literal& l : c.literals)
            if (sigma.get(l.var) == l.positive) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

inline bool evaluate_affine(const AffineSystem& sys, const Assignment& sigma) {
    if (sigma.size() != sys.n)
        throw std::invalid_argument("evaluate_affine: length mismatch");
    for (const AffineEquation& eq : sys.equations) {
        bool acc = false;
        for (VarId v : eq.vars) acc ^= sigma.get(v);
        if (acc != eq.rhs) return false;
    }
    return true;
}

// Normalization. Clauses drop duplicate literals and tautological clauses
// disappear; duplicated variables in an equation cancel pairwise and the
// remaining support is sorted. Neither changes the satisfying set.

inline std::optional<Clause> normalized_clause(const Clause& c) {
    Clause out;
    for (const Literal& l : c.literals) {
        bool dup = false;
        for (const Literal& k : out.literals) {
            if (k.var == l.var) {
                if (k.positive != l.positive) return std::nullopt;  // tautology
                dup = true;
            }
        }
        if (!dup) out.literals.push_back(l);
    }
    return out;
}

inline CnfFormula normalized(const CnfFormula& phi) {
    CnfFormula out;
    out.n = phi.n;
    for (const Clause& c : phi.clauses) {
        if (c.literals.empty())
            throw std::invalid_argument("empty clause");
        for (const Literal& l : c.literals)
            if (l.var >= phi.n)
                throw std::invalid_argument("literal variable out of range");
        if (auto nc = normalized_clause(c)) out.clauses.push_back(std::move(*nc));
    }
    return out;
}

inline AffineEquation normalized_equation(const AffineEquation& eq) {
    std::vector<VarId> vars = eq.vars;
    std::sort(vars.begin(), vars.end());
    AffineEquation out;
    out.rhs = eq.rhs;
    for (std::size_t i = 0; i < vars.size();) {
        std::size_t j = i;
        while (j < vars.size() && vars[j] == vars[i]) ++j;
        if ((j - i) % 2 == 1) out.vars.push_back(vars[i]);
        i = j;
    }
    return out;
}

inline AffineSystem normalized(const AffineSystem& sys) {
    if (!sys.weights.empty()) {
        if (sys.weights.size() != sys.n)
            throw std::invalid_argument("weight vector length mismatch");
        for (std::uint32_t w : sys.weights)
            if (w == 0) throw std::invalid_argument("variable weights must be >= 1");
    }
    AffineSystem out;
    out.n = sys.n;
    out.weights = sys.weights;
    for (const AffineEquation& eq : sys.equations) {
        for (VarId v : eq.vars)
            if (v >= sys.n) throw std::invalid_argument("equation variable out of range");
        out.equations.push_back(normalized_equation(eq));
    }
    return out;
}

}  // namespace differsat
