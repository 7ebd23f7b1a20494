#pragma once

// The hardness constructions, shipped as instance generators. Each one
// maps a source problem instance to a differ query whose answer matches
// the source answer; the test suite checks both directions of every
// equivalence on tiny inputs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "differsat/core.hpp"

namespace differsat {

struct SimpleGraph {
    std::uint32_t vertex_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

inline void validate_graph(const SimpleGraph& g) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> seen;
    for (auto [u, v] : g.edges) {
        if (u == v) throw std::invalid_argument("graph has a self-loop");
        if (u >= g.vertex_count || v >= g.vertex_count)
            throw std::invalid_argument("graph edge endpoint out of range");
        auto key = std::minmax(u, v);
        if (++seen[{key.first, key.second}] > 1)
            throw std::invalid_argument("graph has a multi-edge");
    }
}

inline std::vector<std::uint32_t> vertex_degrees(const SimpleGraph& g) {
    std::vector<std::uint32_t> deg(g.vertex_count, 0);
    for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

struct SetSystem {
    std::uint32_t universe = 0;
    std::vector<std::vector<std::uint32_t>> family;
    std::uint32_t k = 1;
};

inline void validate_set_system(const SetSystem& s) {
    if (s.k < 1) throw std::invalid_argument("set system requires k >= 1");
    for (const auto& subset : s.family)
        for (std::uint32_t u : subset)
            if (u >= s.universe) throw std::invalid_argument("set element out of range");
}

// A generated instance remembers which variable plays which gadget role.
struct GeneratedInstance {
    std::variant<AffineSystem, CnfFormula> formula;
    DifferQuery query;
    std::vector<std::pair<std::string, VarId>> variable_names;

    const AffineSystem& affine() const { return std::get<AffineSystem>(formula); }
    const CnfFormula& cnf() const { return std::get<CnfFormula>(formula); }
};

// Independent Set on cubic graphs -> Exact Differ on (3,4)-affine systems.
// Each vertex gets a variable, 3k chained copies forced equal to it, and
// each edge gets a slack variable y_e with x_u ^ x_v ^ y_e = 0; the target
// distance is k(3k+4).
inline GeneratedInstance from_cubic_independent_set(const SimpleGraph& g, std::uint32_t k) {
    validate_graph(g);
    if (k < 1) throw std::invalid_argument("from_cubic_independent_set: k must be >= 1");
    for (std::uint32_t deg : vertex_degrees(g))
        if (deg != 3) throw std::invalid_argument("from_cubic_independent_set: graph is not cubic");

    GeneratedInstance out;
    AffineSystem sys;
    const std::uint32_t copies = 3 * k;
    auto x_of = [&](std::uint32_t v) { return VarId(v * (copies + 1)); };
    for (std::uint32_t v = 0; v < g.vertex_count; ++v) {
        out.variable_names.emplace_back("x_v" + std::to_string(v), x_of(v));
        for (std::uint32_t c = 1; c <= copies; ++c)
            out.variable_names.emplace_back("x_v" + std::to_string(v) + "^" + std::to_string(c),
                                            x_of(v) + c);
    }
    const VarId y_base = VarId(g.vertex_count * (copies + 1));
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        out.variable_names.emplace_back("y_e" + std::to_string(e), y_base + VarId(e));
    sys.n = y_base + VarId(g.edges.size());

    for (std::uint32_t v = 0; v < g.vertex_count; ++v)
        for (std::uint32_t c = 0; c < copies; ++c)
            sys.equations.push_back({{x_of(v) + c, x_of(v) + c + 1}, false});
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        sys.equations.push_back(
            {{x_of(g.edges[e].first), x_of(g.edges[e].second), y_base + VarId(e)}, false});

    // the construction promises a (3,4)-affine system
    std::vector<std::uint32_t> occurrences(sys.n, 0);
    for (const AffineEquation& eq : sys.equations) {
        internal_check(eq.vars.size() <= 3, "cubic-IS instance must be 3-affine");
        for (VarId v : eq.vars)
            internal_check(++occurrences[v] <= 4,
                           "cubic-IS instance must keep every variable in at most 4 equations");
    }

    out.formula = std::move(sys);
    out.query = DifferQuery{Mode::Exact, k * (3 * k + 4)};
    return out;
}

// Exact Even Set -> Exact Differ Affine: one homogeneous equation per
// family set, target distance k.
inline GeneratedInstance from_exact_even_set(const SetSystem& s) {
    validate_set_system(s);
    GeneratedInstance out;
    AffineSystem sys;
    sys.n = s.universe;
    for (std::uint32_t u = 0; u < s.universe; ++u)
        out.variable_names.emplace_back("x_u" + std::to_string(u), VarId(u));
    for (const auto& subset : s.family) {
        AffineEquation eq;
        for (std::uint32_t u : subset) eq.vars.push_back(VarId(u));
        eq.rhs = false;
        sys.equations.push_back(std::move(eq));
    }
    out.formula = std::move(sys);
    out.query = DifferQuery{Mode::Exact, s.k};
    return out;
}

// (Exact) Odd Set -> Exact/Max Differ Affine in the dual parameter:
// odd-sized sets constrain their xor to 1; an even-sized set S gets a
// gadget y_S tied to k copies z_S^i and xored into S's equation. The
// query asks for distance n-k, i.e. at most / exactly k overlaps.
inline GeneratedInstance from_odd_set(const SetSystem& s, bool exact) {
    validate_set_system(s);
    GeneratedInstance out;
    AffineSystem sys;
    for (std::uint32_t u = 0; u < s.universe; ++u)
        out.variable_names.emplace_back("x_u" + std::to_string(u), VarId(u));
    VarId next = s.universe;

    for (std::size_t idx = 0; idx < s.family.size(); ++idx) {
        const auto& subset = s.family[idx];
        AffineEquation eq;
        for (std::uint32_t u : subset) eq.vars.push_back(VarId(u));
        if (subset.size() % 2 == 1) {
            eq.rhs = true;
            sys.equations.push_back(std::move(eq));
        } else {
            VarId y = next++;
            out.variable_names.emplace_back("y_S" + std::to_string(idx), y);
            for (std::uint32_t i = 1; i <= s.k; ++i) {
                VarId z = next++;
                out.variable_names.emplace_back(
                    "z_S" + std::to_string(idx) + "^" + std::to_string(i), z);
                sys.equations.push_back({{y, z}, false});
            }
            eq.vars.push_back(y);
            eq.rhs = false;
            sys.equations.push_back(std::move(eq));
        }
    }
    sys.n = next;
    if (s.k > sys.n)
        throw std::invalid_argument("from_odd_set: k exceeds the variable count");
    out.formula = std::move(sys);
    out.query = DifferQuery{exact ? Mode::Exact : Mode::Max, sys.n - s.k};
    return out;
}

// Independent Set -> Exact/Max Differ 2-SAT on monotone formulas. Two
// variables x_v, y_v per vertex; edge clauses on both layers and a clause
// x_u | y_v for every ordered vertex pair (u = v included); d = 2k.
inline GeneratedInstance from_independent_set_2cnf(const SimpleGraph& g, std::uint32_t k,
                                                   Mode mode) {
    validate_graph(g);
    if (k < 1) throw std::invalid_argument("from_independent_set_2cnf: k must be >= 1");
    GeneratedInstance out;
    CnfFormula phi;
    phi.n = 2 * g.vertex_count;
    auto x_of = [&](std::uint32_t v) { return VarId(v); };
    auto y_of = [&](std::uint32_t v) { return VarId(g.vertex_count + v); };
    for (std::uint32_t v = 0; v < g.vertex_count; ++v) {
        out.variable_names.emplace_back("x_v" + std::to_string(v), x_of(v));
        out.variable_names.emplace_back("y_v" + std::to_string(v), y_of(v));
    }
    std::vector<Clause> clauses;
    for (auto [u, v] : g.edges) clauses.push_back({{pos(x_of(u)), pos(x_of(v))}});
    for (auto [u, v] : g.edges) clauses.push_back({{pos(y_of(u)), pos(y_of(v))}});
    for (std::uint32_t u = 0; u < g.vertex_count; ++u)
        for (std::uint32_t v = 0; v < g.vertex_count; ++v)
            clauses.push_back({{pos(x_of(u)), pos(y_of(v))}});
    // distinct ordered pairs never collide, but keep duplicates out anyway
    std::set<std::pair<VarId, VarId>> seen;
    for (const Clause& c : clauses)
        if (seen.emplace(c.literals[0].var, c.literals[1].var).second)
            phi.clauses.push_back(c);
    out.formula = std::move(phi);
    out.query = DifferQuery{mode, 2 * k};
    return out;
}

// --- common source graphs for tests and the CLI ----------------------------

inline SimpleGraph complete_graph(std::uint32_t n) {
    SimpleGraph g;
    g.vertex_count = n;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

inline SimpleGraph complete_bipartite_33() {
    SimpleGraph g;
    g.vertex_count = 6;
    for (std::uint32_t u = 0; u < 3; ++u)
        for (std::uint32_t v = 3; v < 6; ++v) g.edges.emplace_back(u, v);
    return g;
}

// triangular prism: two triangles joined by a perfect matching
inline SimpleGraph prism_graph() {
    SimpleGraph g;
    g.vertex_count = 6;
    g.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
    return g;
}

}  // namespace differsat
