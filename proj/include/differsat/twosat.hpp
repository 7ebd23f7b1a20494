#pragma once

// Max/Exact Differ on (2,2)-CNF formulas.
//
// Every variable x contributes vertices x[0] and x[1] joined by a
// matching-edge; every clause contributes a clause-edge between the
// endpoints of its two literals (literal x at x[1], literal ~x at x[0]).
// Because each variable occurs in at most two clauses, every component is
// a path or a single cycle with pendant matching-edges. Path-like and
// cycle-like-with-pendant components support any number of differing
// variables up to their size (odd cycles: size minus one); pure even
// cycles have exactly two satisfying assignments and flip wholesale. The
// Max answer is therefore n minus the number of odd-cycle-like
// components, and Exact reduces to Subset Sum over the pure even cycle
// sizes plus a flexible budget.
//
// Unit clauses are propagated away first; variables they fix can never
// differ and d keeps counting against the original n.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "differsat/core.hpp"
#include "differsat/subset_sum.hpp"

namespace differsat {

inline bool check_22cnf(const CnfFormula& input) {
    CnfFormula phi = normalized(input);
    std::vector<std::uint32_t> occurrences(phi.n, 0);
    for (const Clause& c : phi.clauses) {
        if (c.literals.size() > 2) return false;
        for (const Literal& l : c.literals)
            if (++occurrences[l.var] > 2) return false;
    }
    return true;
}

struct VariableGraph {
    enum class EdgeKind { Clause, Matching };
    struct Edge {
        std::uint32_t u = 0;
        std::uint32_t v = 0;
        EdgeKind kind = EdgeKind::Clause;
    };

    VarId n = 0;                                    // vertices are 2n
    std::vector<Edge> edges;                        // parallel edges allowed
    std::vector<std::vector<std::uint32_t>> adjacency;  // vertex -> edge ids

    // x[value] for variable x; the vertex is "true" under sigma iff
    // sigma(x) == value
    static std::uint32_t vertex(VarId var, bool value) { return 2 * var + (value ? 1 : 0); }
    static VarId var_of(std::uint32_t vertex) { return vertex >> 1; }
    static bool value_of(std::uint32_t vertex) { return vertex & 1; }
    static std::uint32_t partner(std::uint32_t vertex) { return vertex ^ 1; }
};

enum class ComponentKind { PathLike, EvenCycleLikeWithPendants, PureEvenCycle, OddCycleLike };

struct ComponentReport {
    ComponentKind kind = ComponentKind::PathLike;
    std::vector<VarId> vars;  // sorted
};

inline const char* to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::PathLike: return "path-like";
        case ComponentKind::EvenCycleLikeWithPendants: return "even-cycle-like-with-pendants";
        case ComponentKind::PureEvenCycle: return "pure-even-cycle";
        default: return "odd-cycle-like";
    }
}

namespace detail {

inline std::uint32_t literal_vertex(const Literal& l) {
    return VariableGraph::vertex(l.var, l.positive);
}

inline VariableGraph build_graph_over(VarId n, const std::vector<Clause>& binaries,
                                      const std::vector<char>& active) {
    VariableGraph g;
    g.n = n;
    g.adjacency.assign(std::size_t(2) * n, {});
    auto add_edge = [&](std::uint32_t u, std::uint32_t v, VariableGraph::EdgeKind kind) {
        std::uint32_t id = std::uint32_t(g.edges.size());
        g.edges.push_back({u, v, kind});
        g.adjacency[u].push_back(id);
        g.adjacency[v].push_back(id);
    };
    for (VarId x = 0; x < n; ++x)
        if (active[x])
            add_edge(VariableGraph::vertex(x, false), VariableGraph::vertex(x, true),
                     VariableGraph::EdgeKind::Matching);
    for (const Clause& c : binaries) {
        internal_check(c.literals.size() == 2, "graph construction expects binary clauses");
        add_edge(literal_vertex(c.literals[0]), literal_vertex(c.literals[1]),
                 VariableGraph::EdgeKind::Clause);
    }
    return g;
}

struct ComponentAnalysis {
    ComponentKind kind = ComponentKind::PathLike;
    std::vector<VarId> vars;           // sorted
    std::vector<std::uint32_t> spine;  // PathLike: caterpillar spine in order
    std::vector<std::uint32_t> cycle;  // cycle kinds: cycle vertices in order
    bool has_pendant = false;
};

// Walks one component at a time; the scratch buffers are vertex-indexed
// and get reset after each component, so analyzing a whole graph stays
// linear even when it splinters into many components.
class ComponentAnalyzer {
  public:
    explicit ComponentAnalyzer(const VariableGraph& g)
        : g_(g),
          mark_(g.adjacency.size(), 0),
          degree_(g.adjacency.size(), 0),
          parent_(g.adjacency.size(), kUnvisited),
          dist_(g.adjacency.size(), 0) {}

    ComponentAnalysis analyze(const std::vector<std::uint32_t>& vertices) {
        ComponentAnalysis out = run(vertices);
        for (std::uint32_t v : vertices) {  // leave the scratch clean
            mark_[v] = 0;
            degree_[v] = 0;
            parent_[v] = kUnvisited;
            dist_[v] = 0;
        }
        return out;
    }

  private:
    static constexpr std::int64_t kUnvisited = -2;
    static constexpr std::int64_t kRoot = -1;
    enum MarkBits : char { kInComponent = 1, kStripped = 2, kSelected = 4 };

    std::uint32_t other_end(std::uint32_t eid, std::uint32_t u) const {
        const auto& e = g_.edges[eid];
        return (e.u == u) ? e.v : e.u;
    }

    // farthest vertex from start (smallest id on ties) with parent links
    std::uint32_t bfs_farthest(std::uint32_t start, const std::vector<std::uint32_t>& vertices) {
        for (std::uint32_t v : vertices) parent_[v] = kUnvisited;
        std::deque<std::uint32_t> queue{start};
        parent_[start] = kRoot;
        dist_[start] = 0;
        std::uint32_t best = start;
        while (!queue.empty()) {
            std::uint32_t u = queue.front();
            queue.pop_front();
            if (dist_[u] > dist_[best] || (dist_[u] == dist_[best] && u < best)) best = u;
            std::vector<std::uint32_t> next;
            for (std::uint32_t eid : g_.adjacency[u])
                if (parent_[other_end(eid, u)] == kUnvisited) next.push_back(other_end(eid, u));
            std::sort(next.begin(), next.end());
            for (std::uint32_t w : next) {
                if (parent_[w] != kUnvisited) continue;
                parent_[w] = u;
                dist_[w] = dist_[u] + 1;
                queue.push_back(w);
            }
        }
        return best;
    }

    std::vector<std::uint32_t> core_edges_of(std::uint32_t u) const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t eid : g_.adjacency[u])
            if (!(mark_[other_end(eid, u)] & kStripped)) out.push_back(eid);
        return out;
    }

    ComponentAnalysis run(const std::vector<std::uint32_t>& vertices) {
        static constexpr const char* kStructureError =
            "classify_components: component violates the path-or-cycle structure";
        ComponentAnalysis out;
        for (std::uint32_t v : vertices) {
            mark_[v] = kInComponent;
            degree_[v] = std::uint32_t(g_.adjacency[v].size());
            if (VariableGraph::value_of(v) == 0) out.vars.push_back(VariableGraph::var_of(v));
        }
        std::sort(out.vars.begin(), out.vars.end());

        // 2-core by stripping degree<=1 vertices
        std::deque<std::uint32_t> strip;
        for (std::uint32_t v : vertices)
            if (degree_[v] <= 1) strip.push_back(v);
        while (!strip.empty()) {
            std::uint32_t u = strip.front();
            strip.pop_front();
            if (mark_[u] & kStripped) continue;
            mark_[u] |= kStripped;
            for (std::uint32_t eid : g_.adjacency[u]) {
                std::uint32_t w = other_end(eid, u);
                if (!(mark_[w] & kStripped) && --degree_[w] <= 1) strip.push_back(w);
            }
        }
        std::vector<std::uint32_t> core;
        for (std::uint32_t v : vertices)
            if (!(mark_[v] & kStripped)) core.push_back(v);

        if (core.empty()) {
            out.kind = ComponentKind::PathLike;
            internal_check(vertices.size() >= 2, kStructureError);
            // diameter of the caterpillar: two BFS sweeps
            std::uint32_t a = bfs_farthest(*std::min_element(vertices.begin(), vertices.end()),
                                           vertices);
            std::uint32_t b = bfs_farthest(a, vertices);
            std::vector<std::uint32_t> path;
            for (std::int64_t v = b; v != kRoot; v = parent_[std::size_t(v)])
                path.push_back(std::uint32_t(v));
            // orient the spine to start at the smaller terminal vertex
            if (path.front() > path.back()) std::reverse(path.begin(), path.end());
            for (std::uint32_t v : path) mark_[v] |= kSelected;
            for (std::uint32_t v : vertices) {
                if (mark_[v] & kSelected) continue;
                out.has_pendant = true;
                internal_check(g_.adjacency[v].size() == 1, kStructureError);
                std::uint32_t eid = g_.adjacency[v][0];
                internal_check(g_.edges[eid].kind == VariableGraph::EdgeKind::Matching &&
                                   (mark_[other_end(eid, v)] & kSelected),
                               kStructureError);
            }
            std::size_t endpoint_count = 0;
            for (std::uint32_t v : vertices) endpoint_count += g_.adjacency[v].size();
            internal_check(endpoint_count == 2 * (vertices.size() - 1), kStructureError);
            out.spine = std::move(path);
            return out;
        }

        // single cycle: every core vertex keeps exactly two core-incident edges
        for (std::uint32_t v : core) internal_check(core_edges_of(v).size() == 2, kStructureError);

        std::uint32_t start = *std::min_element(core.begin(), core.end());
        auto first_edges = core_edges_of(start);
        std::uint32_t e0 = first_edges[0], e1 = first_edges[1];
        std::uint32_t first = (other_end(e0, start) < other_end(e1, start) ||
                               (other_end(e0, start) == other_end(e1, start) && e0 < e1))
                                  ? e0
                                  : e1;
        std::vector<std::uint32_t> cycle{start};
        std::uint32_t prev_edge = first;
        std::uint32_t cur = other_end(first, start);
        while (cur != start) {
            cycle.push_back(cur);
            auto es = core_edges_of(cur);
            std::uint32_t next_edge = (es[0] == prev_edge) ? es[1] : es[0];
            cur = other_end(next_edge, cur);
            prev_edge = next_edge;
        }
        internal_check(cycle.size() == core.size(), kStructureError);

        for (std::uint32_t v : vertices) {
            if (!(mark_[v] & kStripped)) continue;
            out.has_pendant = true;
            internal_check(g_.adjacency[v].size() == 1, kStructureError);
            std::uint32_t eid = g_.adjacency[v][0];
            internal_check(g_.edges[eid].kind == VariableGraph::EdgeKind::Matching &&
                               !(mark_[other_end(eid, v)] & kStripped),
                           kStructureError);
        }

        if (cycle.size() % 2 == 1) {
            internal_check(out.has_pendant,
                           "classify_components: odd cycle without a pendant matching-edge");
            out.kind = ComponentKind::OddCycleLike;
        } else {
            out.kind = out.has_pendant ? ComponentKind::EvenCycleLikeWithPendants
                                       : ComponentKind::PureEvenCycle;
        }
        out.cycle = std::move(cycle);
        return out;
    }

    const VariableGraph& g_;
    std::vector<char> mark_;
    std::vector<std::uint32_t> degree_;
    std::vector<std::int64_t> parent_;
    std::vector<std::uint32_t> dist_;
};

inline std::vector<ComponentAnalysis> analyze_graph(const VariableGraph& g,
                                                    const std::vector<VarId>& active_vars) {
    std::vector<char> visited(g.adjacency.size(), 0);
    ComponentAnalyzer analyzer(g);
    std::vector<ComponentAnalysis> out;
    for (VarId x : active_vars) {
        std::uint32_t seed = VariableGraph::vertex(x, false);
        if (visited[seed]) continue;
        std::vector<std::uint32_t> vertices;
        std::deque<std::uint32_t> queue{seed};
        visited[seed] = 1;
        while (!queue.empty()) {
            std::uint32_t u = queue.front();
            queue.pop_front();
            vertices.push_back(u);
            for (std::uint32_t eid : g.adjacency[u]) {
                const auto& e = g.edges[eid];
                std::uint32_t w = (e.u == u) ? e.v : e.u;
                if (!visited[w]) {
                    visited[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        out.push_back(analyzer.analyze(vertices));
    }
    // deterministic merge order: by smallest contained variable
    std::sort(out.begin(), out.end(),
              [](const ComponentAnalysis& a, const ComponentAnalysis& b) {
                  return a.vars.front() < b.vars.front();
              });
    return out;
}

struct UnitPropagation {
    bool conflict = false;
    std::vector<signed char> fixed;  // -1 unfixed, else 0/1
    std::vector<Clause> residual;    // binary clauses over unfixed variables
};

inline UnitPropagation propagate_units(const CnfFormula& phi) {
    UnitPropagation out;
    out.fixed.assign(phi.n, -1);
    std::vector<Clause> live = phi.clauses;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Clause> next;
        for (const Clause& c : live) {
            Clause rest;
            bool satisfied = false;
            for (const Literal& l : c.literals) {
                if (out.fixed[l.var] < 0)
                    rest.literals.push_back(l);
                else if ((out.fixed[l.var] == 1) == l.positive)
                    satisfied = true;
            }
            if (satisfied) continue;
            if (rest.literals.empty()) {
                out.conflict = true;
                return out;
            }
            if (rest.literals.size() == 1) {
                out.fixed[rest.literals[0].var] = rest.literals[0].positive ? 1 : 0;
                changed = true;
            } else {
                next.push_back(std::move(rest));
            }
        }
        live = std::move(next);
    }
    out.residual = std::move(live);
    return out;
}

// --- witness construction ---------------------------------------------------
//
// For a caterpillar spine v1, v2, ... the "alternating" pair fixes the
// odd-positioned vertices in sigma1 and the even-positioned ones in
// sigma2; a vertex whose matching partner hangs off the spine gets the
// complementary value on the other side. Every clause-edge joins
// consecutive spine positions, so each assignment satisfies it through
// its own fixed endpoint, and the two assignments differ on every
// variable of the component.

// Membership and position lookups for one walk order (spine or cycle).
class WalkIndex {
  public:
    explicit WalkIndex(std::span<const std::uint32_t> walk) {
        pos_.reserve(walk.size());
        for (std::size_t i = 0; i < walk.size(); ++i) pos_.emplace(walk[i], i);
    }
    bool contains(std::uint32_t vertex) const { return pos_.count(vertex) != 0; }
    bool earlier_than(std::uint32_t vertex, std::size_t idx) const {
        auto it = pos_.find(vertex);
        return it != pos_.end() && it->second < idx;
    }

  private:
    std::unordered_map<std::uint32_t, std::size_t> pos_;
};

inline void assign_spine_pair(std::span<const std::uint32_t> spine, Assignment& s1,
                              Assignment& s2) {
    WalkIndex index(spine);
    for (std::size_t idx = 0; idx < spine.size(); ++idx) {
        std::uint32_t w = spine[idx];
        VarId v = VariableGraph::var_of(w);
        bool bit = VariableGraph::value_of(w);
        bool partner_on_spine = index.contains(VariableGraph::partner(w));
        if (idx % 2 == 0) {  // odd position
            s1.set(v, bit);
            if (!partner_on_spine) s2.set(v, !bit);
        } else {
            s2.set(v, bit);
            if (!partner_on_spine) s1.set(v, !bit);
        }
    }
}

// The sigma1 side alone already satisfies every clause-edge of the spine;
// writing it to both assignments realizes zero differing variables.
inline void assign_spine_both(std::span<const std::uint32_t> spine, Assignment& s1,
                              Assignment& s2) {
    WalkIndex index(spine);
    for (std::size_t idx = 0; idx < spine.size(); ++idx) {
        std::uint32_t w = spine[idx];
        VarId v = VariableGraph::var_of(w);
        bool bit = VariableGraph::value_of(w);
        bool partner_on_spine = index.contains(VariableGraph::partner(w));
        if (idx % 2 == 0) {
            s1.set(v, bit);
            s2.set(v, bit);
        } else if (!partner_on_spine) {
            s1.set(v, !bit);
            s2.set(v, !bit);
        }
    }
}

inline std::size_t spine_var_count(std::span<const std::uint32_t> spine) {
    WalkIndex index(spine);
    std::size_t count = 0;
    for (std::uint32_t w : spine)
        if (!index.contains(VariableGraph::partner(w)) || w < VariableGraph::partner(w)) ++count;
    return count;
}

// Exactly mu differing variables on a path-like component: traverse until
// mu variables have been seen, cut the following clause-edge, run the
// alternating pair on the prefix and a single shared assignment on the
// suffix. The suffix starts at an odd position of its own sub-spine, so
// both sides keep the cut clause satisfied.
inline void assign_spine_exact(std::span<const std::uint32_t> spine, std::size_t mu,
                               Assignment& s1, Assignment& s2) {
    std::size_t total = spine_var_count(spine);
    internal_check(mu <= total, "assign_spine_exact: mu exceeds component size");
    if (mu == total) {
        assign_spine_pair(spine, s1, s2);
        return;
    }
    if (mu == 0) {
        assign_spine_both(spine, s1, s2);
        return;
    }
    WalkIndex index(spine);
    std::size_t seen = 0;
    std::size_t cut = 0;  // spine index of the stop vertex
    for (std::size_t idx = 0; idx < spine.size(); ++idx) {
        std::uint32_t partner = VariableGraph::partner(spine[idx]);
        if (index.earlier_than(partner, idx) || !index.contains(partner)) {
            if (++seen == mu) {
                cut = idx;
                break;
            }
        }
    }
    internal_check(cut + 1 < spine.size(), "assign_spine_exact: cut fell off the spine");
    internal_check(VariableGraph::var_of(spine[cut]) != VariableGraph::var_of(spine[cut + 1]),
                   "assign_spine_exact: cut edge is a matching-edge");
    assign_spine_pair(spine.first(cut + 1), s1, s2);
    assign_spine_both(spine.subspan(cut + 1), s1, s2);
}

// Cycle components reduce to paths by pinning one pendant-carrying cycle
// vertex on both sides; the even full-differ case walks the cycle with
// the same alternating rule instead.
inline void assign_cycle_pair(std::span<const std::uint32_t> cycle, Assignment& s1,
                              Assignment& s2) {
    internal_check(cycle.size() % 2 == 0, "assign_cycle_pair: odd cycle");
    WalkIndex index(cycle);
    for (std::size_t idx = 0; idx < cycle.size(); ++idx) {
        std::uint32_t w = cycle[idx];
        VarId v = VariableGraph::var_of(w);
        bool bit = VariableGraph::value_of(w);
        bool partner_on_cycle = index.contains(VariableGraph::partner(w));
        if (idx % 2 == 0) {
            s1.set(v, bit);
            if (!partner_on_cycle) s2.set(v, !bit);
        } else {
            s2.set(v, bit);
            if (!partner_on_cycle) s1.set(v, !bit);
        }
    }
}

inline void assign_cycle_both(std::span<const std::uint32_t> cycle, Assignment& s1,
                              Assignment& s2) {
    WalkIndex index(cycle);
    for (std::size_t idx = 0; idx < cycle.size(); ++idx) {
        std::uint32_t w = cycle[idx];
        VarId v = VariableGraph::var_of(w);
        bool bit = VariableGraph::value_of(w);
        bool partner_on_cycle = index.contains(VariableGraph::partner(w));
        if (idx % 2 == 0) {
            s1.set(v, bit);
            s2.set(v, bit);
        } else if (!partner_on_cycle) {
            s1.set(v, !bit);
            s2.set(v, !bit);
        }
    }
}

// mu differing variables on a cycle-like component with pendants,
// 0 <= mu <= |vars|-1.
inline void assign_cycle_exact(std::span<const std::uint32_t> cycle, std::size_t mu,
                               Assignment& s1, Assignment& s2) {
    WalkIndex index(cycle);
    std::size_t pin = cycle.size();
    for (std::size_t idx = 0; idx < cycle.size(); ++idx) {
        if (!index.contains(VariableGraph::partner(cycle[idx]))) {
            if (pin == cycle.size() || cycle[idx] < cycle[pin]) pin = idx;
        }
    }
    internal_check(pin < cycle.size(), "assign_cycle_exact: no pendant-carrying cycle vertex");

    std::uint32_t w = cycle[pin];
    s1.set(VariableGraph::var_of(w), VariableGraph::value_of(w));
    s2.set(VariableGraph::var_of(w), VariableGraph::value_of(w));

    // open the cycle after the pinned vertex
    std::vector<std::uint32_t> spine;
    spine.reserve(cycle.size() - 1);
    for (std::size_t off = 1; off < cycle.size(); ++off)
        spine.push_back(cycle[(pin + off) % cycle.size()]);
    if (spine.back() < spine.front()) std::reverse(spine.begin(), spine.end());
    assign_spine_exact(spine, mu, s1, s2);
}

inline std::size_t flexible_cap(const ComponentAnalysis& comp) {
    switch (comp.kind) {
        case ComponentKind::PathLike:
        case ComponentKind::EvenCycleLikeWithPendants: return comp.vars.size();
        case ComponentKind::OddCycleLike: return comp.vars.size() - 1;
        default: return 0;  // pure even cycles are not flexible
    }
}

// Realize exactly mu differing variables on a flexible component.
inline void assign_component_exact(const ComponentAnalysis& comp, std::size_t mu,
                                   Assignment& s1, Assignment& s2) {
    internal_check(mu <= flexible_cap(comp), "assign_component_exact: mu exceeds cap");
    switch (comp.kind) {
        case ComponentKind::PathLike:
            assign_spine_exact(comp.spine, mu, s1, s2);
            break;
        case ComponentKind::EvenCycleLikeWithPendants:
            if (mu == comp.vars.size())
                assign_cycle_pair(comp.cycle, s1, s2);
            else
                assign_cycle_exact(comp.cycle, mu, s1, s2);
            break;
        case ComponentKind::OddCycleLike:
            assign_cycle_exact(comp.cycle, mu, s1, s2);
            break;
        default:
            internal_check(false, "assign_component_exact: pure even cycle is not flexible");
    }
}

struct TwoSatAnalysis {
    bool conflict = false;
    std::vector<signed char> fixed;
    std::vector<ComponentAnalysis> components;
};

inline TwoSatAnalysis analyze_22cnf(const CnfFormula& phi) {
    TwoSatAnalysis out;
    UnitPropagation prop = propagate_units(phi);
    if (prop.conflict) {
        out.conflict = true;
        return out;
    }
    out.fixed = std::move(prop.fixed);
    std::vector<char> active(phi.n, 0);
    std::vector<VarId> active_vars;
    for (VarId v = 0; v < phi.n; ++v)
        if (out.fixed[v] < 0) {
            active[v] = 1;
            active_vars.push_back(v);
        }
    VariableGraph g = build_graph_over(phi.n, prop.residual, active);
    out.components = analyze_graph(g, active_vars);
    return out;
}

inline void check_cnf_witness(const CnfFormula& phi, DifferQuery q, const DifferAnswer& ans) {
    if (!ans.witness) return;
    internal_check(evaluate_cnf(phi, ans.witness->first) && evaluate_cnf(phi, ans.witness->second),
                   "2-sat witness does not satisfy the formula");
    std::uint32_t dist = hamming_distance(ans.witness->first, ans.witness->second);
    internal_check(q.mode == Mode::Max ? dist >= q.d : dist == q.d,
                   "2-sat witness distance violates the query");
}

}  // namespace detail

// Requires a unit-free (2,2)-CNF; the solvers run unit propagation before
// calling this.
inline VariableGraph build_variable_graph(const CnfFormula& input) {
    CnfFormula phi = normalized(input);
    if (!check_22cnf(phi))
        throw std::invalid_argument("build_variable_graph: not a (2,2)-CNF formula");
    for (const Clause& c : phi.clauses)
        if (c.literals.size() < 2)
            throw std::invalid_argument("build_variable_graph: unit clause present");
    return detail::build_graph_over(phi.n, phi.clauses, std::vector<char>(phi.n, 1));
}

inline std::vector<ComponentReport> classify_components(const VariableGraph& g) {
    std::vector<VarId> all(g.n);
    for (VarId v = 0; v < g.n; ++v) all[v] = v;
    std::vector<ComponentReport> reports;
    for (const auto& a : detail::analyze_graph(g, all))
        reports.push_back({a.kind, a.vars});
    return reports;
}

inline DifferAnswer max_differ_22(const CnfFormula& input, std::uint32_t d) {
    CnfFormula phi = normalized(input);
    if (!check_22cnf(phi)) throw std::invalid_argument("max_differ_22: not a (2,2)-CNF formula");
    detail::TwoSatAnalysis analysis = detail::analyze_22cnf(phi);
    if (analysis.conflict) return DifferAnswer::make_unsat();

    // maximum achievable distance: every component differs everywhere
    // except one forced overlap per odd-cycle-like component; fixed
    // variables never differ
    std::size_t max_achievable = 0;
    for (const auto& comp : analysis.components)
        max_achievable += comp.vars.size() -
                          (comp.kind == ComponentKind::OddCycleLike ? 1 : 0);
    if (d > max_achievable) return DifferAnswer::make_no();

    Assignment s1(phi.n), s2(phi.n);
    for (VarId v = 0; v < phi.n; ++v)
        if (analysis.fixed[v] >= 0) {
            s1.set(v, analysis.fixed[v] == 1);
            s2.set(v, analysis.fixed[v] == 1);
        }
    for (const auto& comp : analysis.components) {
        switch (comp.kind) {
            case ComponentKind::PathLike: detail::assign_spine_pair(comp.spine, s1, s2); break;
            case ComponentKind::EvenCycleLikeWithPendants:
            case ComponentKind::PureEvenCycle: detail::assign_cycle_pair(comp.cycle, s1, s2); break;
            case ComponentKind::OddCycleLike:
                detail::assign_cycle_exact(comp.cycle, comp.vars.size() - 1, s1, s2);
                break;
        }
    }
    DifferAnswer ans = DifferAnswer::make_yes(std::move(s1), std::move(s2));
    detail::check_cnf_witness(phi, DifferQuery{Mode::Max, d}, ans);
    internal_check(hamming_distance(ans.witness->first, ans.witness->second) == max_achievable,
                   "max_differ_22: witness distance disagrees with the component count");
    return ans;
}

inline DifferAnswer exact_differ_22(const CnfFormula& input, std::uint32_t d) {
    CnfFormula phi = normalized(input);
    if (!check_22cnf(phi)) throw std::invalid_argument("exact_differ_22: not a (2,2)-CNF formula");
    detail::TwoSatAnalysis analysis = detail::analyze_22cnf(phi);
    if (analysis.conflict) return DifferAnswer::make_unsat();

    // flexible components realize any share in [0, cap]; pure even cycles
    // contribute all-or-nothing
    std::uint64_t flexible_budget = 0;
    std::vector<std::uint64_t> cycle_sizes;
    std::vector<const detail::ComponentAnalysis*> flexible, pure_cycles;
    for (const auto& comp : analysis.components) {
        if (comp.kind == ComponentKind::PureEvenCycle) {
            cycle_sizes.push_back(comp.vars.size());
            pure_cycles.push_back(&comp);
        } else {
            flexible_budget += detail::flexible_cap(comp);
            flexible.push_back(&comp);
        }
    }

    // need a reachable cycle total r with d - flexible_budget <= r <= d
    std::uint64_t total_cycle = 0;
    for (std::uint64_t s : cycle_sizes) total_cycle += s;
    std::uint64_t cap = std::min<std::uint64_t>(d, total_cycle);
    std::vector<char> reachable = subset_sum_reachable(cycle_sizes, cap);
    std::optional<std::uint64_t> chosen_total;
    for (std::uint64_t r = cap + 1; r-- > 0;) {
        if (reachable[r] && d - r <= flexible_budget) {
            chosen_total = r;
            break;
        }
    }
    if (!chosen_total) return DifferAnswer::make_no();

    auto chosen = subset_sum(cycle_sizes, *chosen_total);
    internal_check(chosen.has_value(), "exact_differ_22: reachability and reconstruction disagree");
    std::vector<char> cycle_chosen(pure_cycles.size(), 0);
    for (std::size_t i : *chosen) cycle_chosen[i] = 1;

    Assignment s1(phi.n), s2(phi.n);
    for (VarId v = 0; v < phi.n; ++v)
        if (analysis.fixed[v] >= 0) {
            s1.set(v, analysis.fixed[v] == 1);
            s2.set(v, analysis.fixed[v] == 1);
        }
    std::uint64_t remaining = d - *chosen_total;
    for (const auto* comp : flexible) {
        std::uint64_t mu = std::min<std::uint64_t>(remaining, detail::flexible_cap(*comp));
        detail::assign_component_exact(*comp, std::size_t(mu), s1, s2);
        remaining -= mu;
    }
    internal_check(remaining == 0, "exact_differ_22: flexible budget not exhausted");
    for (std::size_t i = 0; i < pure_cycles.size(); ++i) {
        if (cycle_chosen[i])
            detail::assign_cycle_pair(pure_cycles[i]->cycle, s1, s2);
        else
            detail::assign_cycle_both(pure_cycles[i]->cycle, s1, s2);
    }

    DifferAnswer ans = DifferAnswer::make_yes(std::move(s1), std::move(s2));
    detail::check_cnf_witness(phi, DifferQuery{Mode::Exact, d}, ans);
    return ans;
}

}  // namespace differsat
