#include <random>
#include <set>

#include "differsat/affine.hpp"
#include "differsat/oracle.hpp"
#include "differsat/reductions.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace differsat;
using namespace testsupport;

namespace {

void check_34_affine(const AffineSystem& sys) {
    std::vector<std::uint32_t> occurrences(sys.n, 0);
    for (const AffineEquation& eq : sys.equations) {
        CHECK(eq.vars.size() <= 3);
        for (VarId v : eq.vars) CHECK(++occurrences[v] <= 4);
    }
}

void check_name_map(const GeneratedInstance& instance) {
    std::set<std::string> names;
    std::set<VarId> vars;
    for (const auto& [name, var] : instance.variable_names) {
        CHECK(names.insert(name).second);
        CHECK(vars.insert(var).second);
    }
    VarId n = std::holds_alternative<AffineSystem>(instance.formula) ? instance.affine().n
                                                                     : instance.cnf().n;
    CHECK(vars.size() == n);  // total
}

bool generated_answer(const GeneratedInstance& instance) {
    if (std::holds_alternative<AffineSystem>(instance.formula)) {
        const AffineSystem& sys = instance.affine();
        DifferAnswer ans = instance.query.mode == Mode::Exact
                               ? exact_differ_free_enum(sys, instance.query.d)
                               : max_differ_fpt(sys, instance.query.d);
        return ans.yes();
    }
    return oracle_differ(Formula(instance.cnf()), instance.query).yes();
}

}  // namespace

TEST_SUITE_BEGIN("reductions");

TEST_CASE("cubic independent set instance shape") {
    GeneratedInstance k4 = from_cubic_independent_set(complete_graph(4), 1);
    CHECK(k4.affine().n == 22);  // 4 * (1 + 3) vertex-side + 6 edge slack
    CHECK(k4.affine().equations.size() == 18);
    CHECK(k4.query.mode == Mode::Exact);
    CHECK(k4.query.d == 7);
    check_34_affine(k4.affine());
    check_name_map(k4);

    CHECK_THROWS_AS(from_cubic_independent_set(complete_graph(5), 1), std::invalid_argument);
    CHECK_THROWS_AS(from_cubic_independent_set(complete_graph(4), 0), std::invalid_argument);
}

TEST_CASE("cubic independent set equivalences") {
    CHECK(generated_answer(from_cubic_independent_set(complete_graph(4), 1)));        // K4 has an IS of 1
    CHECK_FALSE(generated_answer(from_cubic_independent_set(complete_graph(4), 2)));  // but not 2
    GeneratedInstance k33 = from_cubic_independent_set(complete_bipartite_33(), 3);
    CHECK(k33.query.d == 39);
    CHECK(generated_answer(k33));  // one side is independent
    check_34_affine(k33.affine());

    for (std::uint32_t k = 1; k <= 3; ++k)
        for (const SimpleGraph& g : {complete_graph(4), complete_bipartite_33(), prism_graph()}) {
            GeneratedInstance instance = from_cubic_independent_set(g, k);
            check_34_affine(instance.affine());
            CHECK(generated_answer(instance) == has_independent_set(g, k));
        }
}

TEST_CASE("exact even set instances") {
    SetSystem pairwise{2, {{0, 1}}, 2};
    GeneratedInstance both = from_exact_even_set(pairwise);
    REQUIRE(both.affine().equations.size() == 1);
    CHECK(both.query.d == 2);
    CHECK(generated_answer(both));

    SetSystem singleton{1, {{0}}, 1};
    CHECK_FALSE(generated_answer(from_exact_even_set(singleton)));  // unique solution

    SetSystem empty_family{3, {}, 3};
    CHECK(generated_answer(from_exact_even_set(empty_family)));
}

TEST_CASE("odd set instances") {
    SetSystem singleton{1, {{0}}, 1};
    GeneratedInstance forced = from_odd_set(singleton, true);
    CHECK(forced.affine().n == 1);
    CHECK(forced.query.d == 0);
    CHECK(generated_answer(forced));  // unique solution pairs with itself

    SetSystem with_even{3, {{0, 1}}, 1};
    GeneratedInstance gadget = from_odd_set(with_even, true);
    CHECK(gadget.affine().n == 5);  // 3 + y + z^1
    CHECK(gadget.query.d == 4);
    CHECK(generated_answer(gadget) == odd_set_exists(with_even, true));
    check_name_map(gadget);

    SetSystem two_units{2, {{0}, {1}}, 2};
    GeneratedInstance zero_d = from_odd_set(two_units, true);
    CHECK(zero_d.query.d == 0);
    CHECK(generated_answer(zero_d));  // x_a = x_b = 1 solvable
}

TEST_CASE("independent set 2-cnf instances") {
    SimpleGraph edge;
    edge.vertex_count = 2;
    edge.edges = {{0, 1}};
    GeneratedInstance single = from_independent_set_2cnf(edge, 1, Mode::Exact);
    CHECK(single.cnf().n == 4);
    CHECK(single.cnf().clauses.size() == 6);  // 2 edge clauses + 4 pair clauses
    CHECK(single.query.d == 2);
    CHECK(generated_answer(single));
    check_name_map(single);
    // the construction is monotone 2-CNF
    for (const Clause& c : single.cnf().clauses) {
        CHECK(c.literals.size() == 2);
        for (const Literal& l : c.literals) CHECK(l.positive);
    }

    CHECK_FALSE(generated_answer(from_independent_set_2cnf(complete_graph(3), 2, Mode::Exact)));

    SimpleGraph edgeless;
    edgeless.vertex_count = 3;
    CHECK(generated_answer(from_independent_set_2cnf(edgeless, 3, Mode::Exact)));
}

TEST_CASE("random set systems round-trip through both affine reductions") {
    std::mt19937 rng(5701);
    for (int round = 0; round < 60; ++round) {
        SetSystem s = random_set_system(rng, 7, 3, 3);
        CHECK(generated_answer(from_exact_even_set(s)) == exact_even_set_exists(s));
        CHECK(generated_answer(from_odd_set(s, true)) == odd_set_exists(s, true));
        CHECK(generated_answer(from_odd_set(s, false)) == odd_set_exists(s, false));
    }
}

TEST_CASE("random graphs round-trip through the 2-cnf reduction") {
    std::mt19937 rng(5702);
    for (int round = 0; round < 40; ++round) {
        SimpleGraph g = random_graph(rng, 4);
        for (std::uint32_t k = 1; k <= 3; ++k) {
            bool expected = has_independent_set(g, k);
            CHECK(generated_answer(from_independent_set_2cnf(g, k, Mode::Exact)) == expected);
            CHECK(generated_answer(from_independent_set_2cnf(g, k, Mode::Max)) == expected);
        }
    }
}

TEST_SUITE_END();
