#include <random>

#include "differsat/io.hpp"
#include "differsat/reductions.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace differsat;
using namespace testsupport;

TEST_SUITE_BEGIN("io");

TEST_CASE("dimacs parsing") {
    CnfFormula phi = parse_dimacs_cnf("p cnf 2 2\n1 2 0\n-1 -2 0\n");
    CHECK(phi == normalized(complement_pair_formula()));

    CnfFormula lonely = parse_dimacs_cnf("p cnf 1 0\n");
    CHECK(lonely.n == 1);
    CHECK(lonely.clauses.empty());

    CHECK(parse_dimacs_cnf("c comment first\np cnf 2 1\nc mid comment\n1 -2 0\n").clauses.size() ==
          1);
    // clauses may span lines
    CHECK(parse_dimacs_cnf("p cnf 3 1\n1\n2 3 0\n").clauses.size() == 1);
}

TEST_CASE("dimacs parse errors") {
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 3 0\n"), ParseError);   // out of range
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 2\n"), ParseError);     // unterminated
    CHECK_THROWS_AS(parse_dimacs_cnf("p wrong 2 1\n"), ParseError);        // bad header
    CHECK_THROWS_AS(parse_dimacs_cnf("1 2 0\n"), ParseError);              // missing header
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n0\n"), ParseError);       // empty clause
}

TEST_CASE("xnf parsing") {
    AffineSystem sys = parse_xnf("p xnf 5 3\ne 1 1 2 3 0\ne 1 4 2 0\ne 1 5 3 0\n");
    CHECK(sys == normalized(worked_affine_system()));

    AffineSystem falsum = parse_xnf("p xnf 1 1\ne 1 0\n");
    REQUIRE(falsum.equations.size() == 1);
    CHECK(falsum.equations[0].vars.empty());
    CHECK(falsum.equations[0].rhs);

    AffineSystem cancel = parse_xnf("p xnf 2 1\ne 0 2 2 0\n");
    REQUIRE(cancel.equations.size() == 1);
    CHECK(cancel.equations[0].vars.empty());
    CHECK_FALSE(cancel.equations[0].rhs);

    AffineSystem weighted = parse_xnf("p xnf 2 1\nw 1 5\ne 1 1 2 0\n");
    CHECK(weighted.weights == std::vector<std::uint32_t>{5, 1});
}

TEST_CASE("xnf parse errors") {
    CHECK_THROWS_AS(parse_xnf("p xnf 2 1\ne 2 1 0\n"), ParseError);   // rhs not a bit
    CHECK_THROWS_AS(parse_xnf("p xnf 2 1\ne 1 3 0\n"), ParseError);   // index out of range
    CHECK_THROWS_AS(parse_xnf("p xnf 2 1\ne 1 1 2\n"), ParseError);   // unterminated
    CHECK_THROWS_AS(parse_xnf("p xnf 2 1\nw 1 0\n"), ParseError);     // weight must be >= 1
    CHECK_THROWS_AS(parse_xnf("p xnf 2 1\nq 1 2 0\n"), ParseError);   // unknown tag
}

TEST_CASE("round trips on fixed and random instances") {
    std::mt19937 rng(5801);
    for (int round = 0; round < 100; ++round) {
        AffineSystem sys = normalized(random_affine_system(rng, 14));
        CHECK(parse_xnf(write_xnf(sys)) == sys);
        CnfFormula phi = normalized(random_22cnf(rng, 14));
        CHECK(parse_dimacs_cnf(write_dimacs_cnf(phi)) == phi);
        CnfFormula hitting = normalized(random_hitting_formula(rng, 10, 5));
        CHECK(parse_dimacs_cnf(write_dimacs_cnf(hitting)) == hitting);
    }
    CHECK(parse_xnf(write_xnf(component_affine_system())) ==
          normalized(component_affine_system()));
    CHECK(parse_dimacs_cnf(write_dimacs_cnf(component_cnf_formula())) ==
          normalized(component_cnf_formula()));
}

TEST_CASE("instance format detection") {
    InstanceFile cnf = parse_instance("c leading comment\np cnf 1 0\n");
    CHECK(cnf.format == InstanceFormat::DimacsCnf);
    InstanceFile xnf = parse_instance("p xnf 1 0\n");
    CHECK(xnf.format == InstanceFormat::Xnf);
    CHECK_THROWS_AS(parse_instance("p foo 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance(""), ParseError);
}

TEST_CASE("query sidecar round trip") {
    DifferQuery q{Mode::Exact, 9};
    DifferQuery back = parse_query_sidecar(write_query_sidecar(q));
    CHECK(back.mode == Mode::Exact);
    CHECK(back.d == 9);
    CHECK_THROWS_AS(parse_query_sidecar("mode sideways\nd 1\n"), ParseError);
    CHECK_THROWS_AS(parse_query_sidecar("d 1\n"), ParseError);
}

TEST_CASE("routing follows the fragment precedence") {
    InstanceFile fig1{InstanceFormat::Xnf, component_affine_system()};
    CHECK(route(fig1, {Mode::Max, 1}, false).fragment == Fragment::TwoAffine);

    AffineSystem wide = worked_affine_system();  // has an arity-3 equation
    InstanceFile general{InstanceFormat::Xnf, wide};
    CHECK(route(general, {Mode::Max, 1}, false).fragment == Fragment::AffineGeneral);

    InstanceFile fig2{InstanceFormat::DimacsCnf, component_cnf_formula()};
    CHECK(route(fig2, {Mode::Max, 1}, false).fragment == Fragment::TwoTwoCnf);

    // hitting takes precedence when both predicates hold
    InstanceFile pair{InstanceFormat::DimacsCnf, complement_pair_formula()};
    CHECK(is_hitting(complement_pair_formula()));
    CHECK(check_22cnf(complement_pair_formula()));
    CHECK(route(pair, {Mode::Max, 1}, false).fragment == Fragment::Hitting);
}

TEST_CASE("oracle fallback needs permission and a small instance") {
    // three occurrences of x0 and a shared sign pattern: neither hitting
    // nor (2,2)
    CnfFormula awkward;
    awkward.n = 4;
    awkward.clauses = {{{pos(0), pos(1)}}, {{pos(0), pos(2)}}, {{pos(0), pos(3)}}};
    REQUIRE_FALSE(is_hitting(awkward));
    REQUIRE_FALSE(check_22cnf(awkward));
    InstanceFile instance{InstanceFormat::DimacsCnf, awkward};
    CHECK(route(instance, {Mode::Max, 1}, true).fragment == Fragment::OracleFallback);
    CHECK_THROWS_AS(route(instance, {Mode::Max, 1}, false), UnsupportedFragmentError);
    CHECK_THROWS_AS(route(instance, {Mode::Max, 1}, true, 3), UnsupportedFragmentError);
}

TEST_SUITE_END();
