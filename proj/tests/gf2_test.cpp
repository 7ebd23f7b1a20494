#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "differsat/gf2.hpp"
#include "differsat/oracle.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace differsat;
using namespace testsupport;

namespace {

std::set<std::string> brute_force_satisfying(const AffineSystem& sys) {
    std::set<std::string> out;
    for (std::uint64_t i = 0; i < (std::uint64_t(1) << sys.n); ++i) {
        Assignment a = assignment_from_counter(sys.n, i);
        if (evaluate_affine(sys, a)) out.insert(a.to_string());
    }
    return out;
}

std::set<std::string> enumerated_satisfying(const SolutionSpace& space) {
    std::set<std::string> out;
    for (const Assignment& a : enumerate_solutions(space, std::uint64_t(1) << 20))
        out.insert(a.to_string());
    return out;
}

// the solution-space description from the worked example: free {y, z},
// x = y^z^1, u = y^1, w = z^1 over (x, y, z, u, w) = 0..4
SolutionSpace worked_example_space() {
    SolutionSpace space;
    space.n = 5;
    space.free_vars = {1, 2};
    space.forced = {{0, {1, 2}, true}, {3, {1}, true}, {4, {2}, true}};
    return space;
}

}  // namespace

TEST_SUITE_BEGIN("gf2");

TEST_CASE("worked example yields a 2-dimensional space with the right solutions") {
    AffineSystem sys = worked_affine_system();
    SolutionSpace space = solve_affine(sys);
    REQUIRE(space.consistent());
    CHECK(space.free_vars.size() == 2);
    CHECK(space.forced.size() == 3);
    CHECK(enumerated_satisfying(space) == brute_force_satisfying(sys));
    // the paper's description of the same set is equivalent
    CHECK(enumerated_satisfying(worked_example_space()) == brute_force_satisfying(sys));
}

TEST_CASE("degenerate systems") {
    AffineSystem free_var;
    free_var.n = 1;
    SolutionSpace space = solve_affine(free_var);
    REQUIRE(space.consistent());
    CHECK(space.free_vars == std::vector<VarId>{0});
    CHECK(space.forced.empty());

    AffineSystem falsum;
    falsum.n = 1;
    falsum.equations = {{{}, true}};
    CHECK_FALSE(solve_affine(falsum).consistent());
    CHECK_THROWS_AS(enumerate_solutions(solve_affine(falsum), 4), std::logic_error);

    AffineSystem zero_vars;
    zero_vars.n = 0;
    SolutionSpace empty_space = solve_affine(zero_vars);
    REQUIRE(empty_space.consistent());
    CHECK(enumerate_solutions(empty_space, 10).size() == 1);
    zero_vars.equations = {{{}, true}};
    CHECK_FALSE(solve_affine(zero_vars).consistent());
}

TEST_CASE("random systems describe exactly the brute-force solution set") {
    std::mt19937 rng(5101);
    int consistent_seen = 0;
    for (int round = 0; round < 300; ++round) {
        AffineSystem sys = random_affine_system(rng, round < 200 ? 12 : 16);
        SolutionSpace space = solve_affine(sys);
        std::set<std::string> brute = brute_force_satisfying(sys);
        if (!space.consistent()) {
            CHECK(brute.empty());
            continue;
        }
        ++consistent_seen;
        CHECK(enumerated_satisfying(space) == brute);
        // rank-nullity: the description size matches the count
        CHECK(brute.size() == (std::uint64_t(1) << space.free_vars.size()));
        CHECK(space.free_vars.size() + space.forced.size() == sys.n);
    }
    CHECK(consistent_seen > 50);
}

TEST_CASE("enumeration is lexicographic in the free bits") {
    SolutionSpace space = worked_example_space();
    auto sols = enumerate_solutions(space, 2);
    REQUIRE(sols.size() == 2);
    // free vars are y (index 1) and z (index 2): (0,0) first, then (0,1)
    CHECK(sols[0].get(1) == false);
    CHECK(sols[0].get(2) == false);
    CHECK(sols[1].get(1) == false);
    CHECK(sols[1].get(2) == true);

    AffineSystem unique_sys;
    unique_sys.n = 2;
    unique_sys.equations = {{{0}, true}, {{1}, false}};
    auto unique_sols = enumerate_solutions(solve_affine(unique_sys), 10);
    REQUIRE(unique_sols.size() == 1);
    CHECK(unique_sols[0].to_string() == "10");
}

TEST_CASE("odd_dependents on the worked example") {
    SolutionSpace space = worked_example_space();
    CHECK(odd_dependents(space, {1}) == std::vector<VarId>{0, 3});       // D = {y}
    CHECK(odd_dependents(space, {}) == std::vector<VarId>{});            // D empty
    CHECK(odd_dependents(space, {1, 2}) == std::vector<VarId>{3, 4});    // D = {y, z}
    CHECK_THROWS_AS(odd_dependents(space, {0}), std::invalid_argument);  // x is forced
}

TEST_CASE("flipping free sets moves solutions by |D| + |odd_dependents(D)|") {
    std::mt19937 rng(5102);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int round = 0; round < 200; ++round) {
        AffineSystem sys = random_affine_system(rng, 14);
        SolutionSpace space = solve_affine(sys);
        if (!space.consistent() || space.free_vars.empty()) continue;
        std::size_t f = space.free_vars.size();
        std::vector<bool> bits1(f), bits2(f);
        for (std::size_t i = 0; i < f; ++i) {
            bits1[i] = coin(rng);
            bits2[i] = coin(rng);
        }
        std::vector<VarId> delta;
        for (std::size_t i = 0; i < f; ++i)
            if (bits1[i] != bits2[i]) delta.push_back(space.free_vars[i]);
        Assignment a = extend_free_assignment(space, bits1);
        Assignment b = extend_free_assignment(space, bits2);
        CHECK(hamming_distance(a, b) == delta.size() + odd_dependents(space, delta).size());
    }
}

TEST_SUITE_END();
