#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "emvkit/error.hpp"
#include "emvkit/ratlp.hpp"

using namespace emvkit;
using namespace emvkit::ratlp;

TEST_CASE("single equation 2v = 1 in the unit box") {
    LinSystem sys;
    const int v = sys.add_variable("v", true);
    sys.add_equality({{v, rat(2)}}, rat(1));
    const auto out = solve(sys);
    REQUIRE(out.feasible);
    CHECK(out.assignment[v] == rat(1, 2));
    CHECK(satisfies(sys, out.assignment));
}

TEST_CASE("bound conflict v = 2 is infeasible with a checkable certificate") {
    LinSystem sys;
    const int v = sys.add_variable("v", true);
    sys.add_equality({{v, rat(1)}}, rat(2));
    const auto out = solve(sys);
    REQUIRE(!out.feasible);
    CHECK(check_certificate(sys, out.certificate));
}

TEST_CASE("maximize v1 on the unit simplex") {
    LinSystem sys;
    const int v1 = sys.add_variable("v1", true);
    const int v2 = sys.add_variable("v2", true);
    sys.add_equality({{v1, rat(1)}, {v2, rat(1)}}, rat(1));
    const auto out = solve(sys, {rat(1), rat(0)}, true);
    REQUIRE(out.status == OptStatus::Optimal);
    CHECK(out.value == rat(1));
    CHECK(out.assignment[v1] == rat(1));
    CHECK(out.assignment[v2] == rat(0));
}

TEST_CASE("unbounded objective over a free variable") {
    LinSystem sys;
    const int v = sys.add_variable("v", false);
    const int w = sys.add_variable("w", false);
    sys.add_equality({{v, rat(1)}, {w, rat(-1)}}, rat(0));
    const auto out = solve(sys, {rat(1), rat(0)}, true);
    CHECK(out.status == OptStatus::Unbounded);
}

TEST_CASE("inconsistent equalities produce a certificate over the rows") {
    LinSystem sys;
    const int a = sys.add_variable("a", false);
    const int b = sys.add_variable("b", false);
    sys.add_equality({{a, rat(1)}, {b, rat(1)}}, rat(1));
    sys.add_equality({{a, rat(2)}, {b, rat(2)}}, rat(3));
    const auto out = solve(sys);
    REQUIRE(!out.feasible);
    CHECK(check_certificate(sys, out.certificate));
}

TEST_CASE("affine rank of small point sets") {
    CHECK(affine_rank({{rat(0), rat(1)}, {rat(1), rat(0)}}) == 1);
    CHECK(affine_rank({{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)}}) == 2);
    CHECK(affine_rank({{rat(2), rat(2)}}) == 0);
    CHECK(affine_rank({{rat(0)}, {rat(0)}}) == 0);
    CHECK_THROWS_AS(affine_rank({{rat(0)}, {rat(0), rat(1)}}), Error);
}

TEST_CASE("midpoint of the unit simplex is not a vertex; corners are") {
    LinSystem sys;
    sys.add_variable("v1", true);
    sys.add_variable("v2", true);
    sys.add_equality({{0, rat(1)}, {1, rat(1)}}, rat(1));
    CHECK(!vertex_test({rat(1, 2), rat(1, 2)}, sys));
    CHECK(vertex_test({rat(1), rat(0)}, sys));
    CHECK(vertex_test({rat(0), rat(1)}, sys));
    CHECK(!vertex_test({rat(2), rat(-1)}, sys));  // infeasible point
}

TEST_CASE("feasible assignments satisfy all rows exactly on random systems") {
    std::mt19937_64 rng(11);
    int feasible_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        LinSystem sys;
        const int nv = 2 + rng() % 4;
        for (int v = 0; v < nv; ++v) sys.add_variable("v" + std::to_string(v), rng() % 2 == 0);
        const int rows = 1 + rng() % 4;
        for (int r = 0; r < rows; ++r) {
            std::vector<std::pair<int, Rat>> terms;
            for (int v = 0; v < nv; ++v)
                terms.emplace_back(v, rat(static_cast<long long>(rng() % 7) - 3));
            sys.add_equality(terms, rat(static_cast<long long>(rng() % 5) - 2, 1 + rng() % 3));
        }
        const auto out = solve(sys);
        if (out.feasible) {
            ++feasible_seen;
            CHECK(satisfies(sys, out.assignment));
        } else {
            ++infeasible_seen;
            CHECK(check_certificate(sys, out.certificate));
        }
    }
    CHECK(feasible_seen > 0);
    CHECK(infeasible_seen > 0);
}

TEST_CASE("optimum over a simplex hull equals the best vertex") {
    // vertices of a transportation-style polytope: w >= 0, sum w = 1, so the
    // optimum of any linear objective is the best coordinate value
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 5);
        LinSystem sys;
        for (int i = 0; i < k; ++i) sys.add_variable("w" + std::to_string(i), true);
        std::vector<std::pair<int, Rat>> ones;
        for (int i = 0; i < k; ++i) ones.emplace_back(i, rat(1));
        sys.add_equality(ones, rat(1));
        std::vector<Rat> obj(k);
        for (auto& v : obj) v = rat(static_cast<long long>(rng() % 21) - 10, 1 + rng() % 4);
        const auto out = solve(sys, obj, true);
        REQUIRE(out.status == OptStatus::Optimal);
        Rat best = obj[0];
        for (const Rat& v : obj) best = std::max(best, v);
        CHECK(out.value == best);
        CHECK(satisfies(sys, out.assignment));
        CHECK(vertex_test(out.assignment, sys));
    }
}

TEST_CASE("identical inputs pivot identically") {
    LinSystem sys;
    for (int v = 0; v < 4; ++v) sys.add_variable("v" + std::to_string(v), true);
    sys.add_equality({{0, rat(1)}, {1, rat(1)}, {2, rat(1)}, {3, rat(1)}}, rat(1));
    sys.add_equality({{0, rat(1)}, {2, rat(-1)}}, rat(0));
    const auto a = solve(sys, {rat(1), rat(2), rat(3), rat(4)}, true);
    const auto b = solve(sys, {rat(1), rat(2), rat(3), rat(4)}, true);
    CHECK(a.pivots == b.pivots);
    CHECK(a.assignment == b.assignment);
    CHECK(a.value == b.value);
}
