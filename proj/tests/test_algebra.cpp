#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "emvkit/axioms.hpp"
#include "emvkit/error.hpp"
#include "emvkit/json_io.hpp"
#include "emvkit/structure.hpp"

#include <array>
#include <random>
#include <thread>

using namespace emvkit;

namespace {

FiniteEmv mutate(const FiniteEmv& M, int i, int j, int v) {
    auto t = M.table();
    t[i][j] = v;
    return FiniteEmv(t);
}

}  // namespace

TEST_CASE("chain builder gives truncated addition") {
    const FiniteEmv c2 = FiniteEmv::chain(2);
    CHECK(c2.size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(c2.oplus(i, j) == std::min(i + j, 2));
}

TEST_CASE("boolean builder is the subset join") {
    const FiniteEmv b2 = FiniteEmv::boolean_algebra(2);
    CHECK(b2.size() == 4);
    CHECK(b2.oplus(1, 2) == 3);
    CHECK(b2.join(1, 2) == 3);
    CHECK(b2.meet(1, 2) == 0);
    CHECK(b2.label(3) == "{0,1}");
}

TEST_CASE("product builder is componentwise") {
    const FiniteEmv p = FiniteEmv::product({FiniteEmv::chain(2), FiniteEmv::chain(1)});
    CHECK(p.size() == 6);
    // (1,0) + (1,1) = (2,1)
    const int x = *p.index_of_label("(1,0)");
    const int y = *p.index_of_label("(1,1)");
    CHECK(p.label(p.oplus(x, y)) == "(2,1)");
}

TEST_CASE("natural order derives from oplus alone") {
    const FiniteEmv c2 = FiniteEmv::chain(2);
    CHECK(c2.leq(1, 2));  // z = 1
    CHECK(!c2.leq(2, 1));
    const OrderTables t = natural_order(c2);
    CHECK(t.join[1][2] == 2);
    CHECK(t.meet[1][2] == 1);

    const FiniteEmv b2 = FiniteEmv::boolean_algebra(2);
    const OrderTables tb = natural_order(b2);
    CHECK(tb.join[1][2] == 3);
    CHECK(tb.meet[1][2] == 0);
}

TEST_CASE("natural order coincides with the lattice order") {
    for (const FiniteEmv& M : {FiniteEmv::chain(4), FiniteEmv::boolean_algebra(3),
                               FiniteEmv::product({FiniteEmv::chain(2), FiniteEmv::chain(2)})}) {
        for (int x = 0; x < M.size(); ++x)
            for (int y = 0; y < M.size(); ++y) {
                CHECK(M.leq(x, y) == (M.join(x, y) == y));
                CHECK(M.leq(x, y) == (M.meet(x, y) == x));
            }
    }
}

TEST_CASE("lambda is the least complement in the interval") {
    const FiniteEmv c2 = FiniteEmv::chain(2);
    CHECK(c2.lambda(2, 1) == 1);
    CHECK(c2.lambda(2, 0) == 2);
    CHECK(c2.lambda(2, 2) == 0);
    CHECK_THROWS_AS(c2.lambda(1, 0), Error);  // 1 is not idempotent
    CHECK_THROWS_AS(c2.lambda(0, 2), Error);  // 2 is not below 0

    const SymbolicEmv T = SymbolicEmv::finsubsets();
    CHECK(T.lambda(Elem(make_set({1, 2})), Elem(make_set({2}))) == Elem(make_set({1})));
    // lambda_a(0) = a on any idempotent
    CHECK(T.lambda(Elem(make_set({4, 7})), T.zero()) == Elem(make_set({4, 7})));
}

TEST_CASE("odot matches truncated subtraction on chains and intersection on sets") {
    const FiniteEmv c2 = FiniteEmv::chain(2);
    CHECK(c2.odot(1, 1) == 0);
    CHECK(c2.odot(2, 1) == 1);
    const SymbolicEmv T = SymbolicEmv::finsubsets();
    CHECK(T.odot(Elem(make_set({1})), Elem(make_set({2}))) == Elem(FinSet{}));
    CHECK(T.odot(Elem(make_set({1, 2})), Elem(make_set({2, 3}))) == Elem(make_set({2})));
}

TEST_CASE("partial addition is defined exactly on orthogonal pairs") {
    const FiniteEmv c2 = FiniteEmv::chain(2);
    CHECK(c2.partial_add(1, 1) == 2);
    CHECK(!c2.partial_add(2, 1).has_value());
    const SymbolicEmv T = SymbolicEmv::finsubsets();
    CHECK(T.partial_add(Elem(make_set({1})), Elem(make_set({2}))) == Elem(make_set({1, 2})));
    CHECK(!T.partial_add(Elem(make_set({1})), Elem(make_set({1, 2}))).has_value());
}

TEST_CASE("idempotents of the test algebras") {
    CHECK(FiniteEmv::chain(2).idempotents() == std::vector<int>{0, 2});
    CHECK(FiniteEmv::boolean_algebra(2).idempotents() == std::vector<int>{0, 1, 2, 3});
    const FiniteEmv p = FiniteEmv::product({FiniteEmv::chain(2), FiniteEmv::chain(1)});
    std::vector<std::string> labels;
    for (int e : p.idempotents()) labels.push_back(p.label(e));
    CHECK(labels == std::vector<std::string>{"(0,0)", "(0,1)", "(2,0)", "(2,1)"});
}

TEST_CASE("verify_axioms passes on valid carriers") {
    for (int k = 1; k <= 4; ++k) {
        const auto report = verify_axioms(Carrier(FiniteEmv::chain(k)));
        CHECK(report.ok());
    }
    CHECK(verify_axioms(Carrier(FiniteEmv::boolean_algebra(3))).ok());
    CHECK(verify_axioms(Carrier(FiniteEmv::product({FiniteEmv::chain(2), FiniteEmv::chain(2)}))).ok());
    CHECK(verify_axioms(Carrier(SymbolicEmv::finsubsets()), 6).ok());
    CHECK(verify_axioms(Carrier(SymbolicEmv::finsupport(3)), 8).ok());
    CHECK(verify_axioms(Carrier(SymbolicEmv::changlex()), 8).ok());
}

TEST_CASE("the documented chain(2) mutation breaks the MV involution") {
    const FiniteEmv bad = mutate(FiniteEmv::chain(2), 1, 1, 1);
    // lambda_2(1) = 2 because 1+1 = 1 now, and lambda_2(2) = 0
    CHECK(bad.lambda(2, 1) == 2);
    CHECK(bad.lambda(2, 2) == 0);
    const auto report = verify_axioms(Carrier(bad));
    CHECK(!report.ok());
    bool saw_involution = false;
    for (const auto& v : report.violations)
        if (v.axiom_id == "mv-involution") saw_involution = true;
    CHECK(saw_involution);
}

TEST_CASE("odot is independent of the idempotent used") {
    for (const FiniteEmv& M :
         {FiniteEmv::boolean_algebra(3), FiniteEmv::product({FiniteEmv::chain(2), FiniteEmv::chain(1)})}) {
        for (int x = 0; x < M.size(); ++x)
            for (int y = 0; y < M.size(); ++y) {
                const int expect = M.odot(x, y);
                for (int a : M.idempotents()) {
                    if (!M.leq(x, a) || !M.leq(y, a)) continue;
                    CHECK(M.lambda(a, M.oplus(M.lambda(a, x), M.lambda(a, y))) == expect);
                }
            }
    }
}

TEST_CASE("lambda residuation on every idempotent interval") {
    for (const FiniteEmv& M : {FiniteEmv::chain(4), FiniteEmv::boolean_algebra(2),
                               FiniteEmv::product({FiniteEmv::chain(2), FiniteEmv::chain(2)})}) {
        for (int a : M.idempotents())
            for (int x = 0; x < M.size(); ++x) {
                if (!M.leq(x, a)) continue;
                CHECK(M.oplus(M.lambda(a, x), x) == a);
                CHECK(M.lambda(a, M.lambda(a, x)) == x);
            }
    }
}

TEST_CASE("partial addition satisfies the generalized effect algebra laws") {
    for (const FiniteEmv& M : {FiniteEmv::chain(3), FiniteEmv::boolean_algebra(2),
                               FiniteEmv::product({FiniteEmv::chain(2), FiniteEmv::chain(1)})}) {
        const int n = M.size();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const auto xy = M.partial_add(x, y);
                CHECK(xy == M.partial_add(y, x));
                if (xy && *xy == 0) {
                    CHECK(x == 0);
                    CHECK(y == 0);
                }
                for (int z = 0; z < n; ++z) {
                    const auto yz = M.partial_add(y, z);
                    if (xy && M.partial_add(*xy, z)) {
                        REQUIRE(yz.has_value());
                        REQUIRE(M.partial_add(x, *yz).has_value());
                        CHECK(*M.partial_add(*xy, z) == *M.partial_add(x, *yz));
                    }
                    // cancellativity
                    const auto xz = M.partial_add(x, z);
                    if (xy && xz && *xy == *xz) CHECK(y == z);
                }
            }
    }
}

TEST_CASE("symbolic families: basic algebra on finsupport and changlex") {
    const SymbolicEmv F = SymbolicEmv::finsupport(2);
    const Elem a = Elem(make_map({{0, 1}, {3, 2}}));
    const Elem b = Elem(make_map({{0, 2}}));
    CHECK(F.oplus(a, b) == Elem(make_map({{0, 2}, {3, 2}})));
    CHECK(F.leq(b, F.oplus(a, b)));
    CHECK(F.idempotent_above(a) == Elem(make_map({{0, 2}, {3, 2}})));
    CHECK(F.is_idempotent(F.idempotent_above(a)));

    const SymbolicEmv C = SymbolicEmv::changlex();
    const Elem inf1 = Elem(LexPair{0, 1});
    const Elem coinf2 = Elem(LexPair{1, 2});  // (1,-2)
    CHECK(C.oplus(inf1, inf1) == Elem(LexPair{0, 2}));
    CHECK(C.oplus(inf1, coinf2) == Elem(LexPair{1, 1}));
    CHECK(C.oplus(coinf2, coinf2) == *C.top());
    CHECK(C.leq(inf1, coinf2));
    CHECK(C.neg(inf1) == Elem(LexPair{1, 1}));
}

TEST_CASE("build dispatches every AlgebraSpec kind and rejects malformed input") {
    CHECK(build(AlgebraSpec::chain(2)).finite().size() == 3);
    CHECK(build(AlgebraSpec::boolean(2)).finite().size() == 4);
    CHECK(build(AlgebraSpec::product({AlgebraSpec::chain(2), AlgebraSpec::chain(1)})).finite().size() == 6);
    CHECK(!build(AlgebraSpec::finsubsets()).is_finite());
    CHECK(build(AlgebraSpec::representing(AlgebraSpec::finsubsets())).symbolic().family() ==
          SymbolicEmv::Family::Representing);
    CHECK_THROWS_AS(build(AlgebraSpec::table({{0, 1}, {1}})), Error);          // not square
    CHECK_THROWS_AS(build(AlgebraSpec::table({{0, 7}, {7, 0}})), Error);       // out of range
    CHECK_THROWS_AS(build(AlgebraSpec::product({AlgebraSpec::finsubsets()})), Error);
    CHECK_THROWS_AS(build(AlgebraSpec::representing(AlgebraSpec::changlex())), Error);  // has a top
}

TEST_CASE("composite builders pass the axiom checker") {
    CHECK(verify_axioms(Carrier(build(AlgebraSpec::product(
              {AlgebraSpec::chain(3), AlgebraSpec::boolean(1)})).finite())).ok());
    CHECK(verify_axioms(Carrier(build(AlgebraSpec::boolean(2)).finite())).ok());
}

TEST_CASE("the axiom checker survives arbitrary tables") {
    // random garbage must come back as violation data, never as a crash
    std::mt19937_64 rng(101);
    int clean = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (auto& row : t)
            for (auto& v : row) v = static_cast<int>(rng() % n);
        const AxiomReport report = verify_axioms(Carrier(FiniteEmv(t)));
        if (report.ok()) {
            ++clean;
            // anything the checker passes must at least be a commutative
            // monoid with a lattice order
            const FiniteEmv M(t);
            CHECK(M.lattice_ok());
            CHECK(M.oplus(0, 1) == 1);
        }
    }
    CHECK(clean < 300);  // garbage overwhelmingly fails
}

TEST_CASE("concurrent use of a shared carrier is safe and deterministic") {
    const FiniteEmv M = FiniteEmv::product({FiniteEmv::chain(2), FiniteEmv::chain(2)});
    const auto expected = maximal_ideals(M);
    std::vector<std::thread> workers;
    std::array<bool, 8> ok{};
    for (int w = 0; w < 8; ++w)
        workers.emplace_back([&, w] {
            bool good = true;
            for (int rep = 0; rep < 50; ++rep) {
                good = good && (maximal_ideals(M) == expected);
                for (int x = 0; x < M.size() && good; ++x)
                    for (int y = 0; y < M.size(); ++y)
                        if (M.odot(x, y) != M.meet(x, y) &&
                            M.odot(x, y) > M.meet(x, y)) {  // odot <= meet always
                            good = false;
                            break;
                        }
            }
            ok[w] = good;
        });
    for (auto& t : workers) t.join();
    for (bool g : ok) CHECK(g);
}

TEST_CASE("corrupt tables surface NoMinimum and NotALattice") {
    // boolean(2) with 1+1 rewired to the top: {1,2,3} all complement 1 in
    // [0,3] but 1 and 2 are incomparable, so no least witness exists
    const FiniteEmv bad = mutate(FiniteEmv::boolean_algebra(2), 1, 1, 3);
    try {
        (void)bad.lambda(3, 1);
        FAIL("lambda should not succeed");
    } catch (const Error& e) {
        CHECK(e.code() == "NoMinimum");
    }
    CHECK(!verify_axioms(Carrier(bad)).ok());

    // chain(2) with 1+1 = 0 collapses the order: 1 <= 0 <= 1
    const FiniteEmv degenerate = mutate(FiniteEmv::chain(2), 1, 1, 0);
    try {
        natural_order(degenerate);
        FAIL("natural_order should reject a degenerate order");
    } catch (const Error& e) {
        CHECK(e.code() == "NotALattice");
    }
}

TEST_CASE("quotient serialization carries classes and the induced table") {
    const FiniteEmv p = FiniteEmv::product({FiniteEmv::chain(2), FiniteEmv::chain(1)});
    const auto I = maximal_ideals(p)[1];  // second coordinate zero
    const auto q = quotient(p, I);
    const auto j = emvkit::io::quotient_to_json(q);
    CHECK(j["classes"].size() == 2);
    CHECK(j["oplus"] == nlohmann::json::parse("[[0,1],[1,1]]"));
}

TEST_CASE("element JSON round-trips every payload kind") {
    using emvkit::io::elem_from_json;
    using emvkit::io::elem_to_json;
    const std::vector<Elem> samples = {
        Elem(FinIdx(5)),
        Elem(make_set({3, 1, 3})),
        Elem(make_map({{2, 1}, {0, 3}})),
        Elem(LexPair{1, 4}),
        direct_elem(Elem(make_set({1, 2}))),
        complement_elem(Elem(make_map({{1, 1}}))),
    };
    for (const Elem& e : samples) CHECK(elem_from_json(elem_to_json(e)) == e);
}
