#include "emvkit/axioms.hpp"

#include <optional>

#include "emvkit/error.hpp"

namespace emvkit {

namespace {

struct Check {
    AxiomReport report;

    void count(const std::string& id, std::uint64_t k = 1) { report.checked_counts[id] += k; }
    void fail(const std::string& id, std::vector<Elem> witness, std::string detail) {
        report.violations.push_back({id, std::move(witness), std::move(detail)});
    }
};

void check_finite(const FiniteEmv& M, Check& c) {
    const int n = M.size();
    auto E = [](int i) { return Elem(FinIdx(i)); };
    auto L = [&](int i) { return M.label(i); };

    for (int x = 0; x < n; ++x) {
        c.count("monoid-neutral");
        if (M.oplus(0, x) != x)
            c.fail("monoid-neutral", {E(x)}, "0+" + L(x) + " = " + L(M.oplus(0, x)));
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            c.count("monoid-comm");
            if (M.oplus(x, y) != M.oplus(y, x))
                c.fail("monoid-comm", {E(x), E(y)},
                       L(x) + "+" + L(y) + " = " + L(M.oplus(x, y)) + " but " + L(y) + "+" + L(x) +
                           " = " + L(M.oplus(y, x)));
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                c.count("monoid-assoc");
                if (M.oplus(M.oplus(x, y), z) != M.oplus(x, M.oplus(y, z)))
                    c.fail("monoid-assoc", {E(x), E(y), E(z)},
                           "(" + L(x) + "+" + L(y) + ")+" + L(z) + " != " + L(x) + "+(" + L(y) + "+" +
                               L(z) + ")");
            }

    bool order_ok = true;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            c.count("order-antisym");
            if (M.leq(x, y) && M.leq(y, x)) {
                order_ok = false;
                c.fail("order-antisym", {E(x), E(y)},
                       L(x) + " <= " + L(y) + " and " + L(y) + " <= " + L(x));
            }
        }

    // lattice tables recomputed locally so every defective pair is listed
    std::vector<std::vector<int>> join(n, std::vector<int>(n, -1)), meet(n, std::vector<int>(n, -1));
    if (order_ok) {
        for (int x = 0; x < n; ++x)
            for (int y = x; y < n; ++y) {
                c.count("lattice-join");
                c.count("lattice-meet");
                int cand = -1;
                for (int u = 0; u < n; ++u)
                    if (M.leq(x, u) && M.leq(y, u) && (cand < 0 || M.leq(u, cand))) cand = u;
                bool ok = cand >= 0;
                for (int u = 0; ok && u < n; ++u)
                    if (M.leq(x, u) && M.leq(y, u) && !M.leq(cand, u)) ok = false;
                if (ok) join[x][y] = join[y][x] = cand;
                else c.fail("lattice-join", {E(x), E(y)}, "pair has no least upper bound");

                cand = -1;
                for (int u = 0; u < n; ++u)
                    if (M.leq(u, x) && M.leq(u, y) && (cand < 0 || M.leq(cand, u))) cand = u;
                ok = cand >= 0;
                for (int u = 0; ok && u < n; ++u)
                    if (M.leq(u, x) && M.leq(u, y) && !M.leq(u, cand)) ok = false;
                if (ok) meet[x][y] = meet[y][x] = cand;
                else c.fail("lattice-meet", {E(x), E(y)}, "pair has no greatest lower bound");
            }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (join[y][z] < 0 || meet[x][join[y][z]] < 0 || meet[x][y] < 0 ||
                        meet[x][z] < 0 || join[meet[x][y]][meet[x][z]] < 0)
                        continue;
                    c.count("lattice-distributive");
                    if (meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]])
                        c.fail("lattice-distributive", {E(x), E(y), E(z)},
                               L(x) + " ^ (" + L(y) + " v " + L(z) + ") != (" + L(x) + " ^ " + L(y) +
                                   ") v (" + L(x) + " ^ " + L(z) + ")");
                }
    }

    for (int x = 0; x < n; ++x) {
        c.count("idempotent-cover");
        bool covered = false;
        for (int a : M.idempotents())
            if (M.leq(x, a)) { covered = true; break; }
        if (!covered) c.fail("idempotent-cover", {E(x)}, "no idempotent above " + L(x));
    }

    // MV axioms on each idempotent interval, lambda computed locally
    auto local_lambda = [&](int a, int x) -> std::optional<int> {
        int cand = -1;
        for (int z = 0; z < n; ++z)
            if (M.leq(z, a) && M.oplus(z, x) == a && (cand < 0 || M.leq(z, cand))) cand = z;
        if (cand < 0) return std::nullopt;
        for (int z = 0; z < n; ++z)
            if (M.leq(z, a) && M.oplus(z, x) == a && !M.leq(cand, z)) return std::nullopt;
        return cand;
    };
    for (int a : M.idempotents()) {
        std::vector<int> interval;
        for (int x = 0; x < n; ++x)
            if (M.leq(x, a)) interval.push_back(x);
        std::vector<std::optional<int>> lam(n);
        for (int x : interval) {
            c.count("mv-absorb");
            if (M.oplus(x, a) != a)
                c.fail("mv-absorb", {E(x), E(a)}, L(x) + "+" + L(a) + " != " + L(a));
            c.count("mv-lambda");
            lam[x] = local_lambda(a, x);
            if (!lam[x])
                c.fail("mv-lambda", {E(x), E(a)},
                       "no least z in [0," + L(a) + "] with z+" + L(x) + " = " + L(a));
        }
        for (int x : interval) {
            if (!lam[x]) continue;
            c.count("mv-involution");
            const auto ll = lam[*lam[x]];
            if (!ll || *ll != x)
                c.fail("mv-involution", {E(x), E(a)},
                       "lambda_" + L(a) + "(lambda_" + L(a) + "(" + L(x) + ")) = " +
                           (ll ? L(*ll) : std::string("undefined")) + " != " + L(x));
        }
        for (int x : interval)
            for (int y : interval) {
                c.count("mv-closure");
                if (!M.leq(M.oplus(x, y), a)) {
                    c.fail("mv-closure", {E(x), E(y), E(a)},
                           L(x) + "+" + L(y) + " escapes [0," + L(a) + "]");
                    continue;
                }
                if (!lam[x] || !lam[y]) continue;
                const int t1 = M.oplus(x, *lam[y]);
                const int t2 = M.oplus(y, *lam[x]);
                if (!M.leq(t1, a) || !M.leq(t2, a)) continue;
                const auto lt1 = lam[t1] ? lam[t1] : local_lambda(a, t1);
                const auto lt2 = lam[t2] ? lam[t2] : local_lambda(a, t2);
                if (!lt1 || !lt2) continue;
                c.count("mv-chang");
                if (M.oplus(x, *lt1) != M.oplus(y, *lt2))
                    c.fail("mv-chang", {E(x), E(y), E(a)},
                           "x+(x+y*)* != y+(y+x*)* in [0," + L(a) + "]");
            }
    }
}

void check_symbolic(const SymbolicEmv& M, std::size_t budget, Check& c) {
    const std::vector<Elem> S = M.enumerate(budget);
    const Elem zero = M.zero();

    for (const Elem& x : S) {
        c.count("monoid-neutral");
        if (M.oplus(zero, x) != x) c.fail("monoid-neutral", {x}, "0+x != x");
    }
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            c.count("monoid-comm");
            if (M.oplus(S[i], S[j]) != M.oplus(S[j], S[i]))
                c.fail("monoid-comm", {S[i], S[j]}, "x+y != y+x");
        }
    for (const Elem& x : S)
        for (const Elem& y : S)
            for (const Elem& z : S) {
                c.count("monoid-assoc");
                if (M.oplus(M.oplus(x, y), z) != M.oplus(x, M.oplus(y, z)))
                    c.fail("monoid-assoc", {x, y, z}, "(x+y)+z != x+(y+z)");
            }

    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            c.count("order-antisym");
            if (M.leq(S[i], S[j]) && M.leq(S[j], S[i]))
                c.fail("order-antisym", {S[i], S[j]}, "two distinct comparable-both-ways elements");
        }

    for (const Elem& x : S)
        for (const Elem& y : S) {
            c.count("lattice-join");
            const Elem j = M.join(x, y);
            if (!M.leq(x, j) || !M.leq(y, j))
                c.fail("lattice-join", {x, y}, "join is not an upper bound");
            else
                for (const Elem& w : S)
                    if (M.leq(x, w) && M.leq(y, w) && !M.leq(j, w)) {
                        c.fail("lattice-join", {x, y, w}, "join not least among sampled bounds");
                        break;
                    }
            c.count("lattice-meet");
            const Elem m = M.meet(x, y);
            if (!M.leq(m, x) || !M.leq(m, y))
                c.fail("lattice-meet", {x, y}, "meet is not a lower bound");
            else
                for (const Elem& w : S)
                    if (M.leq(w, x) && M.leq(w, y) && !M.leq(w, m)) {
                        c.fail("lattice-meet", {x, y, w}, "meet not greatest among sampled bounds");
                        break;
                    }
        }
    for (const Elem& x : S)
        for (const Elem& y : S)
            for (const Elem& z : S) {
                c.count("lattice-distributive");
                if (M.meet(x, M.join(y, z)) != M.join(M.meet(x, y), M.meet(x, z)))
                    c.fail("lattice-distributive", {x, y, z}, "distributivity fails");
            }

    for (const Elem& x : S) {
        c.count("idempotent-cover");
        const Elem a = M.idempotent_above(x);
        if (!M.is_idempotent(a) || !M.leq(x, a))
            c.fail("idempotent-cover", {x}, "idempotent_above returned a bad cover");
    }

    for (const Elem& a : S) {
        if (!M.is_idempotent(a)) continue;
        std::vector<Elem> interval;
        for (const Elem& x : S)
            if (M.leq(x, a)) interval.push_back(x);
        for (const Elem& x : interval) {
            c.count("mv-absorb");
            if (M.oplus(x, a) != a) c.fail("mv-absorb", {x, a}, "x+a != a");
            c.count("mv-lambda");
            const Elem z = M.lambda(a, x);
            if (M.oplus(z, x) != a || !M.leq(z, a))
                c.fail("mv-lambda", {x, a}, "lambda does not complement x inside [0,a]");
            for (const Elem& w : interval)
                if (M.oplus(w, x) == a && !M.leq(z, w)) {
                    c.fail("mv-lambda", {x, a, w}, "lambda not least among sampled witnesses");
                    break;
                }
            c.count("mv-involution");
            if (M.lambda(a, z) != x) c.fail("mv-involution", {x, a}, "lambda_a(lambda_a(x)) != x");
        }
        for (const Elem& x : interval)
            for (const Elem& y : interval) {
                c.count("mv-closure");
                if (!M.leq(M.oplus(x, y), a)) {
                    c.fail("mv-closure", {x, y, a}, "x+y escapes [0,a]");
                    continue;
                }
                c.count("mv-chang");
                try {
                    const Elem lhs = M.oplus(x, M.lambda(a, M.oplus(x, M.lambda(a, y))));
                    const Elem rhs = M.oplus(y, M.lambda(a, M.oplus(y, M.lambda(a, x))));
                    if (lhs != rhs) c.fail("mv-chang", {x, y, a}, "x+(x+y*)* != y+(y+x*)*");
                } catch (const Error& e) {
                    c.fail("mv-chang", {x, y, a}, std::string("term undefined: ") + e.what());
                }
            }
    }
}

}  // namespace

AxiomReport verify_axioms(const Carrier& M, std::size_t budget) {
    Check c;
    if (M.is_finite()) {
        c.report.budget = static_cast<std::size_t>(M.finite().size());
        check_finite(M.finite(), c);
    } else {
        c.report.budget = budget;
        check_symbolic(M.symbolic(), budget, c);
    }
    return c.report;
}

}  // namespace emvkit
