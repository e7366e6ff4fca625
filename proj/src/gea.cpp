#include "emvkit/gea.hpp"

#include <algorithm>

#include "emvkit/axioms.hpp"
#include "emvkit/error.hpp"

namespace emvkit {

std::optional<int> GeaTable::diff(int x, int y) const {
    for (int z = 0; z < n; ++z)
        if (plus[y][z] == x) return z;
    return std::nullopt;
}

namespace {

// RDP: any two decompositions x1+x2 = y1+y2 refine through a 2x2 matrix.
void check_rdp(const GeaTable& E) {
    if (E.n > 9) return;  // exhaustive check is pinned to small carriers
    for (int x1 = 0; x1 < E.n; ++x1)
        for (int x2 = 0; x2 < E.n; ++x2) {
            if (!E.defined(x1, x2)) continue;
            const int s = E.add(x1, x2);
            for (int y1 = 0; y1 < E.n; ++y1)
                for (int y2 = 0; y2 < E.n; ++y2) {
                    if (E.plus[y1][y2] != s) continue;
                    bool found = false;
                    for (int c11 = 0; c11 < E.n && !found; ++c11) {
                        const auto c12 = E.diff(x1, c11);
                        const auto c21 = E.diff(y1, c11);
                        if (!c12 || !c21) continue;
                        const auto c22 = E.diff(x2, *c21);
                        if (!c22) continue;
                        if (E.plus[*c12][*c22] == y2) found = true;
                    }
                    if (!found)
                        throw Error("RdpViolation", "no Riesz refinement",
                                    {{"x1", x1}, {"x2", x2}, {"y1", y1}, {"y2", y2}});
                }
        }
}

}  // namespace

GeaTable to_gea(const FiniteEmv& M) {
    GeaTable E;
    E.n = M.size();
    E.plus.assign(E.n, std::vector<int>(E.n, -1));
    for (int x = 0; x < E.n; ++x)
        for (int y = 0; y < E.n; ++y)
            if (auto s = M.partial_add(x, y)) E.plus[x][y] = *s;
    check_rdp(E);
    return E;
}

FiniteEmv gea_to_emv(const GeaTable& E) {
    const int n = E.n;
    // GEA order: x <= y iff x + z = y for some z
    std::vector<std::vector<std::uint8_t>> leq(n, std::vector<std::uint8_t>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
            if (E.defined(x, z)) leq[x][E.add(x, z)] = 1;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && leq[x][y] && leq[y][x])
                throw Error("NotLattice", "GEA order is not antisymmetric", {{"x", x}, {"y", y}});

    std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            int cand = -1;
            for (int u = 0; u < n; ++u)
                if (leq[u][x] && leq[u][y] && (cand < 0 || leq[cand][u])) cand = u;
            bool ok = cand >= 0;
            for (int u = 0; ok && u < n; ++u)
                if (leq[u][x] && leq[u][y] && !leq[u][cand]) ok = false;
            if (!ok) throw Error("NotLattice", "pair without a meet", {{"x", x}, {"y", y}});
            meet[x][y] = meet[y][x] = cand;
        }
    // join needed only to detect non-lattices; existence is checked the same way
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            int cand = -1;
            for (int u = 0; u < n; ++u)
                if (leq[x][u] && leq[y][u] && (cand < 0 || leq[u][cand])) cand = u;
            bool ok = cand >= 0;
            for (int u = 0; ok && u < n; ++u)
                if (leq[x][u] && leq[y][u] && !leq[cand][u]) ok = false;
            if (!ok) throw Error("NotLattice", "pair without a join", {{"x", x}, {"y", y}});
        }

    check_rdp(E);

    // Boolean elements: a with a ^ (b - a) = 0 for every b >= a
    std::vector<std::uint8_t> boolean(n, 0);
    for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) {
            if (!leq[a][b]) continue;
            const auto d = E.diff(b, a);
            if (!d || meet[a][*d] != 0) ok = false;
        }
        boolean[a] = ok ? 1 : 0;
    }
    for (int x = 0; x < n; ++x) {
        bool covered = false;
        for (int a = 0; a < n && !covered; ++a)
            if (boolean[a] && leq[x][a]) covered = true;
        if (!covered)
            throw Error("NoBooleanCover", "element lies under no Boolean element", {{"x", x}});
    }

    std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int value = -1;
            for (int a = 0; a < n; ++a) {
                if (!boolean[a] || !leq[x][a] || !leq[y][a]) continue;
                const auto d = E.diff(a, x);
                if (!d) throw Error("RdpViolation", "difference a - x missing", {{"a", a}, {"x", x}});
                const int w = meet[y][*d];
                if (!E.defined(x, w))
                    throw Error("RdpViolation", "x + (y ^ (a-x)) undefined", {{"x", x}, {"y", y}, {"a", a}});
                const int v = E.add(x, w);
                if (value < 0) value = v;
                else if (value != v)
                    throw Error("RdpViolation", "oplus depends on the Boolean bound",
                                {{"x", x}, {"y", y}, {"a", a}});
            }
            if (value < 0)
                throw Error("NoBooleanCover", "no Boolean element above the pair", {{"x", x}, {"y", y}});
            table[x][y] = value;
        }
    return FiniteEmv(table);
}

LatticeTables monoid_reconstruct(const FiniteEmv& M) {
    // (E1)/(E2) hypotheses: every idempotent interval is an MV-algebra and
    // every element lies under an idempotent; delegate to the axiom checker.
    const AxiomReport report = verify_axioms(Carrier(M));
    for (const auto& v : report.violations) {
        if (v.axiom_id.rfind("mv-", 0) == 0 || v.axiom_id == "idempotent-cover") {
            nlohmann::json witness = nlohmann::json::array();
            for (const auto& e : v.witness) witness.push_back(elem_str(e));
            throw Error("HypothesisFailure", v.axiom_id + ": " + v.detail, {{"witness", witness}});
        }
    }
    const auto top = M.top();
    if (!top || !M.is_idempotent(*top))
        throw Error("HypothesisFailure", "no top idempotent");
    const int a = *top;
    const int n = M.size();
    LatticeTables t;
    t.join.assign(n, std::vector<int>(n, -1));
    t.meet.assign(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            t.join[x][y] = M.oplus(M.odot(x, M.lambda(a, y)), y);
            t.meet[x][y] = M.odot(x, M.oplus(M.lambda(a, x), y));
        }
    const OrderTables derived = natural_order(M);
    if (t.join != derived.join || t.meet != derived.meet)
        throw Error("DisagreementBug", "reconstructed lattice differs from the derived order");
    return t;
}

}  // namespace emvkit
