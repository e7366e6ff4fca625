#include "emvkit/structure.hpp"

#include <algorithm>
#include <numeric>

#include "emvkit/error.hpp"

namespace emvkit {

bool Ideal::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

namespace {

std::vector<int> mask_to_sorted(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (mask & (std::uint64_t(1) << i)) out.push_back(i);
    return out;
}

bool is_ideal_mask(const FiniteEmv& M, std::uint64_t mask) {
    const int n = M.size();
    if (!(mask & 1)) return false;  // must contain 0
    for (int x = 0; x < n; ++x) {
        if (!(mask & (std::uint64_t(1) << x))) continue;
        for (int y = 0; y < n; ++y) {
            if (M.leq(y, x) && !(mask & (std::uint64_t(1) << y))) return false;
        }
        for (int y = 0; y <= x; ++y) {
            if (!(mask & (std::uint64_t(1) << y))) continue;
            if (!(mask & (std::uint64_t(1) << M.oplus(x, y)))) return false;
        }
    }
    return true;
}

}  // namespace

Ideal ideal_generated(const FiniteEmv& M, const std::vector<int>& seed) {
    const int n = M.size();
    std::vector<std::uint8_t> in(n, 0);
    in[0] = 1;
    for (int s : seed) {
        if (s < 0 || s >= n) throw Error("BadInput", "seed element out of range");
        in[s] = 1;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x) {
            if (in[x]) continue;
            bool add = false;
            for (int y = 0; y < n && !add; ++y)
                if (in[y] && M.leq(x, y)) add = true;
            for (int y = 0; y < n && !add; ++y)
                for (int z = 0; z < n; ++z)
                    if (in[y] && in[z] && M.oplus(y, z) == x) { add = true; break; }
            if (add) {
                in[x] = 1;
                changed = true;
            }
        }
    }
    Ideal I;
    for (int x = 0; x < n; ++x)
        if (in[x]) I.members.push_back(x);
    return I;
}

std::vector<Ideal> maximal_ideals_bruteforce(const FiniteEmv& M) {
    const int n = M.size();
    if (n <= 1) throw Error("ZeroAlgebra", "the zero algebra has no maximal ideal");
    if (n > 20) throw Error("BadInput", "brute-force ideal search capped at 20 elements");
    std::vector<std::uint64_t> proper;
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    for (std::uint64_t mask = 1; mask < full; mask += 2) {
        if (is_ideal_mask(M, mask)) proper.push_back(mask);
    }
    std::vector<Ideal> out;
    for (std::uint64_t a : proper) {
        bool maximal = true;
        for (std::uint64_t b : proper)
            if (a != b && (a & b) == a) { maximal = false; break; }
        if (maximal) out.push_back({mask_to_sorted(a, n)});
    }
    std::sort(out.begin(), out.end(),
              [](const Ideal& a, const Ideal& b) { return a.members < b.members; });
    return out;
}

std::vector<Ideal> maximal_ideals(const FiniteEmv& M) {
    if (M.size() <= 1) throw Error("ZeroAlgebra", "the zero algebra has no maximal ideal");
    std::vector<Ideal> out;
    for (int e : M.idempotent_atoms()) {
        Ideal I;
        for (int x = 0; x < M.size(); ++x)
            if (M.meet(x, e) == 0) I.members.push_back(x);
        out.push_back(std::move(I));
    }
    std::sort(out.begin(), out.end(),
              [](const Ideal& a, const Ideal& b) { return a.members < b.members; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (M.size() <= 12) {
        const auto oracle = maximal_ideals_bruteforce(M);
        if (oracle != out)
            throw Error("DisagreementBug",
                        "atom-based maximal ideals disagree with the subset oracle");
    }
    return out;
}

RadicalResult radical_and_infinitesimals(const FiniteEmv& M) {
    const auto maximal = maximal_ideals(M);
    const int n = M.size();
    RadicalResult r;
    for (int x = 0; x < n; ++x) {
        bool in_all = true;
        for (const Ideal& I : maximal)
            if (!I.contains(x)) { in_all = false; break; }
        if (in_all) r.radical.members.push_back(x);
    }
    for (int x = 0; x < n; ++x) {
        // iterate n.x; a defined step with x != 0 strictly increases, so the
        // carrier size bounds the loop
        int acc = x;
        bool infinite = true;
        for (int steps = 0; steps <= n; ++steps) {
            auto next = M.partial_add(acc, x);
            if (!next) { infinite = false; break; }
            if (*next == acc) break;  // stationary: every further multiple stays defined
            acc = *next;
        }
        if (infinite) r.infinitesimals.members.push_back(x);
    }
    if (r.radical.members != r.infinitesimals.members)
        throw Error("DisagreementBug", "radical and infinitesimal sets disagree");
    return r;
}

SymbolicRadical radical_and_infinitesimals(const SymbolicEmv& M, std::size_t bound) {
    SymbolicRadical out;
    auto rule = [&](const Elem& e) -> bool {
        switch (M.family()) {
            case SymbolicEmv::Family::FinSubsets:
            case SymbolicEmv::Family::FinSupport:
                return e == M.zero();
            case SymbolicEmv::Family::ChangLex:
                return std::get<LexPair>(e).b == 0;  // the (0,m) part
            case SymbolicEmv::Family::Representing:
                throw Error("UnsupportedCarrier",
                            "radical rule not defined for representing algebras");
        }
        return false;
    };
    switch (M.family()) {
        case SymbolicEmv::Family::FinSubsets:
        case SymbolicEmv::Family::FinSupport:
            out.rule = "radical = {0}";
            break;
        case SymbolicEmv::Family::ChangLex:
            out.rule = "radical = {(0,m) : m >= 0}";
            break;
        default:
            out.rule = "unsupported";
            break;
    }
    // sample both halves of the carrier deeply enough that radical elements
    // up to the bound appear (for the lex family: every (0,m) with m <= bound)
    for (const Elem& e : M.enumerate(2 * (bound + 1))) {
        const bool in_radical = rule(e);
        // iteration probe; for radical elements of ChangLex repeated addition
        // never becomes undefined, so the probe can only refute, never prove
        bool probe_infinite = true;
        Elem acc = e;
        const int max_steps = std::max(64, 2 * M.chain_height() + 2);
        for (int steps = 0; steps < max_steps; ++steps) {
            auto next = M.partial_add(acc, e);
            if (!next) { probe_infinite = false; break; }
            if (*next == acc) break;
            acc = *next;
        }
        if (in_radical && !probe_infinite)
            throw Error("DisagreementBug", "family radical rule refuted by iteration",
                        {{"x", elem_str(e)}});
        if (!in_radical && probe_infinite)
            throw Error("DisagreementBug", "iteration found an infinitesimal outside the rule",
                        {{"x", elem_str(e)}});
        if (in_radical) {
            out.radical_sample.push_back(e);
            out.infinitesimal_sample.push_back(e);
        }
    }
    return out;
}

Quotient quotient(const FiniteEmv& M, const Ideal& I) {
    const int n = M.size();
    if (static_cast<int>(I.members.size()) >= n || I.members.empty() || I.members[0] != 0)
        throw Error("ImproperIdeal", "quotient requires a proper ideal containing 0");
    // x ~ y iff x <= y+i and y <= x+j for some i,j in the ideal
    auto below_mod = [&](int x, int y) {
        for (int i : I.members)
            if (M.leq(x, M.oplus(y, i))) return true;
        return false;
    };
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        const int id = static_cast<int>(classes.size());
        classes.push_back({});
        for (int y = x; y < n; ++y) {
            if (cls[y] >= 0) continue;
            if (below_mod(x, y) && below_mod(y, x)) {
                cls[y] = id;
                classes[id].push_back(y);
            }
        }
    }
    const int q = static_cast<int>(classes.size());
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            const int rep = cls[M.oplus(classes[a][0], classes[b][0])];
            for (int x : classes[a])
                for (int y : classes[b])
                    if (cls[M.oplus(x, y)] != rep)
                        throw Error("DisagreementBug", "ideal relation is not a congruence");
            table[a][b] = rep;
        }
    FiniteEmv q0(table);
    if (!q0.lattice_ok()) throw Error("DisagreementBug", "quotient order is not a lattice");
    // canonical class order: by (height, least member)
    std::vector<int> perm(q);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (q0.height(a) != q0.height(b)) return q0.height(a) < q0.height(b);
        return classes[a][0] < classes[b][0];
    });
    std::vector<int> rank(q);
    for (int i = 0; i < q; ++i) rank[perm[i]] = i;
    std::vector<std::vector<int>> rtable(q, std::vector<int>(q));
    std::vector<std::vector<int>> rclasses(q);
    std::vector<std::string> rlabels(q);
    for (int a = 0; a < q; ++a) {
        rclasses[rank[a]] = classes[a];
        rlabels[rank[a]] = "[" + M.label(classes[a][0]) + "]";
        for (int b = 0; b < q; ++b) rtable[rank[a]][rank[b]] = rank[table[a][b]];
    }
    Quotient out{FiniteEmv(rtable, rlabels), {}, rclasses};
    out.projection.resize(n);
    for (int x = 0; x < n; ++x) out.projection[x] = rank[cls[x]];
    return out;
}

std::vector<int> subalgebra_closure(const FiniteEmv& M, const std::vector<int>& seed) {
    const int n = M.size();
    std::vector<std::uint8_t> in(n, 0);
    in[0] = 1;
    for (int s : seed) {
        if (s < 0 || s >= n) throw Error("BadInput", "seed element out of range");
        in[s] = 1;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        auto add = [&](int v) {
            if (!in[v]) {
                in[v] = 1;
                changed = true;
            }
        };
        for (int x = 0; x < n; ++x) {
            if (!in[x]) continue;
            for (int y = 0; y < n; ++y) {
                if (!in[y]) continue;
                add(M.oplus(x, y));
                add(M.join(x, y));
                add(M.meet(x, y));
            }
        }
        for (int b = 0; b < n; ++b) {
            if (!in[b] || !M.is_idempotent(b)) continue;
            for (int x = 0; x < n; ++x)
                if (in[x] && M.leq(x, b)) add(M.lambda(b, x));
        }
    }
    std::vector<int> out;
    for (int x = 0; x < n; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

SymbolicEmv representing_mv(const SymbolicEmv& M) {
    return SymbolicEmv::representing(M);
}

}  // namespace emvkit
