#include "emvkit/measures.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>

#include "emvkit/error.hpp"
#include "emvkit/ratlp.hpp"

namespace emvkit {

namespace {

// dense partial-addition and difference tables; -1 = undefined
struct PartialTables {
    std::vector<std::vector<int>> plus;
    std::vector<std::vector<int>> diff;  // diff[x][y] = unique z with y+z = x

    explicit PartialTables(const FiniteEmv& M) {
        const int n = M.size();
        plus.assign(n, std::vector<int>(n, -1));
        diff.assign(n, std::vector<int>(n, -1));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (auto s = M.partial_add(x, y)) plus[x][y] = *s;
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int s = plus[y][z];
                if (s >= 0) diff[s][y] = z;
            }
    }
};

// per-call memo keyed by (target, least allowed part, parts budget);
// std::map keeps references stable across the recursion
struct DecompositionEnumerator {
    explicit DecompositionEnumerator(const FiniteEmv& M) : t(M) {}

    const std::vector<std::vector<int>>& run(int x, int min_part, int parts_left) {
        const std::array<int, 3> key{x, min_part, parts_left};
        if (const auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<std::vector<int>> out;
        if (x == 0) {
            out.push_back({});
        } else if (parts_left > 0) {
            const int n = static_cast<int>(t.plus.size());
            for (int p = std::max(min_part, 1); p < n; ++p) {
                const int rest = t.diff[x][p];
                if (rest < 0) continue;
                for (const auto& suffix : run(rest, p, parts_left - 1)) {
                    std::vector<int> parts;
                    parts.reserve(suffix.size() + 1);
                    parts.push_back(p);
                    parts.insert(parts.end(), suffix.begin(), suffix.end());
                    out.push_back(std::move(parts));
                }
            }
        }
        return memo.emplace(key, std::move(out)).first->second;
    }

    std::vector<Decomposition> list(int x, int max_parts) {
        std::vector<Decomposition> out;
        for (const auto& parts : run(x, 1, max_parts)) out.push_back({parts});
        std::sort(out.begin(), out.end(),
                  [](const Decomposition& a, const Decomposition& b) { return a.parts < b.parts; });
        return out;
    }

    PartialTables t;
    std::map<std::array<int, 3>, std::vector<std::vector<int>>> memo;
};

}  // namespace

std::vector<Decomposition> decompositions(const FiniteEmv& M, int x, int max_parts) {
    if (x < 0 || x >= M.size()) throw Error("BadInput", "element out of range");
    return DecompositionEnumerator(M).list(x, max_parts);
}

bool is_signed_measure(const FiniteEmv& M, const SignedMeasureVec& m,
                       std::pair<int, int>* witness) {
    const int n = M.size();
    if (static_cast<int>(m.values.size()) != n)
        throw Error("DimensionMismatch", "measure does not match the carrier");
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            const auto s = M.partial_add(x, y);
            if (!s) continue;
            if (m.values[*s] != m.values[x] + m.values[y]) {
                if (witness) *witness = {x, y};
                return false;
            }
        }
    return true;
}

SignedMeasureVec sup_construction(const FiniteEmv& M, const std::vector<Rat>& d) {
    const int n = M.size();
    if (static_cast<int>(d.size()) != n)
        throw Error("DimensionMismatch", "mapping does not match the carrier");
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            const auto s = M.partial_add(x, y);
            if (s && d[*s] > d[x] + d[y])
                throw Error("NotSubadditive", "d(x+y) > d(x)+d(y)",
                            {{"x", M.label(x)}, {"y", M.label(y)}});
        }
    SignedMeasureVec m;
    m.values.assign(n, Rat(0));
    DecompositionEnumerator enumerator(M);
    for (int x = 1; x < n; ++x) {
        bool first = true;
        for (const auto& parts : enumerator.run(x, 1, M.height(x))) {
            Rat sum(0);
            for (int p : parts) sum += d[p];
            if (first || sum > m.values[x]) m.values[x] = sum;
            first = false;
        }
    }
    std::pair<int, int> w;
    if (!is_signed_measure(M, m, &w))
        throw Error("DisagreementBug", "sup construction produced a non-additive mapping",
                    {{"x", M.label(w.first)}, {"y", M.label(w.second)}});
    return m;
}

namespace {

enum class Extreme { Max, Min };

// (a v b)(x) = sup { a(y) + b(z) : y + z = x }, and dually for the meet
SignedMeasureVec pairwise_extreme(const FiniteEmv& M, const SignedMeasureVec& a,
                                  const SignedMeasureVec& b, Extreme mode) {
    if (!is_signed_measure(M, a) || !is_signed_measure(M, b))
        throw Error("NotAdditive", "lattice operations need additive inputs");
    const int n = M.size();
    const PartialTables t(M);
    SignedMeasureVec out;
    out.values.assign(n, Rat(0));
    for (int x = 0; x < n; ++x) {
        bool first = true;
        for (int y = 0; y < n; ++y) {
            const int z = t.diff[x][y];
            if (z < 0) continue;
            const Rat v = a.values[y] + b.values[z];
            if (first || (mode == Extreme::Max ? v > out.values[x] : v < out.values[x]))
                out.values[x] = v;
            first = false;
        }
    }
    return out;
}

}  // namespace

SignedMeasureVec jordan_join(const FiniteEmv& M, const SignedMeasureVec& a,
                             const SignedMeasureVec& b) {
    SignedMeasureVec join = pairwise_extreme(M, a, b, Extreme::Max);
    // independent route: sup-construction over the pointwise max
    std::vector<Rat> d(M.size());
    for (int x = 0; x < M.size(); ++x) d[x] = std::max(a.values[x], b.values[x]);
    if (!(sup_construction(M, d) == join))
        throw Error("DisagreementBug", "join via pairs differs from the sup construction");
    return join;
}

SignedMeasureVec jordan_meet(const FiniteEmv& M, const SignedMeasureVec& a,
                             const SignedMeasureVec& b) {
    SignedMeasureVec meet = pairwise_extreme(M, a, b, Extreme::Min);
    // dual route through the order anti-automorphism m -> -m
    SignedMeasureVec na, nb;
    for (const Rat& v : a.values) na.values.push_back(-v);
    for (const Rat& v : b.values) nb.values.push_back(-v);
    SignedMeasureVec njoin = pairwise_extreme(M, na, nb, Extreme::Max);
    for (int x = 0; x < M.size(); ++x)
        if (meet.values[x] != -njoin.values[x])
            throw Error("DisagreementBug", "meet is not dual to the join");
    std::pair<int, int> w;
    if (!is_signed_measure(M, meet, &w))
        throw Error("DisagreementBug", "meet is not additive");
    return meet;
}

std::pair<SignedMeasureVec, SignedMeasureVec> jordan_decomposition(const FiniteEmv& M,
                                                                   const SignedMeasureVec& m) {
    SignedMeasureVec zero;
    zero.values.assign(M.size(), Rat(0));
    SignedMeasureVec pos = jordan_join(M, m, zero);
    SignedMeasureVec meet = jordan_meet(M, m, zero);
    SignedMeasureVec neg;
    for (const Rat& v : meet.values) neg.values.push_back(-v);
    for (int x = 0; x < M.size(); ++x)
        if (m.values[x] != pos.values[x] - neg.values[x])
            throw Error("DisagreementBug", "m != m+ - m-", {{"x", M.label(x)}});
    return {std::move(pos), std::move(neg)};
}

TWeights strong_join_T(const TWeights& m1, const TWeights& m2) {
    auto check = [](const TWeights& m) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i].second < 0)
                throw Error("BadInput", "strong measures on the subsets family are nonnegative");
            if (i > 0 && m[i - 1].first >= m[i].first)
                throw Error("NotFiniteSupport", "weights must be sorted by index without repeats");
        }
    };
    check(m1);
    check(m2);
    std::map<std::uint32_t, Rat> w1(m1.begin(), m1.end()), w2(m2.begin(), m2.end());
    std::vector<std::uint32_t> support;
    for (const auto& [k, v] : w1) support.push_back(k);
    for (const auto& [k, v] : w2) support.push_back(k);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    TWeights join;
    auto at = [](const std::map<std::uint32_t, Rat>& w, std::uint32_t k) {
        const auto it = w.find(k);
        return it == w.end() ? Rat(0) : it->second;
    };
    for (std::uint32_t k : support) {
        const Rat v = std::max(at(w1, k), at(w2, k));
        if (v != 0) join.emplace_back(k, v);
    }

    // decomposition-formula oracle on every subset of the joint support of
    // size <= 5: sup over splits S = S1 u S2 of m1(S1) + m2(S2)
    auto check_subset = [&](const std::vector<std::uint32_t>& S) {
        Rat expect(0);
        for (std::uint32_t k : S) expect += std::max(at(w1, k), at(w2, k));
        Rat best(0);
        bool first = true;
        const std::size_t splits = std::size_t(1) << S.size();
        for (std::size_t split = 0; split < splits; ++split) {
            Rat v(0);
            for (std::size_t b = 0; b < S.size(); ++b)
                v += (split & (std::size_t(1) << b)) ? at(w1, S[b]) : at(w2, S[b]);
            if (first || v > best) best = v;
            first = false;
        }
        if (best != expect)
            throw Error("DisagreementBug",
                        "coordinatewise join differs from the decomposition formula");
    };
    std::vector<std::uint32_t> current;
    const std::function<void(std::size_t)> walk = [&](std::size_t from) {
        check_subset(current);
        if (current.size() == 5) return;
        for (std::size_t i = from; i < support.size(); ++i) {
            current.push_back(support[i]);
            walk(i + 1);
            current.pop_back();
        }
    };
    walk(0);
    return join;
}

DiscreteMeasure integral_represent(const FiniteEmv& M, const StateVec& s) {
    const auto weights = km_decompose(M, s);  // throws NotAState for non-states
    const auto morphisms = state_morphisms(M);
    DiscreteMeasure out;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] != 0) out.weights.emplace_back(std::to_string(i), weights[i]);
    // evaluation must reproduce the state at every element
    for (int x = 0; x < M.size(); ++x) {
        Rat acc(0);
        for (std::size_t i = 0; i < weights.size(); ++i)
            acc += weights[i] * morphisms[i].values[x];
        if (acc != s.values[x])
            throw Error("DisagreementBug", "representing measure fails to evaluate back",
                        {{"x", M.label(x)}});
    }
    return out;
}

DiscreteMeasure integral_represent(const SymbolicEmv& A, const SymbolicState& s,
                                   std::size_t verify_budget) {
    const bool is_T = A.family() == SymbolicEmv::Family::FinSubsets;
    const bool is_repr_T = A.family() == SymbolicEmv::Family::Representing &&
                           A.inner().family() == SymbolicEmv::Family::FinSubsets;
    if (!is_T && !is_repr_T)
        throw Error("UnsupportedCarrier",
                    "symbolic integral representation covers the finite-subsets family and its "
                    "representing algebra");
    if (!s.finite_support())
        throw Error("NotFiniteSupport",
                    "a geometric tail has no finitely supported representing measure");
    const PreStateClass cls = classify_prestate(A, s);
    if (cls != PreStateClass::State && cls != PreStateClass::StateMorphism)
        throw Error("NotAState", "input is not a state", {{"class", to_string(cls)}});

    DiscreteMeasure out;
    for (const auto& [n, w] : s.base) out.weights.emplace_back(std::to_string(n), w);
    out.inf_atom = s.inf_weight;
    for (const Elem& x : A.enumerate(verify_budget)) {
        Rat acc = s.inf_weight * (is_repr_T && std::get<ReprElem>(x).complement ? 1 : 0);
        for (const auto& [n, w] : s.base) acc += w * morphism_value(A, n, x);
        if (acc != eval_state(A, s, x))
            throw Error("DisagreementBug", "representing measure fails to evaluate back",
                        {{"x", elem_str(x)}});
    }
    return out;
}

std::vector<SignedMeasureVec> random_signed_measures(const FiniteEmv& M, int count,
                                                     std::uint64_t seed) {
    const auto morphisms = state_morphisms(M);
    const int n = M.size();
    std::mt19937_64 rng(seed);
    std::vector<SignedMeasureVec> out;

    auto integer_combo = [&]() {
        SignedMeasureVec m;
        m.values.assign(n, Rat(0));
        for (const auto& morph : morphisms) {
            const long long c = static_cast<long long>(rng() % 7) - 3;
            for (int x = 0; x < n; ++x) m.values[x] += Rat(c) * morph.values[x];
        }
        return m;
    };

    while (static_cast<int>(out.size()) < count) {
        if (out.size() % 2 == 0) {
            out.push_back(integer_combo());
        } else {
            // additivity system with random rational pins, solved exactly
            ratlp::LinSystem sys;
            for (int x = 0; x < n; ++x) sys.add_variable("m(" + M.label(x) + ")", false);
            sys.add_equality({{0, Rat(1)}}, Rat(0));
            for (int x = 0; x < n; ++x)
                for (int y = x; y < n; ++y) {
                    const auto s = M.partial_add(x, y);
                    if (!s || x == 0 || y == 0) continue;
                    sys.add_equality({{*s, Rat(1)}, {x, Rat(-1)}, {y, Rat(-1)}}, Rat(0));
                }
            const std::size_t pins = morphisms.size();
            for (std::size_t i = 0; i < pins; ++i) {
                const int e = 1 + static_cast<int>(rng() % (n - 1));
                const long long num = static_cast<long long>(rng() % 13) - 6;
                const long long den = 1 + static_cast<long long>(rng() % 4);
                sys.add_equality({{e, Rat(1)}}, Rat(num, den));
            }
            const auto sol = ratlp::solve(sys);
            if (sol.feasible) out.push_back(SignedMeasureVec{sol.assignment});
            else out.push_back(integer_combo());
        }
        if (!is_signed_measure(M, out.back()))
            throw Error("DisagreementBug", "generated measure is not additive");
    }
    return out;
}

}  // namespace emvkit
