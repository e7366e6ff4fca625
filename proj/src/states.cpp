#include "emvkit/states.hpp"

#include <algorithm>
#include <random>

#include "emvkit/error.hpp"
#include "emvkit/structure.hpp"

namespace emvkit {

ratlp::LinSystem state_polytope(const FiniteEmv& M) {
    const int n = M.size();
    ratlp::LinSystem sys;
    for (int x = 0; x < n; ++x) sys.add_variable("s(" + M.label(x) + ")", true);
    sys.add_equality({{0, Rat(1)}}, Rat(0));
    const auto top = M.top();
    if (!top || !M.is_idempotent(*top))
        throw Error("NoIdempotentCover", "state polytope needs a top idempotent");
    sys.add_equality({{*top, Rat(1)}}, Rat(1));
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            const auto s = M.partial_add(x, y);
            if (!s) continue;
            if (x == 0 || y == 0) continue;  // neutral sums are implied by s(0)=0
            if (*s == x && y == x) continue;
            sys.add_equality({{*s, Rat(1)}, {x, Rat(-1)}, {y, Rat(-1)}}, Rat(0));
        }
    return sys;
}

std::vector<StateVec> state_morphisms(const FiniteEmv& M) {
    const auto ideals = maximal_ideals(M);  // throws ZeroAlgebra on the trivial carrier
    std::vector<StateVec> out;
    for (const Ideal& I : ideals) {
        const Quotient Q = quotient(M, I);
        const int h = Q.algebra.size() - 1;
        for (int a = 0; a < Q.algebra.size(); ++a)
            for (int b = 0; b < Q.algebra.size(); ++b)
                if (!Q.algebra.leq(a, b) && !Q.algebra.leq(b, a))
                    throw Error("DisagreementBug", "quotient by a maximal ideal is not a chain");
        StateVec s;
        s.values.resize(M.size());
        for (int x = 0; x < M.size(); ++x) s.values[x] = Rat(Q.projection[x], h);
        out.push_back(std::move(s));
    }
    return out;
}

StateCheck check_state(const FiniteEmv& M, const StateVec& f) {
    const int n = M.size();
    if (static_cast<int>(f.values.size()) != n)
        throw Error("DimensionMismatch", "state vector does not match the carrier");
    StateCheck r;

    r.is_additive = true;
    for (int x = 0; x < n && r.is_additive; ++x)
        for (int y = x; y < n; ++y) {
            const auto s = M.partial_add(x, y);
            if (!s) continue;
            if (f.values[*s] != f.values[x] + f.values[y]) {
                r.is_additive = false;
                r.additivity_witness = {x, y};
                break;
            }
        }

    r.in_range = std::all_of(f.values.begin(), f.values.end(),
                             [](const Rat& v) { return v >= 0 && v <= 1; });
    r.attains_one = std::any_of(f.values.begin(), f.values.end(),
                                [](const Rat& v) { return v == 1; });
    r.is_state = r.is_additive && r.in_range && r.attains_one;

    r.is_morphism = r.is_state;
    for (int x = 0; x < n && r.is_morphism; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (f.values[M.meet(x, y)] != std::min(f.values[x], f.values[y])) {
                r.is_morphism = false;
                r.morphism_witness = {x, y};
                break;
            }
        }

    for (int x = 0; x < n; ++x)
        if (f.values[x] == 0) r.kernel.push_back(x);
    for (const Ideal& I : maximal_ideals(M))
        if (I.members == r.kernel) { r.kernel_is_maximal = true; break; }

    r.is_vertex = ratlp::vertex_test(f.values, state_polytope(M));

    if (r.is_state) {
        if (r.is_morphism != r.kernel_is_maximal || r.is_morphism != r.is_vertex)
            throw Error("DisagreementBug",
                        "extremality routes disagree (morphism/kernel/vertex)",
                        {{"morphism", r.is_morphism},
                         {"kernel_maximal", r.kernel_is_maximal},
                         {"vertex", r.is_vertex}});
        r.is_extremal = r.is_morphism;
    }
    return r;
}

std::vector<Rat> km_decompose(const FiniteEmv& M, const StateVec& s) {
    const StateCheck chk = check_state(M, s);
    if (!chk.is_state) throw Error("NotAState", "input is not a state");
    const auto morphisms = state_morphisms(M);
    const std::size_t k = morphisms.size();

    std::vector<std::vector<Rat>> points;
    for (const auto& m : morphisms) points.push_back(m.values);
    if (ratlp::affine_rank(points) != static_cast<int>(k) - 1)
        throw Error("DisagreementBug", "state-morphisms are not affinely independent");

    ratlp::LinSystem sys;
    for (std::size_t i = 0; i < k; ++i) sys.add_variable("w" + std::to_string(i), true);
    {
        std::vector<std::pair<int, Rat>> ones;
        for (std::size_t i = 0; i < k; ++i) ones.emplace_back(static_cast<int>(i), Rat(1));
        sys.add_equality(ones, Rat(1));
    }
    for (int x = 0; x < M.size(); ++x) {
        std::vector<std::pair<int, Rat>> row;
        for (std::size_t i = 0; i < k; ++i) row.emplace_back(static_cast<int>(i), morphisms[i].values[x]);
        sys.add_equality(row, s.values[x]);
    }
    const auto outcome = ratlp::solve(sys);
    if (!outcome.feasible)
        throw Error("DecompositionInfeasible",
                    "no convex combination of morphisms reproduces the state");
    return outcome.assignment;
}

namespace {

struct SubAlgebra {
    FiniteEmv algebra;
    std::vector<int> to_parent;
    std::map<int, int> from_parent;
};

SubAlgebra make_subalgebra(const FiniteEmv& M, const std::vector<int>& sub) {
    std::vector<std::vector<int>> table(sub.size(), std::vector<int>(sub.size()));
    std::map<int, int> from;
    for (std::size_t i = 0; i < sub.size(); ++i) from[sub[i]] = static_cast<int>(i);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < sub.size(); ++i) {
        labels.push_back(M.label(sub[i]));
        for (std::size_t j = 0; j < sub.size(); ++j) {
            const int v = M.oplus(sub[i], sub[j]);
            const auto it = from.find(v);
            if (it == from.end()) throw Error("NotSubalgebra", "set is not closed under +");
            table[i][j] = it->second;
        }
    }
    return {FiniteEmv(std::move(table), std::move(labels)), sub, std::move(from)};
}

}  // namespace

StateVec horn_tarski_extend(const FiniteEmv& M, const std::vector<int>& sub,
                            const std::map<int, Rat>& s0, bool morphism_mode) {
    std::vector<int> sorted = sub;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted != subalgebra_closure(M, sorted))
        throw Error("NotSubalgebra", "element set is not a subalgebra (closure differs)");

    const SubAlgebra S = make_subalgebra(M, sorted);
    StateVec restricted;
    restricted.values.resize(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto it = s0.find(sorted[i]);
        if (it == s0.end())
            throw Error("NotAStateOnSub", "missing value on subalgebra element",
                        {{"element", M.label(sorted[i])}});
        restricted.values[i] = it->second;
    }
    const StateCheck chk = check_state(S.algebra, restricted);
    if (!chk.is_state)
        throw Error("NotAStateOnSub", "values are not a state on the subalgebra");
    if (morphism_mode && !chk.is_morphism)
        throw Error("NotAStateOnSub", "values are not a state-morphism on the subalgebra");

    if (!morphism_mode) {
        ratlp::LinSystem sys = state_polytope(M);
        for (std::size_t i = 0; i < sorted.size(); ++i)
            sys.add_equality({{sorted[i], Rat(1)}}, restricted.values[i]);
        const auto outcome = ratlp::solve(sys);
        if (!outcome.feasible)
            throw Error("Infeasible",
                        "extension LP infeasible; this contradicts the extension theorem");
        return StateVec{outcome.assignment};
    }

    // morphism mode: grow Ker(s0) into a maximal ideal that avoids the
    // subalgebra's top, then read off the unique morphism of that ideal
    std::vector<int> ker_parent;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (restricted.values[i] == 0) ker_parent.push_back(sorted[i]);
    const Ideal J = ideal_generated(M, ker_parent);
    const auto sub_top = S.algebra.top();
    if (!sub_top) throw Error("NotSubalgebra", "subalgebra has no top element");
    const int b0 = S.to_parent[*sub_top];

    const auto ideals = maximal_ideals(M);
    const auto morphisms = state_morphisms(M);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        const Ideal& I = ideals[i];
        if (I.contains(b0)) continue;
        if (!std::includes(I.members.begin(), I.members.end(), J.members.begin(), J.members.end()))
            continue;
        const StateVec& ext = morphisms[i];
        for (std::size_t j = 0; j < sorted.size(); ++j)
            if (ext.values[sorted[j]] != restricted.values[j])
                throw Error("DisagreementBug",
                            "morphism extension does not restrict to the input");
        return ext;
    }
    throw Error("Infeasible",
                "no maximal ideal extends the kernel; this contradicts the extension theorem");
}

std::string to_string(PreStateClass c) {
    switch (c) {
        case PreStateClass::Zero: return "zero";
        case PreStateClass::PreStateNotStrong: return "pre-state-not-strong";
        case PreStateClass::StrongPreStateNotState: return "strong-pre-state-not-state";
        case PreStateClass::State: return "state";
        case PreStateClass::StateMorphism: return "state-morphism";
    }
    return "?";
}

PreStateClass classify_prestate(const FiniteEmv& M, const StateVec& f) {
    const int n = M.size();
    if (static_cast<int>(f.values.size()) != n)
        throw Error("DimensionMismatch", "vector does not match the carrier");
    for (const Rat& v : f.values)
        if (v < 0 || v > 1) throw Error("BadInput", "pre-states take values in [0,1]");
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            const auto s = M.partial_add(x, y);
            if (s && f.values[*s] != f.values[x] + f.values[y])
                throw Error("NotAdditive", "functional is not additive",
                            {{"x", M.label(x)}, {"y", M.label(y)}});
        }
    const Rat sup = *std::max_element(f.values.begin(), f.values.end());
    if (sup == 0) return PreStateClass::Zero;
    if (sup < 1) return PreStateClass::StrongPreStateNotState;
    return check_state(M, f).is_morphism ? PreStateClass::StateMorphism : PreStateClass::State;
}

StateVec combination(const FiniteEmv& M, const std::vector<StateVec>& morphisms,
                     const std::vector<Rat>& weights) {
    if (morphisms.size() != weights.size())
        throw Error("DimensionMismatch", "weight count does not match morphism count");
    StateVec out;
    out.values.assign(M.size(), Rat(0));
    for (std::size_t i = 0; i < morphisms.size(); ++i)
        for (int x = 0; x < M.size(); ++x) out.values[x] += weights[i] * morphisms[i].values[x];
    return out;
}

std::vector<std::vector<Rat>> random_convex_weights(std::size_t k, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rat>> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Rat> w(k);
        Rat total(0);
        for (std::size_t j = 0; j < k; ++j) {
            w[j] = Rat(static_cast<long long>(rng() % 7));
            total += w[j];
        }
        if (total == 0) {
            w[i % k] = 1;
            total = 1;
        }
        for (auto& v : w) v /= total;
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace emvkit
