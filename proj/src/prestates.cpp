#include "emvkit/prestates.hpp"

#include <algorithm>

#include "emvkit/error.hpp"

namespace emvkit {

Rat SymbolicState::weight_at(std::uint32_t n) const {
    Rat w(0);
    for (const auto& [idx, v] : base)
        if (idx == n) w += v;
    if (tail && n >= tail->start) w += tail->scale * rat_pow(tail->ratio, n - tail->start);
    return w;
}

Rat SymbolicState::component_mass() const {
    Rat m(0);
    for (const auto& [idx, v] : base) m += v;
    if (tail) m += tail->scale / (Rat(1) - tail->ratio);
    return m;
}

Rat SymbolicState::total_mass() const { return component_mass() + inf_weight; }

bool SymbolicState::finite_support() const { return !tail.has_value(); }

bool SymbolicState::is_zero() const { return base.empty() && !tail && inf_weight == 0; }

SymbolicState make_symbolic_state(std::vector<std::pair<std::uint32_t, Rat>> base,
                                  std::optional<GeometricTail> tail, Rat inf_weight) {
    SymbolicState s;
    std::sort(base.begin(), base.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [idx, v] : base) {
        if (v < 0) throw Error("BadInput", "state weights must be nonnegative");
        if (v == 0) continue;
        if (!s.base.empty() && s.base.back().first == idx) s.base.back().second += v;
        else s.base.emplace_back(idx, v);
    }
    if (tail && tail->scale != 0) {
        if (tail->scale < 0 || tail->ratio <= 0 || tail->ratio >= 1)
            throw Error("BadInput", "geometric tail needs scale >= 0 and ratio in (0,1)");
        s.tail = *tail;
    }
    if (inf_weight < 0) throw Error("BadInput", "infinite-morphism weight must be nonnegative");
    s.inf_weight = std::move(inf_weight);
    return s;
}

namespace {

// morphism indices that can take a nonzero value at x
std::vector<std::uint32_t> support_indices(const SymbolicEmv& A, const Elem& x) {
    switch (A.family()) {
        case SymbolicEmv::Family::FinSubsets:
            return std::get<FinSet>(x);
        case SymbolicEmv::Family::FinSupport: {
            std::vector<std::uint32_t> out;
            for (const auto& [k, v] : std::get<FinMap>(x).entries) {
                (void)v;
                out.push_back(k);
            }
            return out;
        }
        case SymbolicEmv::Family::ChangLex:
            return {0};
        case SymbolicEmv::Family::Representing:
            throw Error("UnsupportedCarrier", "support indices are for base families");
    }
    return {};
}

}  // namespace

Rat morphism_value(const SymbolicEmv& A, std::uint32_t n, const Elem& x) {
    switch (A.family()) {
        case SymbolicEmv::Family::FinSubsets: {
            const auto& s = std::get<FinSet>(x);
            return std::binary_search(s.begin(), s.end(), n) ? Rat(1) : Rat(0);
        }
        case SymbolicEmv::Family::FinSupport:
            return Rat(std::get<FinMap>(x).level(n), A.chain_height());
        case SymbolicEmv::Family::ChangLex: {
            if (n != 0) throw Error("BadInput", "the lex chain has a single state-morphism");
            return std::get<LexPair>(x).b == 1 ? Rat(1) : Rat(0);
        }
        case SymbolicEmv::Family::Representing: {
            const auto& r = std::get<ReprElem>(x);
            const Elem u = std::visit([](const auto& v) { return Elem(v); }, r.inner);
            const Rat inner = morphism_value(A.inner(), n, u);
            return r.complement ? Rat(1) - inner : inner;
        }
    }
    throw Error("BadInput", "unknown family");
}

Rat eval_state(const SymbolicEmv& A, const SymbolicState& s, const Elem& x) {
    if (A.family() == SymbolicEmv::Family::Representing) {
        const auto& r = std::get<ReprElem>(x);
        const Elem u = std::visit([](const auto& v) { return Elem(v); }, r.inner);
        Rat direct(0);
        for (std::uint32_t n : support_indices(A.inner(), u))
            direct += s.weight_at(n) * morphism_value(A.inner(), n, u);
        if (!r.complement) return direct;
        return s.inf_weight + s.component_mass() - direct;
    }
    if (s.inf_weight != 0)
        throw Error("BadInput", "infinite-morphism weight only applies to representing carriers");
    Rat out(0);
    for (std::uint32_t n : support_indices(A, x)) out += s.weight_at(n) * morphism_value(A, n, x);
    return out;
}

PreStateClass classify_prestate(const SymbolicEmv& M, const SymbolicState& f, std::size_t budget) {
    if (M.family() == SymbolicEmv::Family::ChangLex) {
        for (const auto& [idx, v] : f.base) {
            (void)v;
            if (idx != 0) throw Error("BadInput", "the lex chain has a single state-morphism");
        }
        if (f.tail) throw Error("BadInput", "geometric tails need infinitely many morphisms");
    }
    if (M.family() != SymbolicEmv::Family::Representing && f.inf_weight != 0)
        throw Error("BadInput", "infinite-morphism weight only applies to representing carriers");
    if (f.total_mass() > 1) throw Error("MassExceedsOne", "total mass exceeds 1");

    // sampled additivity check
    const auto sample = M.enumerate(budget);
    for (const Elem& x : sample)
        for (const Elem& y : sample) {
            const auto sum = M.partial_add(x, y);
            if (!sum) continue;
            if (eval_state(M, f, *sum) != eval_state(M, f, x) + eval_state(M, f, y))
                throw Error("NotAdditive", "functional is not additive",
                            {{"x", elem_str(x)}, {"y", elem_str(y)}});
        }

    if (f.is_zero()) return PreStateClass::Zero;

    Rat sup;
    bool attained;
    if (M.has_top()) {
        sup = eval_state(M, f, *M.top());
        attained = true;
    } else {
        sup = f.component_mass();
        attained = f.finite_support();
    }
    if (!attained) return PreStateClass::PreStateNotStrong;
    if (sup < 1) return PreStateClass::StrongPreStateNotState;

    // sup attained and equal to 1: a state; a morphism is a single unit atom
    const bool dirac_component = f.base.size() == 1 && f.base[0].second == 1 && !f.tail &&
                                 f.inf_weight == 0;
    const bool dirac_infinity = f.base.empty() && !f.tail && f.inf_weight == 1;
    return (dirac_component || dirac_infinity) ? PreStateClass::StateMorphism
                                               : PreStateClass::State;
}

SymbolicState extend_to_representing(const SymbolicEmv& M, const SymbolicState& s) {
    if (M.has_top())
        throw Error("HasTop", "the carrier is already an MV-algebra; nothing to extend");
    if (s.inf_weight != 0)
        throw Error("BadInput", "a pre-state on the base carrier has no infinite atom");
    const Rat mass = s.component_mass();
    if (mass > 1) throw Error("MassExceedsOne", "pre-state mass exceeds 1");
    SymbolicState out = s;
    out.inf_weight = Rat(1) - mass;
    return out;
}

Restriction restrict_from_representing(const SymbolicEmv& N, const SymbolicState& s) {
    if (N.family() != SymbolicEmv::Family::Representing)
        throw Error("UnsupportedCarrier", "restriction applies to representing algebras");
    SymbolicState r = s;
    r.inf_weight = 0;
    Restriction out{std::move(r), s.component_mass(), false};
    out.is_state = out.prestate.finite_support() && out.mass == 1;
    return out;
}

}  // namespace emvkit
