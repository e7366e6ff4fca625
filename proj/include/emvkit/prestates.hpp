#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "emvkit/algebra.hpp"
#include "emvkit/rational.hpp"
#include "emvkit/states.hpp"

namespace emvkit {

/// Geometric weight rule: lambda_n = scale * ratio^(n - start) for n >= start,
/// with ratio in (0,1). Closed-form mass scale/(1-ratio).
struct GeometricTail {
    std::uint32_t start = 0;
    Rat scale;
    Rat ratio;
};

/// Additive functional on a symbolic carrier, stored as a combination of
/// component morphisms: finitely many explicit weights, an optional geometric
/// tail, and an atom at the infinite morphism (representing carriers only).
struct SymbolicState {
    std::vector<std::pair<std::uint32_t, Rat>> base;  // sorted by morphism index
    std::optional<GeometricTail> tail;
    Rat inf_weight = Rat(0);

    Rat weight_at(std::uint32_t n) const;
    Rat component_mass() const;  // sum of base weights plus tail mass
    Rat total_mass() const;      // component mass plus the infinite atom
    bool finite_support() const;
    bool is_zero() const;
};

SymbolicState make_symbolic_state(std::vector<std::pair<std::uint32_t, Rat>> base,
                                  std::optional<GeometricTail> tail = std::nullopt,
                                  Rat inf_weight = Rat(0));

/// Value of the n-th component state-morphism at an element of the family.
Rat morphism_value(const SymbolicEmv& A, std::uint32_t n, const Elem& x);

/// Exact evaluation of the combination at an element; finite work because
/// component morphisms vanish off the element's support.
Rat eval_state(const SymbolicEmv& A, const SymbolicState& s, const Elem& x);

/// Classification per the pre-state taxonomy. The supremum is computed in
/// closed form: attained at the support when it is finite (or at the top when
/// the family has one), strictly approached otherwise. Additivity is checked
/// on sampled pairs.
PreStateClass classify_prestate(const SymbolicEmv& M, const SymbolicState& f,
                                std::size_t budget = 12);

/// Unique state on the representing algebra restricting to the given
/// pre-state: weights are kept and the missing mass moves to the infinite
/// morphism.
SymbolicState extend_to_representing(const SymbolicEmv& M, const SymbolicState& s);

struct Restriction {
    SymbolicState prestate;  // restriction to the embedded algebra
    Rat mass;
    bool is_state;
};

/// Restriction of a state on a representing algebra back to its base: the
/// infinite atom is dropped; reports whether the result is still a state.
Restriction restrict_from_representing(const SymbolicEmv& N, const SymbolicState& s);

}  // namespace emvkit
