#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emvkit/algebra.hpp"
#include "emvkit/rational.hpp"
#include "emvkit/ratlp.hpp"

namespace emvkit {

/// Additive [0,1]-valued functional on a finite carrier, dense by element.
struct StateVec {
    std::vector<Rat> values;

    bool operator==(const StateVec&) const = default;
};

/// Polytope of all states: one boxed variable per element, s(0) = 0,
/// s(top) = 1, and additivity on every defined pair.
ratlp::LinSystem state_polytope(const FiniteEmv& M);

/// One state-morphism per maximal ideal: the quotient by the ideal is a
/// finite chain of height h and the morphism reads class heights divided
/// by h. Order follows the maximal-ideal enumeration order.
std::vector<StateVec> state_morphisms(const FiniteEmv& M);

struct StateCheck {
    bool is_additive = false;
    std::optional<std::array<int, 2>> additivity_witness;
    bool in_range = false;
    bool attains_one = false;
    bool is_state = false;
    bool is_morphism = false;
    std::optional<std::array<int, 2>> morphism_witness;
    std::vector<int> kernel;
    bool kernel_is_maximal = false;
    bool is_vertex = false;
    bool is_extremal = false;
};

/// Full diagnosis of a value vector. For states, the three extremality
/// routes (morphism criterion, kernel maximality, polytope vertex test) are
/// computed independently and must agree.
StateCheck check_state(const FiniteEmv& M, const StateVec& f);

/// Exact convex weights over state_morphisms(M) reproducing s. Unique by
/// affine independence of the morphisms, which is asserted.
std::vector<Rat> km_decompose(const FiniteEmv& M, const StateVec& s);

/// Extends a state on a subalgebra to the whole carrier: LP feasibility with
/// equality pins on the subalgebra (deterministic Bland point). In morphism
/// mode the kernel is extended to a maximal ideal avoiding the subalgebra's
/// top, which forces the restriction back onto the given morphism.
StateVec horn_tarski_extend(const FiniteEmv& M, const std::vector<int>& sub,
                            const std::map<int, Rat>& s0, bool morphism_mode = false);

enum class PreStateClass { Zero, PreStateNotStrong, StrongPreStateNotState, State, StateMorphism };
std::string to_string(PreStateClass c);

/// Finite classification: the supremum is always attained, so the only
/// classes are Zero, StrongPreStateNotState, State and StateMorphism.
PreStateClass classify_prestate(const FiniteEmv& M, const StateVec& f);

/// s = sum w_i * morphism_i (weights need not be convex).
StateVec combination(const FiniteEmv& M, const std::vector<StateVec>& morphisms,
                     const std::vector<Rat>& weights);

/// Seeded pool of random convex combinations of the morphisms.
std::vector<std::vector<Rat>> random_convex_weights(std::size_t k, int count, std::uint64_t seed);

}  // namespace emvkit
