#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "emvkit/algebra.hpp"
#include "emvkit/prestates.hpp"
#include "emvkit/rational.hpp"
#include "emvkit/states.hpp"

namespace emvkit {

/// Additive real-valued functional on a finite carrier; no sign or bound
/// restriction.
struct SignedMeasureVec {
    std::vector<Rat> values;

    bool operator==(const SignedMeasureVec&) const = default;
};

/// Multiset of nonzero parts whose iterated partial sum equals the target;
/// canonical form is sorted by element index.
struct Decomposition {
    std::vector<int> parts;

    bool operator==(const Decomposition&) const = default;
};

/// All canonical decompositions of x into at most max_parts nonzero parts.
/// Complete once max_parts reaches the height of x, since every nonzero part
/// strictly increases the running sum. x = 0 yields just the empty
/// decomposition.
std::vector<Decomposition> decompositions(const FiniteEmv& M, int x, int max_parts);

/// Additivity check with a witness pair on failure.
bool is_signed_measure(const FiniteEmv& M, const SignedMeasureVec& m,
                       std::pair<int, int>* witness = nullptr);

/// The least measure above a subadditive d: m(x) = max over decompositions
/// of the part-sums of d. Additivity of the result is asserted.
SignedMeasureVec sup_construction(const FiniteEmv& M, const std::vector<Rat>& d);

/// Join/meet in the lattice of Jordan signed measures, computed from
/// two-part decompositions sup/inf formulas. The join is cross-checked
/// against the sup-construction with d = pointwise max.
SignedMeasureVec jordan_join(const FiniteEmv& M, const SignedMeasureVec& a,
                             const SignedMeasureVec& b);
SignedMeasureVec jordan_meet(const FiniteEmv& M, const SignedMeasureVec& a,
                             const SignedMeasureVec& b);

/// Jordan decomposition m = pos - neg with pos = m v 0 and neg = -(m ^ 0);
/// the identity is asserted exactly.
std::pair<SignedMeasureVec, SignedMeasureVec> jordan_decomposition(const FiniteEmv& M,
                                                                   const SignedMeasureVec& m);

/// Finite-support nonnegative measure on the finite-subsets family, stored
/// as morphism weights.
using TWeights = std::vector<std::pair<std::uint32_t, Rat>>;

/// Join of strong measures on the finite-subsets family: coordinatewise max
/// of the weight sequences, verified against the decomposition formula on
/// all subsets of the joint support of size <= 5.
TWeights strong_join_T(const TWeights& m1, const TWeights& m2);

/// Barycentric measure on the discrete state-morphism set.
struct DiscreteMeasure {
    std::vector<std::pair<std::string, Rat>> weights;  // morphism id -> weight, zero dropped
    Rat inf_atom = Rat(0);
};

/// Unique representing measure of a state on a finite carrier (the
/// Krein-Mil'man weights read as a measure); evaluation back is verified at
/// every element. Morphism input yields a Dirac measure.
DiscreteMeasure integral_represent(const FiniteEmv& M, const StateVec& s);

/// Discrete instantiation on the finite-subsets family and its representing
/// algebra: weights are the component weights, the infinite atom is kept
/// separately.
DiscreteMeasure integral_represent(const SymbolicEmv& A, const SymbolicState& s,
                                   std::size_t verify_budget = 12);

/// Seeded pool of additive signed measures: integer combinations of the
/// morphism basis interleaved with solutions of the additivity system pinned
/// at random rational values.
std::vector<SignedMeasureVec> random_signed_measures(const FiniteEmv& M, int count,
                                                     std::uint64_t seed);

}  // namespace emvkit
