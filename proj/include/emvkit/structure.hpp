#pragma once

#include <string>
#include <vector>

#include "emvkit/algebra.hpp"

namespace emvkit {

/// Ideal of a finite carrier: contains 0, downward closed, closed under +.
struct Ideal {
    std::vector<int> members;  // sorted

    bool contains(int x) const;
    bool operator==(const Ideal&) const = default;
};

/// Least ideal containing the seed: down-closure and +-closure to fixpoint.
Ideal ideal_generated(const FiniteEmv& M, const std::vector<int>& seed);

/// Maximal ideals via the idempotent-atom shortcut I_e = {x : x ^ e = 0},
/// cross-checked against the subset brute force whenever the carrier has at
/// most 12 elements. Result is duplicate-free and sorted by member list.
std::vector<Ideal> maximal_ideals(const FiniteEmv& M);

/// Subset enumeration oracle; independent of the atom shortcut.
std::vector<Ideal> maximal_ideals_bruteforce(const FiniteEmv& M);

/// Radical (intersection of maximal ideals) and infinitesimals (elements
/// whose every multiple n.x stays defined), verified to agree.
struct RadicalResult {
    Ideal radical;
    Ideal infinitesimals;
};
RadicalResult radical_and_infinitesimals(const FiniteEmv& M);

/// Symbolic families use their algebraic membership rule; the sampled
/// elements up to the bound are reported, and the iteration-based
/// infinitesimal probe is cross-checked on the sample.
struct SymbolicRadical {
    std::string rule;
    std::vector<Elem> radical_sample;
    std::vector<Elem> infinitesimal_sample;
};
SymbolicRadical radical_and_infinitesimals(const SymbolicEmv& M, std::size_t bound);

/// Quotient by a proper ideal: classes of x/I = y/I iff each is below the
/// other up to ideal slack, with the induced table. Classes are ordered by
/// (height, least member), so the class of 0 is class 0.
struct Quotient {
    FiniteEmv algebra;
    std::vector<int> projection;           // element -> class index
    std::vector<std::vector<int>> classes;  // sorted members per class
};
Quotient quotient(const FiniteEmv& M, const Ideal& I);

/// Least subset containing the seed and 0, closed under +, join, meet, and
/// lambda_b for every idempotent b in the subset.
std::vector<int> subalgebra_closure(const FiniteEmv& M, const std::vector<int>& seed);

/// Representing MV-algebra of a top-free symbolic family (Direct/Complement
/// elements over the base carrier).
SymbolicEmv representing_mv(const SymbolicEmv& M);

}  // namespace emvkit
