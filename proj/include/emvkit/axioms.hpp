#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "emvkit/algebra.hpp"
#include "emvkit/elem.hpp"

namespace emvkit {

struct AxiomViolation {
    std::string axiom_id;
    std::vector<Elem> witness;
    std::string detail;
};

/// Outcome of verify_axioms. Violations are data, not errors; empty
/// violations means every tested instance passed.
struct AxiomReport {
    std::vector<AxiomViolation> violations;
    std::map<std::string, std::uint64_t> checked_counts;
    std::size_t budget = 0;  // sample size used (carrier size when finite)

    bool ok() const { return violations.empty(); }
};

/// Finite carriers: exhaustive check of the monoid laws, the derived-order
/// lattice laws with distributivity, the MV axioms on every idempotent
/// interval, and the idempotent cover. Symbolic carriers: the same checks on
/// all tuples drawn from enumerate(budget); this is a sampled check, not a
/// proof.
AxiomReport verify_axioms(const Carrier& M, std::size_t budget = 8);

}  // namespace emvkit
