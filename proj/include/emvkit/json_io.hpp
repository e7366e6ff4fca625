#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "emvkit/algebra.hpp"
#include "emvkit/axioms.hpp"
#include "emvkit/measures.hpp"
#include "emvkit/prestates.hpp"
#include "emvkit/states.hpp"
#include "emvkit/structure.hpp"

namespace emvkit::io {

using nlohmann::json;

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

/// Algebra-spec schema:
///   {"kind":"table","oplus":[[...]]} | {"kind":"chain","k":2} |
///   {"kind":"product","factors":[...]} | {"kind":"boolean","m":2} |
///   {"kind":"finsubsets"} | {"kind":"finsupport","k":3} |
///   {"kind":"representing","inner":{...}} | {"kind":"changlex"}
AlgebraSpec spec_from_json(const json& j);

/// Finite carrier size implied by a spec, when finite.
std::optional<long long> finite_size(const AlgebraSpec& spec);

/// EMVKIT_MAX_CARRIER (default 256).
long long max_carrier();

/// build() with the finite-size cap applied up front.
Carrier build_capped(const AlgebraSpec& spec);

/// Elements: integers (finite index), sorted arrays (sets), {"idx":level}
/// objects (maps), {"b":0|1,"m":int} (lex pairs),
/// {"direct":elem} | {"complement":elem} (representing).
json elem_to_json(const Elem& e);
Elem elem_from_json(const json& j);

/// {"values": {"<label-or-index>": "p/q", ...}} covering the whole carrier.
StateVec state_from_json(const FiniteEmv& M, const json& j);
json state_to_json(const FiniteEmv& M, const StateVec& s);

/// Same schema, but partial coverage is allowed (extension pins).
std::map<int, Rat> values_from_json(const FiniteEmv& M, const json& j);

SignedMeasureVec measure_from_json(const FiniteEmv& M, const json& j);
json measure_to_json(const FiniteEmv& M, const SignedMeasureVec& m);

/// {"base": [[n,"p/q"],...], "tail": {"n0":..,"c":"p/q","q":"p/q"},
///  "inf": "p/q"}; tail and inf optional.
SymbolicState symbolic_state_from_json(const json& j);
json symbolic_state_to_json(const SymbolicState& s);

/// Sorted element array (labels on output; labels or indices on input).
json ideal_to_json(const FiniteEmv& M, const Ideal& I);
std::vector<int> elements_from_json(const FiniteEmv& M, const json& j);

json axiom_report_to_json(const AxiomReport& r);
json state_check_to_json(const FiniteEmv& M, const StateCheck& c);
json discrete_measure_to_json(const DiscreteMeasure& m);
json quotient_to_json(const Quotient& q);

int element_from_label(const FiniteEmv& M, const std::string& key);

}  // namespace emvkit::io
