#include "emvkit/json_io.hpp"

#include <cstdlib>

#include "emvkit/error.hpp"

namespace emvkit::io {

json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const json& j) {
    if (j.is_string()) return rat_parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw Error("BadInput", "expected a rational as \"p/q\" or integer");
}

AlgebraSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw Error("BadInput", "algebra spec needs a \"kind\" field");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "table") {
        if (!j.contains("oplus") || !j["oplus"].is_array())
            throw Error("MalformedMatrix", "table spec needs an \"oplus\" matrix");
        AlgebraSpec s = AlgebraSpec::table(j["oplus"].get<std::vector<std::vector<long long>>>());
        return s;
    }
    if (kind == "chain") return AlgebraSpec::chain(j.at("k").get<int>());
    if (kind == "boolean") return AlgebraSpec::boolean(j.at("m").get<int>());
    if (kind == "product") {
        std::vector<AlgebraSpec> factors;
        for (const auto& f : j.at("factors")) factors.push_back(spec_from_json(f));
        return AlgebraSpec::product(std::move(factors));
    }
    if (kind == "finsubsets") return AlgebraSpec::finsubsets();
    if (kind == "finsupport") return AlgebraSpec::finsupport(j.at("k").get<int>());
    if (kind == "changlex") return AlgebraSpec::changlex();
    if (kind == "representing") return AlgebraSpec::representing(spec_from_json(j.at("inner")));
    throw Error("BadInput", "unknown algebra kind '" + kind + "'");
}

std::optional<long long> finite_size(const AlgebraSpec& spec) {
    using K = AlgebraSpec::Kind;
    switch (spec.kind) {
        case K::Table: return static_cast<long long>(spec.oplus.size());
        case K::Chain: return spec.k + 1LL;
        case K::Boolean: return spec.m >= 63 ? (1LL << 62) : (1LL << spec.m);
        case K::Product: {
            long long n = 1;
            for (const auto& f : spec.factors) {
                const auto s = finite_size(f);
                if (!s) return std::nullopt;
                if (*s > 0 && n > (1LL << 62) / *s) return 1LL << 62;  // saturate
                n *= *s;
            }
            return n;
        }
        default: return std::nullopt;
    }
}

long long max_carrier() {
    if (const char* env = std::getenv("EMVKIT_MAX_CARRIER")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 256;
}

Carrier build_capped(const AlgebraSpec& spec) {
    const auto size = finite_size(spec);
    if (size && *size > max_carrier())
        throw Error("CarrierTooLarge",
                    "finite carrier exceeds EMVKIT_MAX_CARRIER = " + std::to_string(max_carrier()),
                    {{"size", *size}});
    return build(spec);
}

json elem_to_json(const Elem& e) {
    struct V {
        json operator()(FinIdx i) const { return static_cast<long long>(i); }
        json operator()(const FinSet& s) const {
            json a = json::array();
            for (auto v : s) a.push_back(static_cast<long long>(v));
            return a;
        }
        json operator()(const FinMap& m) const {
            json o = json::object();
            for (const auto& [k, v] : m.entries) o[std::to_string(k)] = static_cast<long long>(v);
            return o;
        }
        json operator()(const LexPair& l) const {
            return json{{"b", static_cast<int>(l.b)}, {"m", static_cast<long long>(l.m)}};
        }
        json operator()(const ReprElem& r) const {
            const json inner = std::visit(V{}, r.inner);
            return r.complement ? json{{"complement", inner}} : json{{"direct", inner}};
        }
    };
    return std::visit(V{}, e);
}

Elem elem_from_json(const json& j) {
    if (j.is_number_integer()) {
        const long long v = j.get<long long>();
        if (v < 0) throw Error("BadInput", "negative element index");
        return FinIdx(static_cast<std::uint32_t>(v));
    }
    if (j.is_array()) {
        std::vector<std::uint32_t> xs;
        for (const auto& v : j) xs.push_back(v.get<std::uint32_t>());
        return make_set(std::move(xs));
    }
    if (j.is_object()) {
        if (j.contains("direct")) return direct_elem(elem_from_json(j.at("direct")));
        if (j.contains("complement")) return complement_elem(elem_from_json(j.at("complement")));
        if (j.contains("b") && j.contains("m")) {
            const int b = j.at("b").get<int>();
            const long long m = j.at("m").get<long long>();
            if ((b != 0 && b != 1) || m < 0)
                throw Error("BadInput", "lex pair needs b in {0,1} and m >= 0");
            return LexPair{static_cast<std::uint8_t>(b), m};
        }
        std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
        for (const auto& [key, value] : j.items())
            entries.emplace_back(static_cast<std::uint32_t>(std::stoul(key)),
                                 value.get<std::uint32_t>());
        return make_map(std::move(entries));
    }
    throw Error("BadInput", "unrecognized element encoding");
}

int element_from_label(const FiniteEmv& M, const std::string& key) {
    if (const auto i = M.index_of_label(key)) return *i;
    // numeric fallback: plain indices are always accepted
    if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
        const long long v = std::stoll(key);
        if (v < M.size()) return static_cast<int>(v);
    }
    throw Error("BadInput", "unknown element '" + key + "'");
}

std::map<int, Rat> values_from_json(const FiniteEmv& M, const json& j) {
    if (!j.is_object() || !j.contains("values") || !j["values"].is_object())
        throw Error("BadInput", "expected {\"values\": {...}}");
    std::map<int, Rat> out;
    for (const auto& [key, value] : j["values"].items())
        out[element_from_label(M, key)] = rat_from_json(value);
    return out;
}

StateVec state_from_json(const FiniteEmv& M, const json& j) {
    const auto vals = values_from_json(M, j);
    StateVec s;
    s.values.assign(M.size(), Rat(0));
    for (const auto& [x, v] : vals) s.values[x] = v;
    for (int x = 0; x < M.size(); ++x)
        if (!vals.count(x))
            throw Error("DimensionMismatch", "state must cover every carrier element",
                        {{"missing", M.label(x)}});
    return s;
}

json state_to_json(const FiniteEmv& M, const StateVec& s) {
    json values = json::object();
    for (int x = 0; x < M.size(); ++x) values[M.label(x)] = rat_to_json(s.values[x]);
    return json{{"values", values}};
}

SignedMeasureVec measure_from_json(const FiniteEmv& M, const json& j) {
    const auto vals = values_from_json(M, j);
    SignedMeasureVec m;
    m.values.assign(M.size(), Rat(0));
    for (const auto& [x, v] : vals) m.values[x] = v;
    return m;
}

json measure_to_json(const FiniteEmv& M, const SignedMeasureVec& m) {
    json values = json::object();
    for (int x = 0; x < M.size(); ++x) values[M.label(x)] = rat_to_json(m.values[x]);
    return json{{"values", values}};
}

SymbolicState symbolic_state_from_json(const json& j) {
    if (!j.is_object()) throw Error("BadInput", "expected a symbolic state object");
    std::vector<std::pair<std::uint32_t, Rat>> base;
    if (j.contains("base")) {
        for (const auto& entry : j.at("base")) {
            if (!entry.is_array() || entry.size() != 2)
                throw Error("BadInput", "base entries are [index, weight] pairs");
            base.emplace_back(entry[0].get<std::uint32_t>(), rat_from_json(entry[1]));
        }
    }
    std::optional<GeometricTail> tail;
    if (j.contains("tail") && !j["tail"].is_null()) {
        const auto& t = j["tail"];
        tail = GeometricTail{t.at("n0").get<std::uint32_t>(), rat_from_json(t.at("c")),
                             rat_from_json(t.at("q"))};
    }
    Rat inf(0);
    if (j.contains("inf")) inf = rat_from_json(j["inf"]);
    return make_symbolic_state(std::move(base), tail, std::move(inf));
}

json symbolic_state_to_json(const SymbolicState& s) {
    json base = json::array();
    for (const auto& [n, w] : s.base)
        base.push_back(json::array({static_cast<long long>(n), rat_to_json(w)}));
    json out{{"base", base}};
    if (s.tail)
        out["tail"] = json{{"n0", static_cast<long long>(s.tail->start)},
                           {"c", rat_to_json(s.tail->scale)},
                           {"q", rat_to_json(s.tail->ratio)}};
    if (s.inf_weight != 0) out["inf"] = rat_to_json(s.inf_weight);
    return out;
}

json ideal_to_json(const FiniteEmv& M, const Ideal& I) {
    json a = json::array();
    for (int x : I.members) a.push_back(M.label(x));
    return a;
}

std::vector<int> elements_from_json(const FiniteEmv& M, const json& j) {
    if (!j.is_array()) throw Error("BadInput", "expected an array of elements");
    std::vector<int> out;
    for (const auto& v : j) {
        if (v.is_number_integer()) {
            const long long x = v.get<long long>();
            if (x < 0 || x >= M.size()) throw Error("BadInput", "element index out of range");
            out.push_back(static_cast<int>(x));
        } else if (v.is_string()) {
            out.push_back(element_from_label(M, v.get<std::string>()));
        } else {
            throw Error("BadInput", "elements are labels or indices");
        }
    }
    return out;
}

json axiom_report_to_json(const AxiomReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        json witness = json::array();
        for (const auto& e : v.witness) witness.push_back(elem_str(e));
        violations.push_back(json{{"axiom", v.axiom_id}, {"witness", witness}, {"detail", v.detail}});
    }
    json counts = json::object();
    for (const auto& [id, n] : r.checked_counts) counts[id] = n;
    return json{{"violations", violations},
                {"checked_counts", counts},
                {"budget", r.budget}};
}

json state_check_to_json(const FiniteEmv& M, const StateCheck& c) {
    json kernel = json::array();
    for (int x : c.kernel) kernel.push_back(M.label(x));
    json out{{"is_additive", c.is_additive},
             {"in_range", c.in_range},
             {"attains_one", c.attains_one},
             {"is_state", c.is_state},
             {"is_morphism", c.is_morphism},
             {"is_extremal", c.is_extremal},
             {"is_vertex", c.is_vertex},
             {"kernel", kernel},
             {"kernel_is_maximal", c.kernel_is_maximal}};
    if (c.additivity_witness)
        out["additivity_witness"] =
            json::array({M.label((*c.additivity_witness)[0]), M.label((*c.additivity_witness)[1])});
    if (c.morphism_witness)
        out["morphism_witness"] =
            json::array({M.label((*c.morphism_witness)[0]), M.label((*c.morphism_witness)[1])});
    return out;
}

json discrete_measure_to_json(const DiscreteMeasure& m) {
    json weights = json::object();
    for (const auto& [id, w] : m.weights) weights[id] = rat_to_json(w);
    json out{{"weights", weights}};
    if (m.inf_atom != 0) out["inf"] = rat_to_json(m.inf_atom);
    return out;
}

json quotient_to_json(const Quotient& q) {
    json classes = json::array();
    for (const auto& cls : q.classes) {
        json c = json::array();
        for (int x : cls) c.push_back(x);
        classes.push_back(c);
    }
    json oplus = json::array();
    for (int a = 0; a < q.algebra.size(); ++a) {
        json row = json::array();
        for (int b = 0; b < q.algebra.size(); ++b) row.push_back(q.algebra.oplus(a, b));
        oplus.push_back(row);
    }
    return json{{"classes", classes}, {"oplus", oplus}};
}

}  // namespace emvkit::io
