// emvkit command-line front end: reads algebra specs and state/measure files
// as JSON, runs the requested analysis, and prints a deterministic report.
// Exit codes: 0 success, 1 usage error, 2 violated input (machine-readable
// {"error": ...} payload on stdout).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "emvkit/axioms.hpp"
#include "emvkit/error.hpp"
#include "emvkit/gea.hpp"
#include "emvkit/json_io.hpp"
#include "emvkit/measures.hpp"
#include "emvkit/prestates.hpp"
#include "emvkit/states.hpp"
#include "emvkit/structure.hpp"

namespace {

constexpr const char* kVersion = "emvkit 0.1.0";

using emvkit::Carrier;
using emvkit::Elem;
using emvkit::FiniteEmv;
using emvkit::SymbolicEmv;
using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw CLI::ValidationError("file '" + path + "' is not valid JSON: " + std::string(e.what()));
    }
    return j;
}

Carrier load_carrier(const std::string& path) {
    return emvkit::io::build_capped(emvkit::io::spec_from_json(load_json(path)));
}

json algebra_summary(const Carrier& c) {
    json out;
    if (c.is_finite()) {
        const FiniteEmv& M = c.finite();
        out["kind"] = "finite";
        out["size"] = M.size();
        out["idempotents"] = M.idempotents().size();
        const auto top = c.top();
        out["top"] = top ? json(M.label(static_cast<int>(std::get<emvkit::FinIdx>(*top))))
                         : json(nullptr);
    } else {
        out["kind"] = c.symbolic().name();
        out["size"] = nullptr;
        out["idempotents"] = nullptr;
        const auto top = c.top();
        out["top"] = top ? emvkit::io::elem_to_json(*top) : json(nullptr);
    }
    return out;
}

void emit(const std::string& command, const Carrier& c, json payload, std::uint64_t seed) {
    json report{{"command", command},
                {"algebra", algebra_summary(c)},
                {"payload", std::move(payload)},
                {"seed", seed},
                {"version", kVersion}};
    std::cout << report.dump(2) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"states on EMV-algebras: exact algebra, states and measures"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized checks (default 0)");

    std::string spec_path;
    std::size_t budget = 8;
    std::size_t bound = 20;
    std::string state_path, sub_path, m1_path, m2_path, op, prestate_path;
    bool morphism_mode = false;

    auto* verify = app.add_subcommand("verify", "run the axiom checker on an algebra spec");
    verify->add_option("spec", spec_path, "algebra spec JSON")->required();
    verify->add_option("--budget", budget, "sample size for symbolic carriers");

    auto* morphisms = app.add_subcommand("morphisms", "enumerate all state-morphisms");
    morphisms->add_option("spec", spec_path)->required();

    auto* states = app.add_subcommand("states", "diagnose a value vector as a state");
    states->add_option("spec", spec_path)->required();
    states->add_option("--check", state_path, "state JSON to check")->required();

    auto* decompose = app.add_subcommand("decompose", "Krein-Mil'man weights of a state");
    decompose->add_option("spec", spec_path)->required();
    decompose->add_option("--state", state_path)->required();

    auto* extend = app.add_subcommand("extend", "extend a state from a subalgebra");
    extend->add_option("spec", spec_path)->required();
    extend->add_option("--sub", sub_path, "subalgebra elements JSON array")->required();
    extend->add_option("--state", state_path, "state values on the subalgebra")->required();
    extend->add_flag("--morphism", morphism_mode, "extend as a state-morphism");

    auto* represent = app.add_subcommand("represent", "build the representing MV-algebra");
    represent->add_option("spec", spec_path)->required();
    represent->add_option("--budget", budget, "sample size for the checks");

    auto* jordan = app.add_subcommand("jordan", "lattice operations on signed measures");
    jordan->add_option("spec", spec_path)->required();
    jordan->add_option("--m1", m1_path)->required();
    jordan->add_option("--m2", m2_path, "second measure (unused for pos)");
    jordan->add_option("--op", op, "join | meet | pos")->required();

    auto* radical = app.add_subcommand("radical", "radical and infinitesimal elements");
    radical->add_option("spec", spec_path)->required();
    radical->add_option("--bound", bound, "sample bound for symbolic carriers");

    auto* classify = app.add_subcommand("classify", "classify a pre-state");
    classify->add_option("spec", spec_path)->required();
    classify->add_option("--prestate", prestate_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // pin every usage failure to exit 1
    }

    if (verify->parsed()) {
        const Carrier c = load_carrier(spec_path);
        emit("verify", c, emvkit::io::axiom_report_to_json(emvkit::verify_axioms(c, budget)), seed);
        return 0;
    }
    if (morphisms->parsed()) {
        const Carrier c = load_carrier(spec_path);
        const auto list = emvkit::state_morphisms(c.finite());
        json arr = json::array();
        for (const auto& m : list) arr.push_back(emvkit::io::state_to_json(c.finite(), m));
        emit("morphisms", c, json{{"count", list.size()}, {"morphisms", arr}}, seed);
        return 0;
    }
    if (states->parsed()) {
        const Carrier c = load_carrier(spec_path);
        const auto s = emvkit::io::state_from_json(c.finite(), load_json(state_path));
        emit("states", c,
             emvkit::io::state_check_to_json(c.finite(), emvkit::check_state(c.finite(), s)), seed);
        return 0;
    }
    if (decompose->parsed()) {
        const Carrier c = load_carrier(spec_path);
        const auto s = emvkit::io::state_from_json(c.finite(), load_json(state_path));
        const auto weights = emvkit::km_decompose(c.finite(), s);
        json w = json::object();
        for (std::size_t i = 0; i < weights.size(); ++i)
            w[std::to_string(i)] = emvkit::io::rat_to_json(weights[i]);
        emit("decompose", c, json{{"weights", w}}, seed);
        return 0;
    }
    if (extend->parsed()) {
        const Carrier c = load_carrier(spec_path);
        const auto sub = emvkit::io::elements_from_json(c.finite(), load_json(sub_path));
        const auto pins = emvkit::io::values_from_json(c.finite(), load_json(state_path));
        const auto ext = emvkit::horn_tarski_extend(c.finite(), sub, pins, morphism_mode);
        emit("extend", c,
             json{{"extension", emvkit::io::state_to_json(c.finite(), ext)["values"]},
                  {"morphism_mode", morphism_mode}},
             seed);
        return 0;
    }
    if (represent->parsed()) {
        const Carrier c = load_carrier(spec_path);
        const SymbolicEmv N = emvkit::representing_mv(c.symbolic());
        const Carrier cn(N);
        json payload;
        payload["algebra"] = N.name();
        payload["axioms"] = emvkit::io::axiom_report_to_json(emvkit::verify_axioms(cn, budget));
        // the embedded image must behave like an ideal of N at sample scale:
        // closed under + and downward closed
        bool ideal_closed = true;
        const auto sample = cn.enumerate(budget);
        for (const Elem& x : sample)
            for (const Elem& y : sample) {
                const bool xd = !std::get<emvkit::ReprElem>(x).complement;
                const bool yd = !std::get<emvkit::ReprElem>(y).complement;
                if (xd && yd && std::get<emvkit::ReprElem>(cn.oplus(x, y)).complement)
                    ideal_closed = false;
                if (xd && cn.leq(y, x) && !yd) ideal_closed = false;
            }
        payload["direct_image_ideal_closed"] = ideal_closed;
        payload["top"] = emvkit::io::elem_to_json(*cn.top());
        emit("represent", c, payload, seed);
        return 0;
    }
    if (jordan->parsed()) {
        const Carrier c = load_carrier(spec_path);
        const auto m1 = emvkit::io::measure_from_json(c.finite(), load_json(m1_path));
        json payload;
        if (op == "pos") {
            const auto [pos, neg] = emvkit::jordan_decomposition(c.finite(), m1);
            payload["pos"] = emvkit::io::measure_to_json(c.finite(), pos)["values"];
            payload["neg"] = emvkit::io::measure_to_json(c.finite(), neg)["values"];
        } else if (op == "join" || op == "meet") {
            if (m2_path.empty()) throw CLI::ValidationError("--m2 is required for join/meet");
            const auto m2 = emvkit::io::measure_from_json(c.finite(), load_json(m2_path));
            const auto result = op == "join" ? emvkit::jordan_join(c.finite(), m1, m2)
                                             : emvkit::jordan_meet(c.finite(), m1, m2);
            payload["result"] = emvkit::io::measure_to_json(c.finite(), result)["values"];
        } else {
            throw CLI::ValidationError("--op must be join, meet or pos");
        }
        payload["op"] = op;
        emit("jordan", c, payload, seed);
        return 0;
    }
    if (radical->parsed()) {
        const Carrier c = load_carrier(spec_path);
        json payload;
        if (c.is_finite()) {
            const auto r = emvkit::radical_and_infinitesimals(c.finite());
            payload["radical"] = emvkit::io::ideal_to_json(c.finite(), r.radical);
            payload["infinitesimals"] = emvkit::io::ideal_to_json(c.finite(), r.infinitesimals);
        } else {
            const auto r = emvkit::radical_and_infinitesimals(c.symbolic(), bound);
            payload["rule"] = r.rule;
            json sample = json::array();
            for (const Elem& e : r.radical_sample) sample.push_back(emvkit::io::elem_to_json(e));
            payload["radical_sample"] = sample;
            payload["bound"] = bound;
        }
        emit("radical", c, payload, seed);
        return 0;
    }
    if (classify->parsed()) {
        const Carrier c = load_carrier(spec_path);
        const json f = load_json(prestate_path);
        json payload;
        if (c.is_finite()) {
            const auto s = emvkit::io::state_from_json(c.finite(), f);
            payload["class"] = emvkit::to_string(emvkit::classify_prestate(c.finite(), s));
        } else {
            const auto s = emvkit::io::symbolic_state_from_json(f);
            payload["class"] = emvkit::to_string(emvkit::classify_prestate(c.symbolic(), s));
            payload["mass"] = emvkit::io::rat_to_json(s.total_mass());
            payload["finite_support"] = s.finite_support();
        }
        emit("classify", c, payload, seed);
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const emvkit::Error& e) {
        json err{{"error", {{"code", e.code()}, {"message", e.what()}, {"witness", e.witness()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
