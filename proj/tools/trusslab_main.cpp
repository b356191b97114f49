#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "trusslab/io.hpp"

// Thin JSON front end over the library. Every subcommand prints a report with
// a top-level "ok"; exit codes: 0 all checks passed, 1 a check failed (the
// report carries the witness), 2 bad input.

namespace {

using trusslab::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

// Prints the report to stdout; when an --out path was given, writes the
// subcommand's artifact (solution table, ring tables, truss, ...) there.
int emit(const std::string& command, Json report, bool ok, const std::string& out_path = "",
         const Json& artifact = Json()) {
    report["command"] = command;
    report["ok"] = ok;
    if (!out_path.empty()) {
        const Json& payload = artifact.is_null() ? report : artifact;
        auto w = trusslab::write_text_file(out_path, trusslab::dump_json(payload));
        if (!w.ok()) {
            std::cerr << w.error().message << "\n";
            return kExitBadInput;
        }
    }
    std::cout << trusslab::dump_json(report);
    return ok ? kExitOk : kExitCheckFailed;
}

int emit_input_error(const std::string& command, const trusslab::Failure& f) {
    Json report{{"command", command}, {"ok", false}, {"error", trusslab::failure_to_json(f)}};
    std::cout << trusslab::dump_json(report);
    return kExitBadInput;
}

std::optional<std::vector<trusslab::Elem>> parse_map_option(const std::string& s) {
    std::vector<trusslab::Elem> map;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) return std::nullopt;
            try {
                map.push_back(std::stoi(cur));
            } catch (...) {
                return std::nullopt;
            }
            cur.clear();
        } else if (c == ' ') {
            continue;
        } else {
            cur += c;
        }
    }
    return map;
}

std::string fixtures_dir() {
    if (const char* env = std::getenv("TRUSSLAB_FIXTURES")) return env;
#ifdef TRUSSLAB_DEFAULT_FIXTURES
    return TRUSSLAB_DEFAULT_FIXTURES;
#else
    return "";
#endif
}

}  // namespace

int main(int argc, char** argv) {
    using namespace trusslab;
    CLI::App app{"trusslab: finite skew trusses, braces, Yang-Baxter maps, rings and Hopf linearizations"};
    app.require_subcommand(1);

    std::string input, out_path, target_path;
    int e_opt = -1;
    int jobs = 1;

    auto* verify = app.add_subcommand("verify", "Verify a truss file and run the derived-structure checks");
    verify->add_option("--input", input, "truss JSON file")->required();

    std::string group_name = "z2", mode = "structured", classify_opt = "both";
    int bound = 8;
    bool timings = false;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate all trusses over a built-in group");
    enumerate->add_option("--group", group_name, "group name: z<n>, klein4, s3, d<n>, products like z2xz2")
        ->required();
    enumerate->add_option("--mode", mode, "naive (n<=3 oracle) or structured")
        ->check(CLI::IsMember({"naive", "structured"}));
    enumerate->add_option("--classify", classify_opt, "none, group, heap, or both")
        ->check(CLI::IsMember({"none", "group", "heap", "both"}));
    enumerate->add_option("--out", out_path, "write the report to this file as well");
    enumerate->add_option("--jobs", jobs, "worker threads");
    enumerate->add_option("--bound", bound, "carrier-size cap for the structured search");
    enumerate->add_flag("--timings", timings, "include elapsed time in the report (breaks byte-level determinism)");

    auto* family = app.add_subcommand("family", "Translate a truss to a new base point");
    family->add_option("--input", input, "truss JSON file")->required();
    family->add_option("--e", e_opt, "base point (element index)")->required();
    family->add_option("--out", out_path, "write the resulting truss here");

    auto* pith = app.add_subcommand("pith", "Compute the pith and chambers of a truss morphism");
    pith->add_option("--input", input, "morphism JSON file (domain/codomain paths + map)")->required();

    auto* ybe = app.add_subcommand("ybe", "Yang-Baxter solution from a truss with group circle operation");
    ybe->add_option("--input", input, "truss JSON file")->required();
    ybe->add_option("--e", e_opt, "base point; defaults to the group identity");
    ybe->add_option("--out", out_path, "write the solution table here");
    ybe->add_option("--jobs", jobs, "worker threads for the braid scan");

    auto* ring = app.add_subcommand("ring", "Ring of a two-sided truss (optionally shifted by a central e)");
    ring->add_option("--input", input, "truss JSON file")->required();
    ring->add_option("--e", e_opt, "central shift element; omit for the plain ring");
    ring->add_option("--out", out_path, "write the ring tables here");

    std::string check_sel = "all";
    int trials = 10;
    std::uint64_t seed = 1;
    auto* hopf = app.add_subcommand("hopf", "Linearize over Q and verify the Hopf-truss laws exactly");
    hopf->add_option("--input", input, "truss JSON file")->required();
    hopf->add_option("--check", check_sel, "all, axioms, forms, or actions")
        ->check(CLI::IsMember({"all", "axioms", "forms", "actions"}));
    hopf->add_option("--trials", trials, "random rational vector trials");
    hopf->add_option("--seed", seed, "seed for the random trials (echoed in the report)");
    hopf->add_option("--out", out_path, "write the linearized structure here");

    std::string map_str, kind = "group";
    auto* port = app.add_subcommand("port", "Port a truss through an isomorphism");
    port->add_option("--input", input, "truss JSON file")->required();
    port->add_option("--map", map_str, "comma-separated images, e.g. 0,2,1")->required();
    port->add_option("--kind", kind, "group (ports the circle op) or semigroup (ports the group op)")
        ->check(CLI::IsMember({"group", "semigroup"}));
    port->add_option("--target", target_path, "magma JSON file for the target; defaults to the truss's own table");
    port->add_option("--out", out_path, "write the ported truss here");

    std::string dom_path, cod_path;
    bool enumerate_maps = false;
    auto* morphism = app.add_subcommand("morphism", "Verify a truss morphism or enumerate all of them");
    morphism->add_option("--domain", dom_path, "domain truss JSON file")->required();
    morphism->add_option("--codomain", cod_path, "codomain truss JSON file")->required();
    morphism->add_option("--map", map_str, "comma-separated images");
    morphism->add_flag("--enumerate", enumerate_maps, "enumerate every morphism instead");
    morphism->add_option("--bound", bound, "domain-size cap for enumeration")->default_val(6);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            auto t = load_truss_file(input);
            if (!t.ok()) return emit_input_error("verify", t.error());
            const SkewTruss& truss = t.value();
            Json rep;
            rep["truss"] = truss_to_json(truss);
            rep["equivalent_forms"] = forms_report_to_json(check_equivalent_forms(truss));
            rep["cocycle_equivariance"] = check_to_json(check_cocycle_equivariance(truss));
            rep["inverse_identities"] = check_to_json(check_inverse_identities(truss));
            rep["cocycle_conditions"] = check_to_json(check_cocycle_conditions(truss));
            rep["action_exchange"] = check_to_json(check_action_exchange(truss));
            rep["monoid_cocycle_identity"] = check_to_json(check_monoid_cocycle_identity(truss));
            rep["sigma_powers"] = sigma_power_report_to_json(sigma_power_report(truss));
            rep["two_sided"] = two_sided_report_to_json(verify_two_sided(truss));
            rep["sigma_invertibility"] = sigma_invertibility_to_json(check_sigma_invertible(truss));
            bool ok = rep["equivalent_forms"]["ok"].get<bool>() && rep["cocycle_equivariance"]["ok"].get<bool>() &&
                      rep["inverse_identities"]["ok"].get<bool>() && rep["cocycle_conditions"]["ok"].get<bool>() &&
                      rep["action_exchange"]["ok"].get<bool>() &&
                      rep["monoid_cocycle_identity"]["ok"].get<bool>() && rep["sigma_powers"]["ok"].get<bool>();
            return emit("verify", std::move(rep), ok);
        }

        if (*enumerate) {
            auto g = group_by_name(group_name);
            if (!g.ok()) return emit_input_error("enumerate", g.error());
            auto res = mode == "naive" ? enumerate_naive(g.value(), jobs)
                                       : enumerate_structured(g.value(), jobs, bound);
            if (!res.ok()) return emit_input_error("enumerate", res.error());
            EnumerationResult r = std::move(res).value();
            if (classify_opt == "group" || classify_opt == "both")
                r = classify(std::move(r), IsoNotion::GroupSemigroup);
            if (classify_opt == "heap" || classify_opt == "both")
                r = classify(std::move(r), IsoNotion::HeapSemigroup);
            Json rep;
            rep["result"] = enumeration_to_json(r, timings);
            rep["group_name"] = group_name;
            bool ok = !r.duplicates_detected;

            // Pinned-fixture comparison, when a fixtures directory is known.
            const std::string dir = fixtures_dir();
            rep["fixtures"] = nullptr;
            if (!dir.empty()) {
                auto fx = read_json_file(dir + "/enumeration_counts.json");
                if (fx.ok() && fx.value().contains("groups") && fx.value()["groups"].contains(group_name)) {
                    const Json& entry = fx.value()["groups"][group_name];
                    Json cmp{{"expected", entry}};
                    bool match = true;
                    const std::string total_key = mode + "_total";
                    if (entry.contains(total_key)) match = entry[total_key].get<long>() == r.total_found;
                    if (r.group_semigroup && entry.contains("classes_group_semigroup"))
                        match = match && entry["classes_group_semigroup"].get<int>() ==
                                             r.group_semigroup->class_count;
                    if (r.heap_semigroup && entry.contains("classes_heap_semigroup"))
                        match = match &&
                                entry["classes_heap_semigroup"].get<int>() == r.heap_semigroup->class_count;
                    cmp["match"] = match;
                    rep["fixtures"] = std::move(cmp);
                    ok = ok && match;
                }
            }
            return emit("enumerate", std::move(rep), ok, out_path);
        }

        if (*family) {
            auto t = load_truss_file(input);
            if (!t.ok()) return emit_input_error("family", t.error());
            if (e_opt < 0 || e_opt >= t.value().size())
                return emit_input_error("family",
                                        Failure{"entry_out_of_range", {e_opt}, "base point out of range"});
            SkewTruss shifted = translate_family(t.value(), e_opt);
            Json artifact = truss_to_json(shifted);
            Json rep{{"e", e_opt}, {"truss", artifact}};
            return emit("family", std::move(rep), true, out_path, artifact);
        }

        if (*pith) {
            auto mf = load_morphism_file(input);
            if (!mf.ok()) return emit_input_error("pith", mf.error());
            auto m = build_morphism(std::move(mf.value().domain), std::move(mf.value().codomain),
                                    std::move(mf.value().map));
            if (!m.ok()) return emit_input_error("pith", m.error());
            Pith p = compute_pith(m.value());
            GradedPith gp = graded_pith(m.value());
            Json rep{{"pith", pith_to_json(p)}, {"graded", Json{{"degree_additive", gp.degree_additive}}}};
            return emit("pith", std::move(rep), p.all_ok() && gp.degree_additive);
        }

        if (*ybe) {
            auto t = load_truss_file(input);
            if (!t.ok()) return emit_input_error("ybe", t.error());
            Elem e = e_opt < 0 ? t.value().one() : e_opt;
            if (e >= t.value().size())
                return emit_input_error("ybe", Failure{"entry_out_of_range", {e}, "base point out of range"});
            auto r = solution_from_truss(t.value(), e, jobs);
            if (!r.ok()) return emit_input_error("ybe", r.error());
            YbeCheck check = verify_ybe(r.value(), jobs);
            Json artifact = ybe_to_json(r.value());
            Json rep{{"e", e}, {"solution", artifact}, {"check", ybe_check_to_json(check)}};
            return emit("ybe", std::move(rep), check.ok, out_path, artifact);
        }

        if (*ring) {
            auto t = load_truss_file(input);
            if (!t.ok()) return emit_input_error("ring", t.error());
            auto r = e_opt < 0 ? ring_from_truss(t.value()) : shifted_ring(t.value(), e_opt);
            if (!r.ok()) return emit_input_error("ring", r.error());
            Check ax = check_ring_axioms(r.value());
            Json artifact = ring_to_json(r.value());
            Json rep{{"ring", artifact}, {"axioms", check_to_json(ax)}};
            if (e_opt >= 0) rep["e"] = e_opt;
            return emit("ring", std::move(rep), ax.ok, out_path, artifact);
        }

        if (*hopf) {
            auto t = load_truss_file(input);
            if (!t.ok()) return emit_input_error("hopf", t.error());
            LinearizedTruss h = linearize(t.value());
            Json artifact = hopf_to_json(h);
            Json rep{{"linearized", artifact}, {"seed", seed}};
            bool ok = true;
            if (check_sel == "all" || check_sel == "axioms") {
                auto a = verify_hopf_truss_axioms(h, trials, seed);
                rep["axioms"] = hopf_axioms_report_to_json(a);
                ok = ok && a.all();
            }
            if (check_sel == "all" || check_sel == "forms") {
                auto f = check_equivalent_hopf_forms(h);
                rep["forms"] = hopf_forms_report_to_json(f);
                ok = ok && f.all();
            }
            if (check_sel == "all" || check_sel == "actions") {
                auto ac = hopf_actions_and_cocycle(h);
                rep["actions"] = hopf_actions_report_to_json(ac);
                ok = ok && ac.all();
            }
            return emit("hopf", std::move(rep), ok, out_path, artifact);
        }

        if (*port) {
            auto t = load_truss_file(input);
            if (!t.ok()) return emit_input_error("port", t.error());
            auto map = parse_map_option(map_str);
            if (!map) return emit_input_error("port", Failure{"parse_error", {}, "cannot parse --map"});
            Outcome<SkewTruss> ported = [&]() {
                if (kind == "group") {
                    if (target_path.empty()) return port_structure(t.value(), t.value().group, *map);
                    auto m = read_json_file(target_path);
                    if (!m.ok()) return Outcome<SkewTruss>::failure(m.error());
                    auto tbl = magma_from_json(m.value());
                    if (!tbl.ok()) return Outcome<SkewTruss>::failure(tbl.error());
                    auto grp = validate_group(tbl.value());
                    if (!grp.ok()) return Outcome<SkewTruss>::failure(grp.error());
                    return port_structure(t.value(), grp.value(), *map);
                }
                if (target_path.empty()) return port_structure(t.value(), t.value().circ, *map);
                auto m = read_json_file(target_path);
                if (!m.ok()) return Outcome<SkewTruss>::failure(m.error());
                auto tbl = magma_from_json(m.value());
                if (!tbl.ok()) return Outcome<SkewTruss>::failure(tbl.error());
                return port_structure(t.value(), tbl.value(), *map);
            }();
            if (!ported.ok()) return emit_input_error("port", ported.error());
            Json artifact = truss_to_json(ported.value());
            Json rep{{"kind", kind}, {"truss", artifact}};
            return emit("port", std::move(rep), true, out_path, artifact);
        }

        if (*morphism) {
            auto dom = load_truss_file(dom_path);
            if (!dom.ok()) return emit_input_error("morphism", dom.error());
            auto cod = load_truss_file(cod_path);
            if (!cod.ok()) return emit_input_error("morphism", cod.error());
            if (enumerate_maps) {
                auto ms = enumerate_morphisms(dom.value(), cod.value(), bound);
                if (!ms.ok()) return emit_input_error("morphism", ms.error());
                Json maps = Json::array();
                for (const auto& m : ms.value()) maps.push_back(m.map);
                Json rep{{"count", ms.value().size()}, {"maps", std::move(maps)}};
                return emit("morphism", std::move(rep), true);
            }
            auto map = parse_map_option(map_str);
            if (!map) return emit_input_error("morphism", Failure{"parse_error", {}, "cannot parse --map"});
            auto m = build_morphism(std::move(dom).value(), std::move(cod).value(), *map);
            if (!m.ok()) {
                Json rep{{"valid", false}, {"error", failure_to_json(m.error())}};
                return emit("morphism", std::move(rep), false);
            }
            Json rep{{"valid", true},
                     {"map", m.value().map},
                     {"heap_morphism", is_heap_morphism(m.value().domain, m.value().codomain, m.value().map)}};
            return emit("morphism", std::move(rep), true);
        }
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
