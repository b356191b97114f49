#include "trusslab/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace trusslab {

namespace {

Json table_rows(const MagmaTable& m) {
    Json rows = Json::array();
    for (Elem a = 0; a < m.size(); ++a) {
        Json row = Json::array();
        for (Elem b = 0; b < m.size(); ++b) row.push_back(m.at(a, b));
        rows.push_back(std::move(row));
    }
    return rows;
}

Outcome<MagmaTable> rows_to_table(const Json& rows, const char* what) {
    using Out = Outcome<MagmaTable>;
    if (!rows.is_array() || rows.empty())
        return Out::failure("parse_error", {}, std::string(what) + " must be a non-empty array of rows");
    const int n = static_cast<int>(rows.size());
    std::vector<Elem> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            return Out::failure("parse_error", {}, std::string(what) + " rows must all have length " +
                                                       std::to_string(n));
        for (const auto& cell : row) {
            if (!cell.is_number_integer())
                return Out::failure("parse_error", {}, std::string(what) + " entries must be integers");
            entries.push_back(cell.get<Elem>());
        }
    }
    return MagmaTable::checked(n, std::move(entries));
}

}  // namespace

Json magma_to_json(const MagmaTable& m) { return Json{{"size", m.size()}, {"table", table_rows(m)}}; }

Outcome<MagmaTable> magma_from_json(const Json& j) {
    using Out = Outcome<MagmaTable>;
    if (!j.is_object() || !j.contains("table"))
        return Out::failure("parse_error", {}, "expected an object with a \"table\" field");
    auto m = rows_to_table(j["table"], "table");
    if (!m.ok()) return m;
    if (j.contains("size") && (!j["size"].is_number_integer() || j["size"].get<int>() != m.value().size()))
        return Out::failure("parse_error", {}, "\"size\" does not match the table dimensions");
    return m;
}

Json group_to_json(const GroupTable& g) {
    return Json{{"size", g.size()},
                {"table", table_rows(g.op)},
                {"identity", g.identity},
                {"inverse", g.inverse}};
}

Json truss_to_json(const SkewTruss& t) {
    return Json{{"size", t.size()},
                {"diamond", table_rows(t.group.op)},
                {"circ", table_rows(t.circ)},
                {"side", to_string(t.side)},
                {"sigma", t.sigma}};
}

Outcome<SkewTruss> truss_from_json(const Json& j) {
    using Out = Outcome<SkewTruss>;
    if (!j.is_object() || !j.contains("diamond") || !j.contains("circ"))
        return Out::failure("parse_error", {}, "expected an object with \"diamond\" and \"circ\" tables");
    auto dia = rows_to_table(j["diamond"], "diamond");
    if (!dia.ok()) return Out::failure(dia.error());
    auto circ = rows_to_table(j["circ"], "circ");
    if (!circ.ok()) return Out::failure(circ.error());
    if (j.contains("size") && (!j["size"].is_number_integer() || j["size"].get<int>() != dia.value().size()))
        return Out::failure("parse_error", {}, "\"size\" does not match the table dimensions");

    Side side = Side::Left;
    if (j.contains("side")) {
        if (!j["side"].is_string()) return Out::failure("parse_error", {}, "\"side\" must be a string");
        auto s = side_from_string(j["side"].get<std::string>());
        if (!s.ok()) return Out::failure(s.error());
        side = s.value();
    }

    auto group = validate_group(dia.value());
    if (!group.ok())
        return Out::failure(group.error().kind, group.error().witness,
                            "diamond table is not a group: " + group.error().message);
    auto truss = build_truss(std::move(group).value(), std::move(circ).value(), side);
    if (!truss.ok()) return truss;

    // A user-supplied cocycle is checked against the derived one.
    if (j.contains("sigma")) {
        if (!j["sigma"].is_array())
            return Out::failure("parse_error", {}, "\"sigma\" must be an array of indices");
        std::vector<Elem> given;
        for (const auto& v : j["sigma"]) {
            if (!v.is_number_integer()) return Out::failure("parse_error", {}, "\"sigma\" entries must be integers");
            given.push_back(v.get<Elem>());
        }
        if (given != truss.value().sigma)
            return Out::failure("sigma_mismatch", {},
                                "supplied sigma differs from the derived cocycle (sigma is determined by "
                                "the operations and cannot be chosen)");
    }
    return truss;
}

Outcome<SkewTruss> load_truss_file(const std::string& path) {
    auto j = read_json_file(path);
    if (!j.ok()) return Outcome<SkewTruss>::failure(j.error());
    return truss_from_json(j.value());
}

Outcome<MorphismFile> load_morphism_file(const std::string& path) {
    using Out = Outcome<MorphismFile>;
    auto j = read_json_file(path);
    if (!j.ok()) return Out::failure(j.error());
    const Json& doc = j.value();
    if (!doc.is_object() || !doc.contains("domain") || !doc.contains("codomain") || !doc.contains("map"))
        return Out::failure("parse_error", {}, "morphism file needs \"domain\", \"codomain\" and \"map\"");
    if (!doc["domain"].is_string() || !doc["codomain"].is_string() || !doc["map"].is_array())
        return Out::failure("parse_error", {}, "\"domain\"/\"codomain\" must be paths and \"map\" an array");

    const auto base = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        return fp.is_absolute() ? fp.string() : (base / fp).string();
    };
    auto dom = load_truss_file(resolve(doc["domain"].get<std::string>()));
    if (!dom.ok()) return Out::failure(dom.error());
    auto cod = load_truss_file(resolve(doc["codomain"].get<std::string>()));
    if (!cod.ok()) return Out::failure(cod.error());
    std::vector<Elem> map;
    for (const auto& v : doc["map"]) {
        if (!v.is_number_integer()) return Out::failure("parse_error", {}, "\"map\" entries must be integers");
        map.push_back(v.get<Elem>());
    }
    return Out::success(MorphismFile{std::move(dom).value(), std::move(cod).value(), std::move(map)});
}

Json ybe_to_json(const YBMap& r) {
    Json pairs = Json::array();
    for (const auto& [c, d] : r.r) pairs.push_back(Json::array({c, d}));
    return Json{{"size", r.n}, {"r", std::move(pairs)}};
}

Outcome<YBMap> ybe_from_json(const Json& j) {
    using Out = Outcome<YBMap>;
    if (!j.is_object() || !j.contains("size") || !j.contains("r") || !j["size"].is_number_integer() ||
        !j["r"].is_array())
        return Out::failure("parse_error", {}, "expected {\"size\": n, \"r\": [[c,d], ...]}");
    YBMap m;
    m.n = j["size"].get<int>();
    if (m.n <= 0 || j["r"].size() != static_cast<std::size_t>(m.n) * m.n)
        return Out::failure("parse_error", {}, "\"r\" must hold size^2 pairs");
    for (const auto& p : j["r"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            return Out::failure("parse_error", {}, "\"r\" entries must be [c,d] pairs");
        m.r.emplace_back(p[0].get<Elem>(), p[1].get<Elem>());
    }
    return Out::success(std::move(m));
}

Json ring_to_json(const RingTable& r) {
    return Json{{"size", r.size()}, {"add", table_rows(r.add.op)}, {"mul", table_rows(r.mul)}};
}

Json hopf_to_json(const LinearizedTruss& h) {
    return Json{{"field", "Q"},
                {"dim", h.dim()},
                {"delta", "group-like"},
                {"counit", std::vector<int>(static_cast<std::size_t>(h.dim()), 1)},
                {"unit", h.unit()},
                {"diamond", table_rows(h.diamond.op)},
                {"circ", table_rows(h.circ)},
                {"sigma", h.sigma},
                {"antipode", h.antipode}};
}

Json witness_to_json(const Witness& w) { return Json{{"law", w.law}, {"tuple", w.tuple}}; }

Json check_to_json(const Check& c) {
    Json j{{"ok", c.ok}, {"sampled", c.sampled}};
    if (c.witness) j["witness"] = witness_to_json(*c.witness);
    return j;
}

Json failure_to_json(const Failure& f) {
    return Json{{"kind", f.kind}, {"witness", f.witness}, {"message", f.message}};
}

Json forms_report_to_json(const FormsReport& r) {
    return Json{{"lambda_form", r.lambda_form},     {"mu_form", r.mu_form},
                {"kappa_form", r.kappa_form},       {"heap_form", r.heap_form},
                {"triples_checked", r.triples_checked}, {"quadruples_checked", r.quadruples_checked},
                {"ok", r.all()}};
}

Json sigma_power_report_to_json(const SigmaPowerReport& r) {
    Json j{{"identity_central", r.identity_central}, {"ok", r.ok()}};
    if (!r.identity_central) {
        if (r.centrality_witness) j["witness"] = witness_to_json(*r.centrality_witness);
        j["note"] = "identity is not central in (A,o); conditional checks skipped";
        return j;
    }
    j["preperiod"] = r.preperiod;
    j["period"] = r.period;
    j["powers_checked"] = r.powers_checked;
    j["additivity"] = r.additivity_ok;
    j["group_homomorphism"] = r.group_hom_ok;
    j["heap_endomorphism"] = r.heap_endomorphism_ok;
    j["action_form_checked"] = r.action_form_checked;
    j["action_form"] = r.action_form_ok;
    return j;
}

Json two_sided_report_to_json(const TwoSidedReport& r) {
    Json j{{"abelian", r.abelian},
           {"cocycles_match", r.cocycles_match},
           {"left_law", r.left_law},
           {"right_law", r.right_law},
           {"ok", r.two_sided()}};
    if (r.abelian_witness) j["abelian_witness"] = witness_to_json(*r.abelian_witness);
    if (r.cocycle_witness) j["cocycle_witness"] = *r.cocycle_witness;
    if (r.law_witness) j["law_witness"] = witness_to_json(*r.law_witness);
    return j;
}

Json ybe_check_to_json(const YbeCheck& c) {
    Json j{{"ok", c.ok}, {"well_formed", c.well_formed}, {"bijective", c.bijective}, {"braid", c.braid_holds}};
    if (c.braid_witness) j["braid_witness"] = std::vector<Elem>(c.braid_witness->begin(), c.braid_witness->end());
    if (c.duplicate_pair) j["duplicate_pair"] = Json::array({c.duplicate_pair->first, c.duplicate_pair->second});
    return j;
}

Json sigma_invertibility_to_json(const SigmaInvertibilityReport& r) {
    Json j{{"sigma_bijective", r.sigma_bijective}, {"criterion_holds", r.criterion_holds}};
    if (r.right_identity) j["right_identity"] = *r.right_identity;
    if (r.identity_inverse) j["identity_inverse"] = *r.identity_inverse;
    if (r.sigma_bijective) {
        j["e_is_sigma_inverse_of_one"] = r.e_is_sigma_inverse_of_one;
        j["u_is_sigma_inverse_of_e"] = r.u_is_sigma_inverse_of_e;
    }
    return j;
}

Json pith_to_json(const Pith& p) {
    Json chambers = Json::array();
    for (const auto& c : p.chambers) chambers.push_back(c);
    return Json{{"orbit", p.orbit},
                {"preperiod", p.preperiod},
                {"period", p.period},
                {"chambers", std::move(chambers)},
                {"pith", p.pith_elements},
                {"checks",
                 Json{{"kernel_is_chamber0", p.kernel_is_chamber0},
                      {"kernel_normal", p.kernel_normal},
                      {"circ_closed_with_shift", p.circ_closed_with_shift},
                      {"sigma_shifts_chambers", p.sigma_shifts_chambers},
                      {"chambers_nonempty", p.chambers_nonempty},
                      {"chambers_disjoint", p.chambers_disjoint}}},
                {"ok", p.all_ok()}};
}

Json hopf_axioms_report_to_json(const HopfAxiomsReport& r) {
    return Json{{"coalgebra", r.coalgebra_ok},
                {"antipode", r.antipode_ok},
                {"circ_coalgebra_map", r.circ_coalgebra_map},
                {"brace_law", r.brace_law},
                {"sigma_formula", r.sigma_formula},
                {"sigma_left_linear", r.sigma_left_linear},
                {"antipode_exchange_left", r.antipode_exchange_left},
                {"antipode_exchange_right", r.antipode_exchange_right},
                {"basis_triples", r.basis_triples},
                {"random_trials", r.random_trials},
                {"random_trials_exact", r.random_trials_exact},
                {"ok", r.all()}};
}

Json hopf_forms_report_to_json(const HopfFormsReport& r) {
    return Json{{"lambda_form", r.lambda_form}, {"mu_form", r.mu_form},   {"kappa_form", r.kappa_form},
                {"heap_form", r.heap_form},     {"triples", r.triples},   {"quadruples", r.quadruples},
                {"ok", r.all()}};
}

Json hopf_actions_report_to_json(const HopfActionsReport& r) {
    Json j{{"lambda_module_algebra", r.lambda_module_algebra},
           {"mu_module_algebra", r.mu_module_algebra},
           {"cocycle_condition_lambda", r.cocycle_condition_lambda},
           {"cocycle_condition_mu", r.cocycle_condition_mu},
           {"circ_unital", r.circ_unital},
           {"ok", r.all()}};
    if (r.circ_unital) {
        j["unit_cocycle"] = r.unit_cocycle;
        j["actions_unital"] = r.actions_unital;
    }
    return j;
}

Json enumeration_to_json(const EnumerationResult& r, bool include_timing) {
    Json trusses = Json::array();
    for (const auto& t : r.trusses) trusses.push_back(Json{{"circ", table_rows(t.circ)}, {"sigma", t.sigma}});
    Json j{{"group", Json{{"size", r.group.size()}, {"table", table_rows(r.group.op)}}},
           {"mode", r.mode},
           {"total", r.total_found},
           {"duplicates_detected", r.duplicates_detected},
           {"trusses", std::move(trusses)}};
    auto cls = [](const Classification& c) {
        return Json{{"notion", to_string(c.notion)},
                    {"class_count", c.class_count},
                    {"class_of", c.class_of},
                    {"representatives", c.representatives}};
    };
    if (r.group_semigroup) j["classes_group_semigroup"] = cls(*r.group_semigroup);
    if (r.heap_semigroup) j["classes_heap_semigroup"] = cls(*r.heap_semigroup);
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Outcome<Json> read_json_file(const std::string& path) {
    using Out = Outcome<Json>;
    std::ifstream in(path);
    if (!in) return Out::failure("io_error", {}, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    Json j = Json::parse(buf.str(), nullptr, false);
    if (j.is_discarded()) return Out::failure("parse_error", {}, "invalid JSON in " + path);
    return Out::success(std::move(j));
}

Outcome<bool> write_text_file(const std::string& path, const std::string& content) {
    using Out = Outcome<bool>;
    std::ofstream out(path);
    if (!out) return Out::failure("io_error", {}, "cannot write " + path);
    out << content;
    return Out::success(true);
}

}  // namespace trusslab
