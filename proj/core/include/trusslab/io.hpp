#pragma once

#include <string>

#include "json.hpp"
#include "trusslab/enumerate.hpp"
#include "trusslab/hopf.hpp"
#include "trusslab/morphism.hpp"
#include "trusslab/ring.hpp"
#include "trusslab/truss.hpp"
#include "trusslab/ybe.hpp"

// Canonical JSON interchange. All indices are 0-based; object keys serialize
// sorted, so identical data always produces identical bytes.
//
//   magma:    {"size": n, "table": [[...], ...]}
//   truss:    {"size": n, "diamond": [[...]], "circ": [[...]],
//              "side": "left"|"right"|"two-sided",    (optional, default left)
//              "sigma": [...]}                        (optional; checked against
//                                                      the derived cocycle)
//   morphism: {"domain": path, "codomain": path, "map": [...]}
//   ybe:      {"size": n, "r": [[c,d], ...]} in row-major (a,b) order
//   ring:     {"size": n, "add": [[...]], "mul": [[...]]}
//   hopf:     {"field": "Q", "dim": n, "delta": "group-like", ...}

namespace trusslab {

using Json = nlohmann::json;

Json magma_to_json(const MagmaTable& m);
Outcome<MagmaTable> magma_from_json(const Json& j);

Json group_to_json(const GroupTable& g);

Json truss_to_json(const SkewTruss& t);
Outcome<SkewTruss> truss_from_json(const Json& j);
Outcome<SkewTruss> load_truss_file(const std::string& path);

struct MorphismFile {
    SkewTruss domain;
    SkewTruss codomain;
    std::vector<Elem> map;
};
/// Resolves the domain/codomain paths relative to the morphism file.
Outcome<MorphismFile> load_morphism_file(const std::string& path);

Json ybe_to_json(const YBMap& r);
Outcome<YBMap> ybe_from_json(const Json& j);

Json ring_to_json(const RingTable& r);
Json hopf_to_json(const LinearizedTruss& h);

Json witness_to_json(const Witness& w);
Json check_to_json(const Check& c);
Json failure_to_json(const Failure& f);
Json forms_report_to_json(const FormsReport& r);
Json sigma_power_report_to_json(const SigmaPowerReport& r);
Json two_sided_report_to_json(const TwoSidedReport& r);
Json ybe_check_to_json(const YbeCheck& c);
Json sigma_invertibility_to_json(const SigmaInvertibilityReport& r);
Json pith_to_json(const Pith& p);
Json hopf_axioms_report_to_json(const HopfAxiomsReport& r);
Json hopf_forms_report_to_json(const HopfFormsReport& r);
Json hopf_actions_report_to_json(const HopfActionsReport& r);
Json enumeration_to_json(const EnumerationResult& r, bool include_timing = false);

/// dump(2) plus trailing newline; the byte format all tools emit.
std::string dump_json(const Json& j);

Outcome<Json> read_json_file(const std::string& path);
Outcome<bool> write_text_file(const std::string& path, const std::string& content);

}  // namespace trusslab
