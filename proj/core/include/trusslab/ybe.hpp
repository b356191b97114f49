#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "trusslab/truss.hpp"

namespace trusslab {

/// A candidate set-theoretic Yang-Baxter map r: A x A -> A x A stored as an
/// n^2-entry table of pairs in row-major (a,b) order.
struct YBMap {
    int n = 0;
    std::vector<std::pair<Elem, Elem>> r;

    std::pair<Elem, Elem> apply(Elem a, Elem b) const { return r[static_cast<std::size_t>(a) * n + b]; }

    bool operator==(const YBMap&) const = default;
};

/// Braid equation and bijectivity check. The witness triple, when present,
/// is a point where (r x id)(id x r)(r x id) and (id x r)(r x id)(id x r)
/// disagree; `duplicate_pair` names an output pair hit twice when r is not
/// a bijection.
struct YbeCheck {
    bool ok = false;
    bool well_formed = true;
    bool bijective = false;
    bool braid_holds = false;
    std::optional<std::array<Elem, 3>> braid_witness;
    std::optional<std::pair<Elem, Elem>> duplicate_pair;
};
YbeCheck verify_ybe(const YBMap& r, int jobs = 1);

/// Cocycle invertibility criterion: sigma is bijective iff the circle
/// operation has a right identity with respect to which the group identity
/// is invertible. Both routes are evaluated independently; their agreement
/// is a theorem and is asserted.
struct SigmaInvertibilityReport {
    bool sigma_bijective = false;
    bool criterion_holds = false;                 // right identity + invertible 1
    std::optional<Elem> right_identity;           // e with a o e = a for all a
    std::optional<Elem> identity_inverse;         // u with 1 o u = u o 1 = e
    bool e_is_sigma_inverse_of_one = false;       // e = sigma^-1(1), when bijective
    bool u_is_sigma_inverse_of_e = false;         // u = sigma^-1(e), when bijective
};
SigmaInvertibilityReport check_sigma_invertible(const SkewTruss& t);

/// A skew brace extracted from a truss whose circle operation is a group:
/// the same group structure with the bullet operation a*b = sigma^-1(a) o b,
/// packaged as a truss with identity cocycle.
struct BraceData {
    SkewTruss brace;    // (A, &, *) with sigma = id
    MagmaTable bullet;  // the * table
};

/// Failure kinds propagate from validate_group on the circle table
/// ("not_associative", "no_identity", "no_inverse").
Outcome<BraceData> extract_brace(const SkewTruss& t);

/// Rebuilds the truss a brace represents (circle = bullet, cocycle = id).
Outcome<SkewTruss> truss_from_brace(const BraceData& b);

/// The Yang-Baxter solution attached to a truss with group circle operation
/// and a base point e. Three independently coded evaluation routes (direct,
/// group-heap, double-heap) must agree entrywise; bijectivity and the braid
/// equation are verified exhaustively. All three properties are theorems.
Outcome<YBMap> solution_from_truss(const SkewTruss& t, Elem e, int jobs = 1);

/// The flip (a,b) -> (b,a); always a solution.
YBMap flip_map(int n);

}  // namespace trusslab
