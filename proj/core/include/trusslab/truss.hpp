#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trusslab/algebra.hpp"
#include "trusslab/outcome.hpp"

namespace trusslab {

enum class Side { Left, Right, TwoSided };

std::string to_string(Side s);
Outcome<Side> side_from_string(std::string_view s);

/// A finite skew truss: a group structure (diamond), an associative circle
/// operation on the same carrier, and the derived cocycle binding them.
/// The cocycle is always derived, never user-supplied: sigma[a] = a o 1
/// for left trusses, 1 o a for right trusses, and both (equal) for
/// two-sided ones.
struct SkewTruss {
    GroupTable group;
    MagmaTable circ;
    std::vector<Elem> sigma;
    Side side = Side::Left;

    int size() const { return group.size(); }
    Elem dia(Elem a, Elem b) const { return group.mul(a, b); }
    Elem cir(Elem a, Elem b) const { return circ.at(a, b); }
    Elem inv(Elem a) const { return group.inv(a); }
    Elem one() const { return group.one(); }
    Elem cocycle(Elem a) const { return sigma[static_cast<std::size_t>(a)]; }

    bool sigma_is_identity() const;

    bool operator==(const SkewTruss&) const = default;
};

/// Verifies associativity of circ and the truss distributive law(s) for the
/// requested side, deriving the cocycle. Two-sided additionally requires an
/// abelian group and equal left/right cocycles.
/// Failure kinds: "size_mismatch", "not_associative" (witness a,b,c),
/// "truss_law" (witness a,b,c), "not_abelian" (witness a,b),
/// "cocycle_mismatch" (witness a).
Outcome<SkewTruss> build_truss(GroupTable group, MagmaTable circ, Side side = Side::Left);

/// The truss with a o b = sigma(a) for an idempotent endomap sigma; its
/// derived cocycle equals sigma. Failure kind: "not_idempotent" (witness a).
Outcome<SkewTruss> idempotent_truss(GroupTable group, std::vector<Elem> sigma);

/// The opposite truss: both tables transposed, side flipped. A structure is a
/// right truss exactly when its mirror is a left truss.
SkewTruss mirror(const SkewTruss& t);

/// The two actions of (A,o) on (A,&) by group endomorphisms:
/// lambda[a][b] = sigma(a)^- & (a o b), mu[a][b] = (a o b) & sigma(a)^-.
struct ActionPair {
    MagmaTable lambda;
    MagmaTable mu;
};

/// Derives both action tables and verifies the endomorphism and semigroup
/// action properties. Those are theorems for a valid truss, so a violation
/// throws std::logic_error. Requires a left or two-sided truss.
ActionPair derive_actions(const SkewTruss& t);

/// Cross-check of the five equivalent formulations of the distributive law.
/// A mismatch throws std::logic_error; the report carries scan sizes.
struct FormsReport {
    bool lambda_form = false;   // a o (b&c) = (a o b) & lambda_a(c)
    bool mu_form = false;       // a o (b&c) = mu_a(b) & (a o c)
    bool kappa_form = false;    // a o (b&c) = kappa_a(b) & kappahat_a(c)
    bool heap_form = false;     // a o [b,c,d] = [a o b, a o c, a o d]
    long triples_checked = 0;
    long quadruples_checked = 0;
    bool all() const { return lambda_form && mu_form && kappa_form && heap_form; }
};
FormsReport check_equivalent_forms(const SkewTruss& t);

/// The family member at base point e: group operation a & e^- & b with
/// identity e, same circle operation, cocycle a o e (left side; mirrored for
/// right trusses). A two-sided input stays two-sided when e is central in
/// (A,o) and otherwise yields the left family member.
SkewTruss translate_family(const SkewTruss& t, Elem e);

/// Ports the circle operation through a group isomorphism f: target -> t.group
/// (entries of f are t-carrier indices). The result lives on the target group
/// and has cocycle f^-1 sigma f. Failure kinds: "size_mismatch",
/// "not_bijective" (witness a,b), "not_homomorphism" (witness a,b).
Outcome<SkewTruss> port_structure(const SkewTruss& t, const GroupTable& target, const std::vector<Elem>& f);

/// Ports the group operation through a semigroup isomorphism
/// g: target -> (A,o). The result keeps the target's circle operation.
Outcome<SkewTruss> port_structure(const SkewTruss& t, const MagmaTable& target, const std::vector<Elem>& g);

/// Behaviour of cocycle powers when the group identity is central in (A,o):
/// near-additivity sigma^n(a&b) = sigma^n(a) & sigma^n(1)^- & sigma^n(b),
/// sigma^n as a group homomorphism into the translated group, the heap
/// endomorphism property, and the action form where its centrality
/// precondition holds. Powers are iterated until the sequence of maps
/// repeats (preperiod/period detected exactly).
struct SigmaPowerReport {
    bool identity_central = false;
    std::optional<Witness> centrality_witness;
    int preperiod = 0;  // of the sequence sigma^1, sigma^2, ... as maps
    int period = 0;
    int powers_checked = 0;
    bool additivity_ok = false;
    bool group_hom_ok = false;
    bool heap_endomorphism_ok = false;
    int action_form_checked = 0;  // powers whose extra centrality hypothesis held
    bool action_form_ok = false;
    bool ok() const {
        return !identity_central || (additivity_ok && group_hom_ok && heap_endomorphism_ok && action_form_ok);
    }
};
SigmaPowerReport sigma_power_report(const SkewTruss& t);

// Named law checks shared by builders, tests and the CLI `verify` pipeline.
Check check_left_truss_law(const GroupTable& g, const MagmaTable& circ, const std::vector<Elem>& sigma);
Check check_cocycle_equivariance(const SkewTruss& t);       // sigma(a o b) = a o sigma(b)
Check check_inverse_identities(const SkewTruss& t);         // both identities of the inverse lemma
Check check_cocycle_conditions(const SkewTruss& t);         // sigma(a o b) via lambda and via mu
Check check_action_exchange(const SkewTruss& t);            // sigma(a) & lambda_a(b) = mu_a(b) & sigma(a)
Check check_monoid_cocycle_identity(const SkewTruss& t);    // sigma(1_o) = 1 when a circle identity exists

std::vector<Elem> derive_sigma(const GroupTable& g, const MagmaTable& circ, Side side);

}  // namespace trusslab
