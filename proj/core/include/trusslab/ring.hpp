#pragma once

#include <optional>

#include "trusslab/morphism.hpp"
#include "trusslab/truss.hpp"

namespace trusslab {

/// A finite, possibly non-unital ring: abelian additive group and an
/// associative multiplication satisfying both distributive laws exactly.
struct RingTable {
    GroupTable add;
    MagmaTable mul;

    int size() const { return add.size(); }
    Elem plus(Elem a, Elem b) const { return add.mul(a, b); }
    Elem neg(Elem a) const { return add.inv(a); }
    Elem times(Elem a, Elem b) const { return mul.at(a, b); }
    Elem zero() const { return add.one(); }

    bool operator==(const RingTable&) const = default;
};

/// Two-sidedness report for a truss over an abelian group: both distributive
/// laws with the single cocycle sigma(a) = a o 0 = 0 o a.
struct TwoSidedReport {
    bool abelian = false;
    std::optional<Witness> abelian_witness;
    bool cocycles_match = false;  // a o 0 = 0 o a for all a
    std::optional<Elem> cocycle_witness;
    bool left_law = false;
    bool right_law = false;
    std::optional<Witness> law_witness;
    bool two_sided() const { return abelian && cocycles_match && left_law && right_law; }
};
TwoSidedReport verify_two_sided(const SkewTruss& t);

/// Full ring axiom scan: additive group abelian, multiplication associative,
/// both distributive laws, and the sign rule (-a)b = a(-b) = -(ab).
Check check_ring_axioms(const RingTable& r);

/// The ring of a two-sided truss: a*b = a o b - sigma(a+b). Ring axioms are
/// theorems here and violations throw. Failure kind: "not_two_sided".
Outcome<RingTable> ring_from_truss(const SkewTruss& t);

/// The shifted ring at a central element e: addition a+b-e and product
/// a o b - a o e - b o e + e o e + e. Cross-checked against the
/// translate-then-ring route, which must produce the same tables.
/// Failure kinds: "not_two_sided", "not_central" (witness a),
/// "entry_out_of_range".
Outcome<RingTable> shifted_ring(const SkewTruss& t, Elem e);

/// Functoriality of the ring construction: a truss morphism is automatically
/// a homomorphism of the associated rings.
bool morphism_preserves_ring(const TrussMorphism& f, const RingTable& dom_ring, const RingTable& cod_ring);

}  // namespace trusslab
