#pragma once

#include <optional>
#include <vector>

#include "trusslab/truss.hpp"

namespace trusslab {

/// A map between truss carriers that preserves both operations. The three
/// derived compatibilities (cocycle intertwining and both action diagrams)
/// are theorems once the homomorphism laws hold; build_morphism verifies
/// them and treats any violation as an internal error.
struct TrussMorphism {
    SkewTruss domain;
    SkewTruss codomain;
    std::vector<Elem> map;

    Elem apply(Elem a) const { return map[static_cast<std::size_t>(a)]; }
};

/// Failure kinds: "size_mismatch", "bad_map_entry" (witness a),
/// "side_mismatch", "not_group_homomorphism" / "not_semigroup_homomorphism"
/// (witness a,b).
Outcome<TrussMorphism> build_morphism(SkewTruss domain, SkewTruss codomain, std::vector<Elem> map);

/// The pith of a morphism: chambers indexed by the position of the codomain
/// cocycle orbit of the group identity. On a finite carrier that orbit is
/// eventually periodic with preperiod p and period q; orbit positions
/// 0..p+q-1 carry distinct values, chambers are their preimages, and indices
/// beyond the window fold into the cycle: fold(m) = m for m < p, else
/// p + (m-p) mod q. The chamber-shift laws hold literally at folded indices.
struct Pith {
    std::vector<Elem> orbit;  // sigma_B^n(1) for n = 0..p+q-1
    int preperiod = 0;
    int period = 1;
    std::vector<std::vector<Elem>> chambers;  // chamber n = f^-1(orbit[n]), sorted
    std::vector<Elem> pith_elements;          // union of chambers, sorted

    int fold(long m) const {
        if (m < preperiod) return static_cast<int>(m);
        return preperiod + static_cast<int>((m - preperiod) % period);
    }

    // Verified structure (all theorems; reported for inspection).
    bool kernel_is_chamber0 = false;
    bool kernel_normal = false;
    bool circ_closed_with_shift = false;  // ch m o ch n lands in ch fold(m+n+1)
    bool sigma_shifts_chambers = false;   // sigma_A(ch m) in ch fold(m+1)
    bool chambers_nonempty = false;       // sigma_A^n(1) lies in chamber n
    bool chambers_disjoint = false;
    bool all_ok() const {
        return kernel_is_chamber0 && kernel_normal && circ_closed_with_shift && sigma_shifts_chambers &&
               chambers_nonempty && chambers_disjoint;
    }
};
Pith compute_pith(const TrussMorphism& f);

/// The formal disjoint union of chambers as a graded semigroup: elements are
/// (carrier element, chamber index) with degree index+1 and composition
/// (a,m)*(b,n) = (a o b, fold(m+n+1)).
struct GradedPith {
    Pith pith;
    bool degree_additive = false;  // composition lands where the fold says

    std::pair<Elem, int> compose(std::pair<Elem, int> x, std::pair<Elem, int> y,
                                 const TrussMorphism& f) const {
        return {f.domain.cir(x.first, y.first), pith.fold(static_cast<long>(x.second) + y.second + 1)};
    }
    int degree(std::pair<Elem, int> x) const { return x.second + 1; }
};
GradedPith graded_pith(const TrussMorphism& f);

/// All truss morphisms domain -> codomain, found by backtracking over group
/// images and filtering by circle preservation. Sorted by map. Failure kind
/// "bound_exceeded" if the domain is larger than `bound`.
Outcome<std::vector<TrussMorphism>> enumerate_morphisms(const SkewTruss& domain, const SkewTruss& codomain,
                                                        int bound = 6);

/// The alternative morphism notion: preserves the group heaps (ternary
/// operation) and the semigroup structure. Exposed as a predicate only.
bool is_heap_morphism(const SkewTruss& domain, const SkewTruss& codomain, const std::vector<Elem>& map);

}  // namespace trusslab
