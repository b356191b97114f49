#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trusslab/truss.hpp"

namespace trusslab {

/// The two isomorphism notions for trusses: maps preserving group and
/// semigroup structure, or maps preserving the group heap and the semigroup.
enum class IsoNotion { GroupSemigroup, HeapSemigroup };

std::string to_string(IsoNotion n);

struct Classification {
    IsoNotion notion{};
    std::vector<int> class_of;         // truss index -> class id
    std::vector<int> representatives;  // class id -> index of the lex-least member
    int class_count = 0;
};

/// All left trusses over a fixed group, as lexicographically sorted circle
/// tables. `duplicates_detected` flags a violation of the injectivity of the
/// (sigma, lambda) parametrization used by the structured search; it is
/// expected to stay false.
struct EnumerationResult {
    GroupTable group;
    std::string mode;  // "naive" or "structured"
    std::vector<SkewTruss> trusses;
    long total_found = 0;
    bool duplicates_detected = false;
    std::optional<Classification> group_semigroup;
    std::optional<Classification> heap_semigroup;
    double elapsed_ms = 0.0;
};

/// Ground-truth oracle: iterates all n^(n^2) binary operations and filters by
/// associativity plus the truss law. Failure kind "bound_exceeded" for n > 3.
Outcome<EnumerationResult> enumerate_naive(const GroupTable& group, int jobs = 1);

/// Structured search over pairs (sigma, lambda) with lambda_a a group
/// endomorphism, reconstructing a o b = sigma(a) & lambda_a(b). Sigma is the
/// outer loop; per-element endomorphism candidates are prefiltered by the
/// cocycle condition and the action property is enforced during backtracking.
/// Returns exactly the enumerate_naive set wherever both run.
Outcome<EnumerationResult> enumerate_structured(const GroupTable& group, int jobs = 1, int bound = 8);

/// Partitions the result into isomorphism classes under the chosen notion and
/// fills the corresponding slot. Isomorphisms between trusses sharing one
/// group table are exactly the group automorphisms (group+semigroup notion)
/// resp. the maps x -> t & g(x) with g an automorphism (heap+semigroup
/// notion); the search is exhaustive over those candidate sets and class
/// representatives are the lex-least circle tables.
EnumerationResult classify(EnumerationResult result, IsoNotion notion);

/// All group endomorphisms of g (as image arrays, sorted).
std::vector<std::vector<Elem>> group_endomorphisms(const GroupTable& g);

}  // namespace trusslab
