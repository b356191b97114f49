#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trusslab/outcome.hpp"

namespace trusslab {

/// Scan policy for law checks. Carriers up to the exhaustive threshold are
/// scanned over every tuple; above it a seeded random sample is used and the
/// resulting Check is marked `sampled`.
struct ScanPolicy {
    bool exhaustive = true;
    std::uint64_t seed = 0x7275737353u;
    long samples = 200000;

    /// Exhaustive up to n=16 for triple/quadruple scans.
    static ScanPolicy for_size(int n) {
        ScanPolicy p;
        p.exhaustive = n <= 16;
        return p;
    }
    /// Exhaustive up to n=8 for five-tuple scans (heap axioms).
    static ScanPolicy for_size5(int n) {
        ScanPolicy p;
        p.exhaustive = n <= 8;
        return p;
    }
};

/// A finite binary operation as a dense row-major Cayley table. Entries are
/// element indices; no algebraic law is implied by the type itself.
class MagmaTable {
  public:
    MagmaTable() = default;
    /// Throws std::invalid_argument on malformed input (wrong length, entry
    /// out of range). Use `checked` for a non-throwing path.
    MagmaTable(int size, std::vector<Elem> entries);

    static Outcome<MagmaTable> checked(int size, std::vector<Elem> entries);

    template <typename Fn>
    static MagmaTable from_fn(int size, Fn&& fn) {
        std::vector<Elem> e(static_cast<std::size_t>(size) * size);
        for (Elem a = 0; a < size; ++a)
            for (Elem b = 0; b < size; ++b) e[static_cast<std::size_t>(a) * size + b] = fn(a, b);
        return MagmaTable(size, std::move(e));
    }

    int size() const { return n_; }
    Elem at(Elem a, Elem b) const { return entries_[static_cast<std::size_t>(a) * n_ + b]; }
    const std::vector<Elem>& entries() const { return entries_; }

    MagmaTable transposed() const;

    bool operator==(const MagmaTable&) const = default;
    /// Lexicographic order on (size, entries); used for canonical representatives.
    std::strong_ordering operator<=>(const MagmaTable& o) const;

  private:
    int n_ = 0;
    std::vector<Elem> entries_;
};

/// A finite group: validated Cayley table plus located identity and inverses.
struct GroupTable {
    MagmaTable op;
    Elem identity = 0;
    std::vector<Elem> inverse;

    int size() const { return op.size(); }
    Elem mul(Elem a, Elem b) const { return op.at(a, b); }
    Elem inv(Elem a) const { return inverse[static_cast<std::size_t>(a)]; }
    Elem one() const { return identity; }
    bool is_abelian() const;
    /// First non-commuting pair, if any.
    std::optional<std::pair<Elem, Elem>> abelian_witness() const;

    bool operator==(const GroupTable&) const = default;
};

/// Read-only view of a group as a heap: the ternary operation
/// [a,b,c] = a & b^-1 & c induced by the group product.
class HeapView {
  public:
    explicit HeapView(const GroupTable& g) : g_(&g) {}
    Elem op(Elem a, Elem b, Elem c) const { return g_->mul(g_->mul(a, g_->inv(b)), c); }
    const GroupTable& group() const { return *g_; }

  private:
    const GroupTable* g_;
};

/// True iff the table is associative; witness triple (a,b,c) on failure.
Check validate_semigroup(const MagmaTable& m, ScanPolicy policy);
Check validate_semigroup(const MagmaTable& m);

/// Locates a two-sided identity and inverses and checks associativity.
/// Failure kinds: "not_associative" (witness a,b,c), "no_identity",
/// "no_inverse" (witness a).
Outcome<GroupTable> validate_group(const MagmaTable& m);

Elem heap_op(const HeapView& h, Elem a, Elem b, Elem c);

/// Both heap axioms (para-associativity and the Mal'cev identities) over
/// 5-tuples / 3-tuples of the induced heap.
Check check_heap_axioms(const GroupTable& g, ScanPolicy policy);
Check check_heap_axioms(const GroupTable& g);

/// All bijections f with f(a&b) = f(a)&f(b), g1 -> g2. Empty iff not
/// isomorphic; size mismatch yields empty (not an error). Sorted.
std::vector<std::vector<Elem>> find_isomorphisms(const GroupTable& g1, const GroupTable& g2);
std::vector<std::vector<Elem>> automorphisms(const GroupTable& g);

// Built-in group constructors (used by the CLI's --group option).
GroupTable cyclic_group(int n);
GroupTable klein_four();
GroupTable symmetric3();
GroupTable dihedral_group(int n);  // order 2n
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// Parses "z4", "klein4", "s3", "d4", and 'x'-separated products ("z2xz2").
Outcome<GroupTable> group_by_name(std::string_view name);

}  // namespace trusslab
