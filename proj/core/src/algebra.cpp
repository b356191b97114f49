#include "trusslab/algebra.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace trusslab {

MagmaTable::MagmaTable(int size, std::vector<Elem> entries) {
    auto out = checked(size, std::move(entries));
    if (!out.ok()) throw std::invalid_argument("MagmaTable: " + out.error().message);
    *this = std::move(out.value());
}

Outcome<MagmaTable> MagmaTable::checked(int size, std::vector<Elem> entries) {
    if (size <= 0)
        return Outcome<MagmaTable>::failure("malformed_table", {}, "size must be positive");
    if (entries.size() != static_cast<std::size_t>(size) * size)
        return Outcome<MagmaTable>::failure("malformed_table", {},
                                            "expected " + std::to_string(size * size) + " entries, got " +
                                                std::to_string(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0 || entries[i] >= size)
            return Outcome<MagmaTable>::failure("entry_out_of_range",
                                                {static_cast<Elem>(i / size), static_cast<Elem>(i % size)},
                                                "entry at (" + std::to_string(i / size) + "," +
                                                    std::to_string(i % size) + ") is " + std::to_string(entries[i]));
    }
    MagmaTable m;
    m.n_ = size;
    m.entries_ = std::move(entries);
    return Outcome<MagmaTable>::success(std::move(m));
}

MagmaTable MagmaTable::transposed() const {
    return MagmaTable::from_fn(n_, [this](Elem a, Elem b) { return at(b, a); });
}

std::strong_ordering MagmaTable::operator<=>(const MagmaTable& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(entries_.begin(), entries_.end(), o.entries_.begin(),
                                                  o.entries_.end());
}

bool GroupTable::is_abelian() const { return !abelian_witness().has_value(); }

std::optional<std::pair<Elem, Elem>> GroupTable::abelian_witness() const {
    const int n = size();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return std::make_pair(a, b);
    return std::nullopt;
}

Check validate_semigroup(const MagmaTable& m, ScanPolicy policy) {
    const int n = m.size();
    auto bad = [&](Elem a, Elem b, Elem c) { return m.at(m.at(a, b), c) != m.at(a, m.at(b, c)); };
    if (policy.exhaustive) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (bad(a, b, c)) return Check::fail("associativity", {a, b, c});
        return Check::pass();
    }
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<Elem> pick(0, n - 1);
    for (long i = 0; i < policy.samples; ++i) {
        Elem a = pick(rng), b = pick(rng), c = pick(rng);
        if (bad(a, b, c)) {
            Check ck = Check::fail("associativity", {a, b, c});
            ck.sampled = true;
            return ck;
        }
    }
    Check ck = Check::pass();
    ck.sampled = true;
    return ck;
}

Check validate_semigroup(const MagmaTable& m) { return validate_semigroup(m, ScanPolicy::for_size(m.size())); }

Outcome<GroupTable> validate_group(const MagmaTable& m) {
    const int n = m.size();
    Check assoc = validate_semigroup(m);
    if (!assoc.ok)
        return Outcome<GroupTable>::failure("not_associative", assoc.witness->tuple,
                                            "operation is not associative");
    Elem e = -1;
    for (Elem cand = 0; cand < n && e < 0; ++cand) {
        bool neutral = true;
        for (Elem a = 0; a < n && neutral; ++a)
            neutral = m.at(cand, a) == a && m.at(a, cand) == a;
        if (neutral) e = cand;
    }
    if (e < 0) return Outcome<GroupTable>::failure("no_identity", {}, "no two-sided identity element");
    std::vector<Elem> inv(static_cast<std::size_t>(n), -1);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b)
            if (m.at(a, b) == e && m.at(b, a) == e) {
                inv[static_cast<std::size_t>(a)] = b;
                break;
            }
        if (inv[static_cast<std::size_t>(a)] < 0)
            return Outcome<GroupTable>::failure("no_inverse", {a},
                                                "element " + std::to_string(a) + " has no two-sided inverse");
    }
    return Outcome<GroupTable>::success(GroupTable{m, e, std::move(inv)});
}

Elem heap_op(const HeapView& h, Elem a, Elem b, Elem c) { return h.op(a, b, c); }

Check check_heap_axioms(const GroupTable& g, ScanPolicy policy) {
    const int n = g.size();
    HeapView h(g);
    auto para = [&](Elem a1, Elem a2, Elem a3, Elem a4, Elem a5) {
        return h.op(h.op(a1, a2, a3), a4, a5) == h.op(a1, a2, h.op(a3, a4, a5));
    };
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (h.op(a, b, b) != a || h.op(b, b, a) != a) return Check::fail("heap_malcev", {a, b});
    if (policy.exhaustive) {
        for (Elem a1 = 0; a1 < n; ++a1)
            for (Elem a2 = 0; a2 < n; ++a2)
                for (Elem a3 = 0; a3 < n; ++a3)
                    for (Elem a4 = 0; a4 < n; ++a4)
                        for (Elem a5 = 0; a5 < n; ++a5)
                            if (!para(a1, a2, a3, a4, a5))
                                return Check::fail("heap_para_associativity", {a1, a2, a3, a4, a5});
        return Check::pass();
    }
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<Elem> pick(0, n - 1);
    for (long i = 0; i < policy.samples; ++i) {
        Elem a1 = pick(rng), a2 = pick(rng), a3 = pick(rng), a4 = pick(rng), a5 = pick(rng);
        if (!para(a1, a2, a3, a4, a5)) {
            Check ck = Check::fail("heap_para_associativity", {a1, a2, a3, a4, a5});
            ck.sampled = true;
            return ck;
        }
    }
    Check ck = Check::pass();
    ck.sampled = true;
    return ck;
}

Check check_heap_axioms(const GroupTable& g) { return check_heap_axioms(g, ScanPolicy::for_size5(g.size())); }

namespace {

// Backtracking over images in element order; a partial map is pruned as soon
// as a product of two assigned elements has an assigned, inconsistent image.
void iso_search(const GroupTable& g1, const GroupTable& g2, std::vector<Elem>& map, std::vector<bool>& used,
                Elem next, std::vector<std::vector<Elem>>& out) {
    const int n = g1.size();
    if (next == n) {
        out.push_back(map);
        return;
    }
    for (Elem img = 0; img < n; ++img) {
        if (used[static_cast<std::size_t>(img)]) continue;
        map[static_cast<std::size_t>(next)] = img;
        bool fine = true;
        for (Elem a = 0; a <= next && fine; ++a) {
            for (Elem b = 0; b <= next && fine; ++b) {
                if (a != next && b != next) continue;
                Elem prod = g1.mul(a, b);
                if (prod > next) continue;
                fine = g2.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) ==
                       map[static_cast<std::size_t>(prod)];
            }
        }
        if (fine) {
            used[static_cast<std::size_t>(img)] = true;
            iso_search(g1, g2, map, used, next + 1, out);
            used[static_cast<std::size_t>(img)] = false;
        }
    }
    map[static_cast<std::size_t>(next)] = -1;
}

}  // namespace

std::vector<std::vector<Elem>> find_isomorphisms(const GroupTable& g1, const GroupTable& g2) {
    std::vector<std::vector<Elem>> out;
    if (g1.size() != g2.size()) return out;
    std::vector<Elem> map(static_cast<std::size_t>(g1.size()), -1);
    std::vector<bool> used(static_cast<std::size_t>(g1.size()), false);
    iso_search(g1, g2, map, used, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Elem>> automorphisms(const GroupTable& g) { return find_isomorphisms(g, g); }

GroupTable cyclic_group(int n) {
    if (n <= 0) throw std::invalid_argument("cyclic_group: n must be positive");
    MagmaTable m = MagmaTable::from_fn(n, [n](Elem a, Elem b) { return (a + b) % n; });
    return validate_group(m).value();
}

GroupTable klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

GroupTable symmetric3() {
    // Permutations of {0,1,2} in lexicographic one-line order; product is
    // composition p*q : x -> p[q[x]].
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    MagmaTable m = MagmaTable::from_fn(6, [&](Elem a, Elem b) {
        int comp[3];
        for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
        return index_of(comp);
    });
    return validate_group(m).value();
}

GroupTable dihedral_group(int n) {
    if (n <= 0) throw std::invalid_argument("dihedral_group: n must be positive");
    // Elements 0..n-1 are rotations r^i, n..2n-1 are reflections r^i s.
    MagmaTable m = MagmaTable::from_fn(2 * n, [n](Elem a, Elem b) -> Elem {
        const bool fa = a >= n, fb = b >= n;
        const int ia = fa ? a - n : a, ib = fb ? b - n : b;
        if (!fa && !fb) return (ia + ib) % n;
        if (!fa && fb) return n + (ia + ib) % n;
        if (fa && !fb) return n + ((ia - ib) % n + n) % n;
        return ((ia - ib) % n + n) % n;
    });
    return validate_group(m).value();
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
    const int na = a.size(), nb = b.size();
    MagmaTable m = MagmaTable::from_fn(na * nb, [&](Elem x, Elem y) {
        Elem xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
        return a.mul(xa, ya) * nb + b.mul(xb, yb);
    });
    return validate_group(m).value();
}

Outcome<GroupTable> group_by_name(std::string_view name) {
    auto parse_atom = [](std::string_view tok) -> Outcome<GroupTable> {
        if (tok == "klein4") return Outcome<GroupTable>::success(klein_four());
        if (tok == "s3") return Outcome<GroupTable>::success(symmetric3());
        if (tok.size() >= 2 && (tok[0] == 'z' || tok[0] == 'd')) {
            int k = 0;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (tok[i] < '0' || tok[i] > '9')
                    return Outcome<GroupTable>::failure("unknown_group", {}, std::string(tok));
                k = k * 10 + (tok[i] - '0');
            }
            if (k <= 0) return Outcome<GroupTable>::failure("unknown_group", {}, std::string(tok));
            return Outcome<GroupTable>::success(tok[0] == 'z' ? cyclic_group(k) : dihedral_group(k));
        }
        return Outcome<GroupTable>::failure("unknown_group", {}, std::string(tok));
    };

    std::optional<GroupTable> acc;
    std::size_t start = 0;
    while (start <= name.size()) {
        std::size_t pos = name.find('x', start);
        std::string_view tok = name.substr(start, pos == std::string_view::npos ? pos : pos - start);
        auto g = parse_atom(tok);
        if (!g.ok()) return g;
        acc = acc ? direct_product(*acc, g.value()) : g.value();
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    if (!acc) return Outcome<GroupTable>::failure("unknown_group", {}, std::string(name));
    return Outcome<GroupTable>::success(std::move(*acc));
}

}  // namespace trusslab
