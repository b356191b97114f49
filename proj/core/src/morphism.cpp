#include "trusslab/morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace trusslab {

namespace {

[[noreturn]] void theorem_violation(const std::string& what) {
    throw std::logic_error("theorem violation (internal bug): " + what);
}

bool sides_compatible(Side a, Side b) {
    if (a == Side::TwoSided || b == Side::TwoSided) return true;
    return a == b;
}

// Lambda/mu tables without the full theorem re-verification of
// derive_actions; used for the diagram checks below.
MagmaTable lambda_table(const SkewTruss& t) {
    return MagmaTable::from_fn(t.size(), [&](Elem a, Elem b) {
        return t.group.mul(t.group.inv(t.cocycle(a)), t.cir(a, b));
    });
}
MagmaTable mu_table(const SkewTruss& t) {
    return MagmaTable::from_fn(t.size(), [&](Elem a, Elem b) {
        return t.group.mul(t.cir(a, b), t.group.inv(t.cocycle(a)));
    });
}

}  // namespace

Outcome<TrussMorphism> build_morphism(SkewTruss domain, SkewTruss codomain, std::vector<Elem> map) {
    using Out = Outcome<TrussMorphism>;
    const int n = domain.size(), m = codomain.size();
    if (map.size() != static_cast<std::size_t>(n))
        return Out::failure("size_mismatch", {}, "map must have one entry per domain element");
    for (Elem a = 0; a < n; ++a)
        if (map[static_cast<std::size_t>(a)] < 0 || map[static_cast<std::size_t>(a)] >= m)
            return Out::failure("bad_map_entry", {a}, "map entry out of codomain range");
    if (!sides_compatible(domain.side, codomain.side))
        return Out::failure("side_mismatch", {},
                            "cannot relate a " + to_string(domain.side) + " truss to a " +
                                to_string(codomain.side) + " one");

    auto f = [&](Elem a) { return map[static_cast<std::size_t>(a)]; };
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (f(domain.dia(a, b)) != codomain.dia(f(a), f(b)))
                return Out::failure("not_group_homomorphism", {a, b},
                                    "f(a&b) != f(a)&f(b) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
            if (f(domain.cir(a, b)) != codomain.cir(f(a), f(b)))
                return Out::failure("not_semigroup_homomorphism", {a, b},
                                    "f(a o b) != f(a) o f(b) at (" + std::to_string(a) + "," + std::to_string(b) +
                                        ")");
        }

    // Derived compatibilities; failures here are internal errors.
    for (Elem a = 0; a < n; ++a)
        if (f(domain.cocycle(a)) != codomain.cocycle(f(a)))
            theorem_violation("morphism does not intertwine cocycles at " + std::to_string(a));
    const bool left_like = domain.side != Side::Right;
    const SkewTruss& dl = left_like ? domain : mirror(domain);
    const SkewTruss& cl = left_like ? codomain : mirror(codomain);
    MagmaTable lamA = lambda_table(dl), lamB = lambda_table(cl);
    MagmaTable muA = mu_table(dl), muB = mu_table(cl);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (f(lamA.at(a, b)) != lamB.at(f(a), f(b)))
                theorem_violation("morphism does not intertwine lambda actions");
            if (f(muA.at(a, b)) != muB.at(f(a), f(b)))
                theorem_violation("morphism does not intertwine mu actions");
        }
    return Out::success(TrussMorphism{std::move(domain), std::move(codomain), std::move(map)});
}

Pith compute_pith(const TrussMorphism& f) {
    const SkewTruss& A = f.domain;
    const SkewTruss& B = f.codomain;
    const int n = A.size();
    Pith p;

    // Exact orbit of the codomain identity under sigma_B.
    std::vector<int> seen(static_cast<std::size_t>(B.size()), -1);
    Elem x = B.one();
    while (seen[static_cast<std::size_t>(x)] < 0) {
        seen[static_cast<std::size_t>(x)] = static_cast<int>(p.orbit.size());
        p.orbit.push_back(x);
        x = B.cocycle(x);
    }
    p.preperiod = seen[static_cast<std::size_t>(x)];
    p.period = static_cast<int>(p.orbit.size()) - p.preperiod;

    p.chambers.assign(p.orbit.size(), {});
    p.chambers_disjoint = true;
    for (Elem a = 0; a < n; ++a) {
        Elem fa = f.apply(a);
        int hits = 0;
        for (std::size_t k = 0; k < p.orbit.size(); ++k)
            if (p.orbit[k] == fa) {
                p.chambers[k].push_back(a);
                ++hits;
            }
        if (hits > 0) p.pith_elements.push_back(a);
        // Orbit positions hold distinct values, so this cannot trigger.
        if (hits > 1) p.chambers_disjoint = false;
    }

    p.kernel_is_chamber0 = true;
    for (Elem a = 0; a < n; ++a) {
        bool in_ker = f.apply(a) == B.one();
        bool in_c0 = std::binary_search(p.chambers[0].begin(), p.chambers[0].end(), a);
        if (in_ker != in_c0) p.kernel_is_chamber0 = false;
    }

    p.kernel_normal = true;
    for (Elem k : p.chambers[0])
        for (Elem a = 0; a < n && p.kernel_normal; ++a) {
            Elem conj = A.dia(A.dia(a, k), A.inv(a));
            p.kernel_normal = f.apply(conj) == B.one();
        }

    p.circ_closed_with_shift = true;
    for (std::size_t mi = 0; mi < p.chambers.size() && p.circ_closed_with_shift; ++mi)
        for (std::size_t ni = 0; ni < p.chambers.size() && p.circ_closed_with_shift; ++ni) {
            int target = p.fold(static_cast<long>(mi) + static_cast<long>(ni) + 1);
            for (Elem a : p.chambers[mi]) {
                for (Elem b : p.chambers[ni])
                    if (f.apply(A.cir(a, b)) != p.orbit[static_cast<std::size_t>(target)]) {
                        p.circ_closed_with_shift = false;
                        break;
                    }
                if (!p.circ_closed_with_shift) break;
            }
        }

    p.sigma_shifts_chambers = true;
    for (std::size_t mi = 0; mi < p.chambers.size() && p.sigma_shifts_chambers; ++mi) {
        int target = p.fold(static_cast<long>(mi) + 1);
        for (Elem a : p.chambers[mi])
            if (f.apply(A.cocycle(a)) != p.orbit[static_cast<std::size_t>(target)]) {
                p.sigma_shifts_chambers = false;
                break;
            }
    }

    p.chambers_nonempty = true;
    Elem s = A.one();
    for (std::size_t k = 0; k < p.chambers.size(); ++k) {
        if (!std::binary_search(p.chambers[k].begin(), p.chambers[k].end(), s)) p.chambers_nonempty = false;
        s = A.cocycle(s);
    }
    return p;
}

GradedPith graded_pith(const TrussMorphism& f) {
    GradedPith g;
    g.pith = compute_pith(f);
    g.degree_additive = true;
    const auto& ch = g.pith.chambers;
    for (std::size_t mi = 0; mi < ch.size() && g.degree_additive; ++mi)
        for (std::size_t ni = 0; ni < ch.size() && g.degree_additive; ++ni)
            for (Elem a : ch[mi]) {
                for (Elem b : ch[ni]) {
                    auto [prod, idx] = g.compose({a, static_cast<int>(mi)}, {b, static_cast<int>(ni)}, f);
                    const auto& target = ch[static_cast<std::size_t>(idx)];
                    if (!std::binary_search(target.begin(), target.end(), prod)) {
                        g.degree_additive = false;
                        break;
                    }
                }
                if (!g.degree_additive) break;
            }
    return g;
}

namespace {

void hom_search(const SkewTruss& dom, const SkewTruss& cod, std::vector<Elem>& map, Elem next,
                std::vector<std::vector<Elem>>& out) {
    const int n = dom.size();
    if (next == n) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (map[static_cast<std::size_t>(dom.cir(a, b))] !=
                    cod.cir(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
                    return;
        out.push_back(map);
        return;
    }
    for (Elem img = 0; img < cod.size(); ++img) {
        map[static_cast<std::size_t>(next)] = img;
        bool fine = true;
        for (Elem a = 0; a <= next && fine; ++a)
            for (Elem b = 0; b <= next && fine; ++b) {
                if (a != next && b != next) continue;
                Elem prod = dom.dia(a, b);
                if (prod > next) continue;
                fine = cod.dia(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) ==
                       map[static_cast<std::size_t>(prod)];
            }
        if (fine) hom_search(dom, cod, map, next + 1, out);
    }
    map[static_cast<std::size_t>(next)] = -1;
}

}  // namespace

Outcome<std::vector<TrussMorphism>> enumerate_morphisms(const SkewTruss& domain, const SkewTruss& codomain,
                                                        int bound) {
    using Out = Outcome<std::vector<TrussMorphism>>;
    if (domain.size() > bound)
        return Out::failure("bound_exceeded", {},
                            "domain has " + std::to_string(domain.size()) + " elements; bound is " +
                                std::to_string(bound) + " (raise it explicitly for larger searches)");
    if (!sides_compatible(domain.side, codomain.side))
        return Out::failure("side_mismatch", {}, "sides are not compatible");
    std::vector<std::vector<Elem>> maps;
    std::vector<Elem> work(static_cast<std::size_t>(domain.size()), -1);
    hom_search(domain, codomain, work, 0, maps);
    std::sort(maps.begin(), maps.end());
    std::vector<TrussMorphism> out;
    out.reserve(maps.size());
    for (auto& m : maps) {
        auto built = build_morphism(domain, codomain, std::move(m));
        if (!built.ok()) theorem_violation("enumerated map rejected by build_morphism");
        out.push_back(std::move(built).value());
    }
    return Out::success(std::move(out));
}

bool is_heap_morphism(const SkewTruss& domain, const SkewTruss& codomain, const std::vector<Elem>& map) {
    const int n = domain.size();
    if (map.size() != static_cast<std::size_t>(n)) return false;
    for (Elem a = 0; a < n; ++a)
        if (map[static_cast<std::size_t>(a)] < 0 || map[static_cast<std::size_t>(a)] >= codomain.size())
            return false;
    HeapView hA(domain.group), hB(codomain.group);
    auto f = [&](Elem a) { return map[static_cast<std::size_t>(a)]; };
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            for (Elem c = 0; c < n; ++c)
                if (f(hA.op(a, b, c)) != hB.op(f(a), f(b), f(c))) return false;
            if (f(domain.cir(a, b)) != codomain.cir(f(a), f(b))) return false;
        }
    return true;
}

}  // namespace trusslab
