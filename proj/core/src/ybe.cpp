#include "trusslab/ybe.hpp"

#include <stdexcept>

#include "trusslab/parallel.hpp"

namespace trusslab {

namespace {

[[noreturn]] void theorem_violation(const std::string& what) {
    throw std::logic_error("theorem violation (internal bug): " + what);
}

}  // namespace

YBMap flip_map(int n) {
    YBMap m;
    m.n = n;
    m.r.reserve(static_cast<std::size_t>(n) * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) m.r.emplace_back(b, a);
    return m;
}

YbeCheck verify_ybe(const YBMap& r, int jobs) {
    YbeCheck out;
    const int n = r.n;
    if (n <= 0 || r.r.size() != static_cast<std::size_t>(n) * n) {
        out.well_formed = false;
        return out;
    }
    for (const auto& [c, d] : r.r)
        if (c < 0 || c >= n || d < 0 || d >= n) {
            out.well_formed = false;
            return out;
        }

    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    out.bijective = true;
    for (const auto& [c, d] : r.r) {
        char& slot = seen[static_cast<std::size_t>(c) * n + d];
        if (slot) {
            out.bijective = false;
            if (!out.duplicate_pair) out.duplicate_pair = std::make_pair(c, d);
        }
        slot = 1;
    }

    struct ChunkResult {
        bool ok = true;
        std::array<Elem, 3> witness{};
    };
    auto braid_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        ChunkResult res;
        for (std::uint64_t ai = lo; ai < hi && res.ok; ++ai) {
            const Elem a = static_cast<Elem>(ai);
            for (Elem b = 0; b < n && res.ok; ++b)
                for (Elem c = 0; c < n; ++c) {
                    // (r x id)(id x r)(r x id)
                    auto [p, q] = r.apply(a, b);
                    auto [s, t] = r.apply(q, c);
                    auto [u, v] = r.apply(p, s);
                    // (id x r)(r x id)(id x r)
                    auto [p2, q2] = r.apply(b, c);
                    auto [s2, t2] = r.apply(a, p2);
                    auto [u2, v2] = r.apply(t2, q2);
                    if (u != s2 || v != u2 || t != v2) {
                        res.ok = false;
                        res.witness = {a, b, c};
                        break;
                    }
                }
        }
        return res;
    };
    out.braid_holds = true;
    for (const auto& chunk : run_chunked(static_cast<std::uint64_t>(n), jobs, braid_chunk))
        if (!chunk.ok) {
            out.braid_holds = false;
            out.braid_witness = chunk.witness;
            break;
        }
    out.ok = out.well_formed && out.bijective && out.braid_holds;
    return out;
}

SigmaInvertibilityReport check_sigma_invertible(const SkewTruss& t) {
    const SkewTruss u = t.side == Side::Right ? mirror(t) : t;
    const int n = u.size();
    SigmaInvertibilityReport rep;

    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    rep.sigma_bijective = true;
    for (Elem a = 0; a < n; ++a) {
        char& h = hit[static_cast<std::size_t>(u.cocycle(a))];
        if (h) rep.sigma_bijective = false;
        h = 1;
    }

    // Independent route: scan for a right identity e of the circle operation
    // and an inverse u0 of the group identity with respect to it.
    for (Elem e = 0; e < n && !rep.criterion_holds; ++e) {
        bool right_id = true;
        for (Elem a = 0; a < n && right_id; ++a) right_id = u.cir(a, e) == a;
        if (!right_id) continue;
        if (!rep.right_identity) rep.right_identity = e;
        for (Elem u0 = 0; u0 < n; ++u0)
            if (u.cir(u.one(), u0) == e && u.cir(u0, u.one()) == e) {
                rep.criterion_holds = true;
                rep.right_identity = e;
                rep.identity_inverse = u0;
                break;
            }
    }

    if (rep.sigma_bijective != rep.criterion_holds)
        theorem_violation("sigma bijectivity and the right-identity criterion disagree");

    if (rep.sigma_bijective) {
        std::vector<Elem> sinv(static_cast<std::size_t>(n));
        for (Elem a = 0; a < n; ++a) sinv[static_cast<std::size_t>(u.cocycle(a))] = a;
        const Elem e = sinv[static_cast<std::size_t>(u.one())];
        const Elem u0 = sinv[static_cast<std::size_t>(e)];
        rep.e_is_sigma_inverse_of_one = true;
        for (Elem a = 0; a < n; ++a)
            if (u.cir(a, e) != a) rep.e_is_sigma_inverse_of_one = false;
        rep.u_is_sigma_inverse_of_e = u.cir(u.one(), u0) == e && u.cir(u0, u.one()) == e;
        if (!rep.e_is_sigma_inverse_of_one || !rep.u_is_sigma_inverse_of_e)
            theorem_violation("sigma^-1(1) / sigma^-2(1) do not witness the invertibility criterion");
    }
    return rep;
}

Outcome<BraceData> extract_brace(const SkewTruss& t) {
    using Out = Outcome<BraceData>;
    if (t.side == Side::Right) {
        auto m = extract_brace(mirror(t));
        if (!m.ok()) return m;
        return Out::success(BraceData{mirror(m.value().brace), m.value().bullet.transposed()});
    }
    const int n = t.size();
    auto circle_group = validate_group(t.circ);
    if (!circle_group.ok())
        return Out::failure("circ_not_group", circle_group.error().witness,
                            "circle operation is not a group: " + circle_group.error().kind);
    const GroupTable& cg = circle_group.value();
    const GroupTable& g = t.group;

    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (Elem a = 0; a < n; ++a) {
        if (hit[static_cast<std::size_t>(t.cocycle(a))])
            theorem_violation("sigma not bijective although the circle operation is a group");
        hit[static_cast<std::size_t>(t.cocycle(a))] = 1;
    }
    std::vector<Elem> sinv(static_cast<std::size_t>(n));
    for (Elem a = 0; a < n; ++a) sinv[static_cast<std::size_t>(t.cocycle(a))] = a;

    // Both formulas for the bullet operation, coded apart.
    MagmaTable bullet =
        MagmaTable::from_fn(n, [&](Elem a, Elem b) { return t.cir(sinv[static_cast<std::size_t>(a)], b); });
    MagmaTable bullet2 = MagmaTable::from_fn(
        n, [&](Elem a, Elem b) { return cg.mul(cg.mul(a, cg.inv(g.one())), b); });
    if (bullet != bullet2) theorem_violation("the two bullet formulas disagree");

    if (!validate_group(bullet).ok()) theorem_violation("bullet operation is not a group");
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (bullet.at(a, g.mul(b, c)) !=
                    g.mul(g.mul(bullet.at(a, b), g.inv(a)), bullet.at(a, c)))
                    theorem_violation("brace distributive law fails for the extracted bullet");
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (t.cocycle(t.cir(sinv[static_cast<std::size_t>(a)], sinv[static_cast<std::size_t>(b)])) !=
                bullet.at(a, b))
                theorem_violation("sigma does not transport circle to bullet");

    auto brace = build_truss(g, bullet, Side::Left);
    if (!brace.ok()) theorem_violation("extracted brace rejected: " + brace.error().message);
    if (!brace.value().sigma_is_identity()) theorem_violation("extracted brace has a nontrivial cocycle");
    return Out::success(BraceData{std::move(brace).value(), std::move(bullet)});
}

Outcome<SkewTruss> truss_from_brace(const BraceData& b) {
    return build_truss(b.brace.group, b.bullet, b.brace.side);
}

Outcome<YBMap> solution_from_truss(const SkewTruss& t, Elem e, int jobs) {
    using Out = Outcome<YBMap>;
    const SkewTruss u = t.side == Side::Right ? mirror(t) : t;
    const int n = u.size();
    if (e < 0 || e >= n) return Out::failure("entry_out_of_range", {e}, "base point out of range");
    auto circle_group = validate_group(u.circ);
    if (!circle_group.ok())
        return Out::failure("circ_not_group", circle_group.error().witness,
                            "circle operation is not a group: " + circle_group.error().kind);
    const GroupTable& cg = circle_group.value();
    const GroupTable& g = u.group;

    HeapView dia_heap(g), circ_heap(cg);
    YBMap out;
    out.n = n;
    out.r.resize(static_cast<std::size_t>(n) * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            // Direct form.
            const Elem w = cg.mul(cg.mul(a, cg.inv(e)), b);  // a o e^o o b
            const Elem first = g.mul(g.mul(e, g.inv(a)), w);
            const Elem second = cg.mul(cg.mul(cg.mul(cg.mul(e, cg.inv(first)), a), cg.inv(e)), b);
            // Group-heap form.
            const Elem first_h = dia_heap.op(e, a, w);
            const Elem second_h = cg.mul(cg.mul(cg.mul(cg.mul(e, cg.inv(first_h)), a), cg.inv(e)), b);
            // Double-heap form.
            const Elem w_h = circ_heap.op(a, e, b);
            const Elem first_hh = dia_heap.op(e, a, w_h);
            const Elem second_hh = circ_heap.op(circ_heap.op(e, first_hh, a), e, b);
            if (first != first_h || first != first_hh || second != second_h || second != second_hh)
                theorem_violation("direct, heap and double-heap solution formulas disagree at (" +
                                  std::to_string(a) + "," + std::to_string(b) + ")");
            out.r[static_cast<std::size_t>(a) * n + b] = {first, second};
        }

    YbeCheck check = verify_ybe(out, jobs);
    if (!check.ok) theorem_violation("constructed map is not a bijective braid solution");
    return Out::success(std::move(out));
}

}  // namespace trusslab
