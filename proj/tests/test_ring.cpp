#include "doctest.h"
#include "trusslab/enumerate.hpp"
#include "trusslab/ring.hpp"

using namespace trusslab;

namespace {

SkewTruss trivial_brace(int n) {
    auto g = cyclic_group(n);
    return build_truss(g, g.op, Side::TwoSided).value();
}

SkewTruss mult_truss(int n) {  // a o b = a*b mod n over addition: sigma = 0
    auto g = cyclic_group(n);
    return build_truss(g, MagmaTable::from_fn(n, [n](Elem a, Elem b) { return (a * b) % n; }),
                       Side::TwoSided)
        .value();
}

SkewTruss affine_truss(int n) {  // a o b = a + b + a*b: sigma = id
    auto g = cyclic_group(n);
    return build_truss(g, MagmaTable::from_fn(n, [n](Elem a, Elem b) { return (a + b + a * b) % n; }),
                       Side::TwoSided)
        .value();
}

}  // namespace

TEST_CASE("verify_two_sided on the named examples") {
    CHECK(verify_two_sided(mult_truss(4)).two_sided());
    CHECK(verify_two_sided(trivial_brace(5)).two_sided());

    // Nonabelian groups are rejected outright.
    auto s3 = symmetric3();
    auto skew = build_truss(s3, s3.op, Side::Left).value();
    TwoSidedReport rep = verify_two_sided(skew);
    CHECK_FALSE(rep.abelian);
    REQUIRE(rep.abelian_witness.has_value());

    // Left projection on Z/2: left and right cocycles disagree.
    auto proj = build_truss(cyclic_group(2), MagmaTable(2, {0, 0, 1, 1}), Side::Left).value();
    TwoSidedReport rp = verify_two_sided(proj);
    CHECK(rp.abelian);
    CHECK_FALSE(rp.cocycles_match);
    CHECK(rp.cocycle_witness == 1);

    // A left truss with matching cocycles that still fails the right law
    // (found by the enumeration oracle on Z/3).
    auto z3 = cyclic_group(3);
    auto oneside = build_truss(z3, MagmaTable(3, {0, 0, 0, 0, 0, 0, 0, 1, 2}), Side::Left).value();
    TwoSidedReport ro = verify_two_sided(oneside);
    CHECK(ro.abelian);
    CHECK(ro.cocycles_match);
    CHECK(ro.left_law);
    CHECK_FALSE(ro.right_law);
    REQUIRE(ro.law_witness.has_value());
    CHECK(ro.law_witness->law == "right_truss_law");
}

TEST_CASE("ring_from_truss on the named examples") {
    // sigma = 0: the ring is the original multiplication.
    auto rt = ring_from_truss(mult_truss(4)).value();
    CHECK(rt.mul == mult_truss(4).circ);
    CHECK(check_ring_axioms(rt).ok);

    // sigma = id (trivial brace): a*b = a o b - a - b = 0, the zero ring.
    auto zr = ring_from_truss(trivial_brace(2)).value();
    CHECK(zr.mul == MagmaTable(2, {0, 0, 0, 0}));

    // The affine circle a+b+ab turns back into plain multiplication.
    auto ar = ring_from_truss(affine_truss(4)).value();
    CHECK(ar.mul == MagmaTable::from_fn(4, [](Elem a, Elem b) { return (a * b) % 4; }));

    auto rejected = ring_from_truss(
        build_truss(cyclic_group(2), MagmaTable(2, {0, 0, 1, 1}), Side::Left).value());
    REQUIRE_FALSE(rejected.ok());
    CHECK(rejected.error().kind == "not_two_sided");
}

TEST_CASE("ring sign rule and cocycle identities across the two-sided corpus") {
    for (const char* name : {"z2", "z3"}) {
        auto res = enumerate_naive(group_by_name(name).value(), 1).value();
        for (const auto& t : res.trusses) {
            TwoSidedReport rep = verify_two_sided(t);
            if (!rep.two_sided()) continue;
            const GroupTable& g = t.group;
            // sigma(a) = a o 0 = 0 o a.
            for (Elem a = 0; a < t.size(); ++a) CHECK(t.cir(a, g.one()) == t.cir(g.one(), a));
            // sigma^n(a+b) = sigma^n(a) + sigma^n(b) - sigma^n(0) for n within the orbit.
            std::vector<Elem> power = t.sigma;
            for (int n = 1; n <= t.size() + 1; ++n) {
                for (Elem a = 0; a < t.size(); ++a)
                    for (Elem b = 0; b < t.size(); ++b) {
                        Elem lhs = power[static_cast<std::size_t>(g.mul(a, b))];
                        Elem rhs = g.mul(g.mul(power[static_cast<std::size_t>(a)],
                                                power[static_cast<std::size_t>(b)]),
                                         g.inv(power[static_cast<std::size_t>(g.one())]));
                        CHECK(lhs == rhs);
                    }
                std::vector<Elem> next(power.size());
                for (Elem a = 0; a < t.size(); ++a)
                    next[static_cast<std::size_t>(a)] = t.cocycle(power[static_cast<std::size_t>(a)]);
                power = std::move(next);
            }
            auto ring = ring_from_truss(t).value();
            CHECK(check_ring_axioms(ring).ok);  // includes (-a)b = a(-b) = -(ab)
        }
    }
}

TEST_CASE("shifted_ring on the named examples") {
    auto t4 = trivial_brace(4);

    // e = 0 reduces to the plain construction.
    auto plain = ring_from_truss(t4).value();
    auto at0 = shifted_ring(t4, 0).value();
    CHECK(at0 == plain);

    // e = 2: addition a+b-2 with zero element 2; the product collapses to it.
    auto at2 = shifted_ring(t4, 2).value();
    CHECK(at2.add.op == MagmaTable(4, {2, 3, 0, 1, 3, 0, 1, 2, 0, 1, 2, 3, 1, 2, 3, 0}));
    CHECK(at2.zero() == 2);
    CHECK(at2.mul == MagmaTable(4, std::vector<Elem>(16, 2)));
    CHECK(check_ring_axioms(at2).ok);

    // Ring-type truss at e = 0 returns the original ring.
    auto m4 = mult_truss(4);
    CHECK(shifted_ring(m4, 0).value().mul == m4.circ);

    CHECK_FALSE(shifted_ring(t4, 9).ok());
    auto not2s = shifted_ring(
        build_truss(cyclic_group(2), MagmaTable(2, {0, 0, 1, 1}), Side::Left).value(), 0);
    REQUIRE_FALSE(not2s.ok());
    CHECK(not2s.error().kind == "not_two_sided");
}

TEST_CASE("shifted_ring rejects non-central shift elements") {
    // The klein4 corpus contains two-sided trusses with non-central elements.
    auto res = enumerate_structured(klein_four(), 2).value();
    int rejections = 0, accepted = 0;
    for (const auto& t : res.trusses) {
        if (!verify_two_sided(t).two_sided()) continue;
        for (Elem e = 0; e < t.size(); ++e) {
            bool central = true;
            for (Elem a = 0; a < t.size() && central; ++a) central = t.cir(a, e) == t.cir(e, a);
            auto out = shifted_ring(t, e);
            if (central) {
                REQUIRE(out.ok());
                ++accepted;
            } else {
                REQUIRE_FALSE(out.ok());
                CHECK(out.error().kind == "not_central");
                ++rejections;
            }
        }
    }
    CHECK(accepted > 0);
    CHECK(rejections > 0);
}

TEST_CASE("truss morphisms are ring homomorphisms") {
    auto dom = affine_truss(4);
    auto cod = affine_truss(2);
    auto f = build_morphism(dom, cod, {0, 1, 0, 1}).value();
    auto rdom = ring_from_truss(dom).value();
    auto rcod = ring_from_truss(cod).value();
    CHECK(morphism_preserves_ring(f, rdom, rcod));
}
