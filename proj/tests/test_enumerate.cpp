#include <algorithm>
#include <cstdlib>
#include <set>

#include "doctest.h"
#include "trusslab/enumerate.hpp"
#include "trusslab/io.hpp"
#include "trusslab/ybe.hpp"

using namespace trusslab;

namespace {

// Independent oracle: iterate every table over {0..n-1}, check associativity
// and the left distributive law directly from first principles.
std::set<std::vector<Elem>> oracle_truss_tables(const GroupTable& g) {
    const int n = g.size();
    const int cells = n * n;
    long total = 1;
    for (int i = 0; i < cells; ++i) total *= n;
    std::set<std::vector<Elem>> out;
    std::vector<Elem> t(static_cast<std::size_t>(cells));
    for (long idx = 0; idx < total; ++idx) {
        long v = idx;
        for (int k = cells - 1; k >= 0; --k) {
            t[static_cast<std::size_t>(k)] = static_cast<Elem>(v % n);
            v /= n;
        }
        auto at = [&](Elem a, Elem b) { return t[static_cast<std::size_t>(a) * n + b]; };
        bool good = true;
        for (Elem a = 0; a < n && good; ++a)
            for (Elem b = 0; b < n && good; ++b)
                for (Elem c = 0; c < n && good; ++c)
                    good = at(at(a, b), c) == at(a, at(b, c));
        for (Elem a = 0; a < n && good; ++a) {
            Elem sig = at(a, g.one());
            for (Elem b = 0; b < n && good; ++b)
                for (Elem c = 0; c < n && good; ++c)
                    good = at(a, g.mul(b, c)) == g.mul(g.mul(at(a, b), g.inv(sig)), at(a, c));
        }
        if (good) out.insert(t);
    }
    return out;
}

std::set<std::vector<Elem>> result_tables(const EnumerationResult& r) {
    std::set<std::vector<Elem>> out;
    for (const auto& t : r.trusses) out.insert(t.circ.entries());
    return out;
}

}  // namespace

TEST_CASE("enumerate_naive matches the first-principles oracle") {
    auto z1 = enumerate_naive(cyclic_group(1), 1).value();
    CHECK(z1.total_found == 1);

    auto g2 = cyclic_group(2);
    auto z2 = enumerate_naive(g2, 1).value();
    CHECK(result_tables(z2) == oracle_truss_tables(g2));
    CHECK(z2.total_found == 8);

    auto g3 = cyclic_group(3);
    auto z3 = enumerate_naive(g3, 2).value();
    CHECK(result_tables(z3) == oracle_truss_tables(g3));
    CHECK(z3.total_found == 32);

    auto refused = enumerate_naive(cyclic_group(4), 1);
    REQUIRE_FALSE(refused.ok());
    CHECK(refused.error().kind == "bound_exceeded");
}

TEST_CASE("enumerate_structured equals enumerate_naive where both run") {
    for (int n : {1, 2, 3}) {
        auto g = cyclic_group(n);
        auto naive = enumerate_naive(g, 1).value();
        auto structured = enumerate_structured(g, 1).value();
        CHECK(result_tables(naive) == result_tables(structured));
        CHECK_FALSE(structured.duplicates_detected);
    }
}

TEST_CASE("structured results self-verify and match the pinned fixtures") {
    const char* env = std::getenv("TRUSSLAB_FIXTURES");
#ifdef TRUSSLAB_DEFAULT_FIXTURES
    const std::string dir = env != nullptr ? env : TRUSSLAB_DEFAULT_FIXTURES;
#else
    REQUIRE_MESSAGE(env != nullptr, "run via ctest, which sets TRUSSLAB_FIXTURES");
    const std::string dir = env;
#endif
    auto fixtures = read_json_file(dir + "/enumeration_counts.json");
    REQUIRE(fixtures.ok());
    const Json& groups = fixtures.value()["groups"];

    for (const char* name : {"z2", "z3", "z4", "z5", "z6", "klein4", "s3"}) {
        auto g = group_by_name(name).value();
        auto res = enumerate_structured(g, 4).value();
        CAPTURE(name);
        CHECK_FALSE(res.duplicates_detected);
        REQUIRE(groups.contains(name));
        CHECK(groups[name]["structured_total"].get<long>() == res.total_found);

        res = classify(std::move(res), IsoNotion::GroupSemigroup);
        res = classify(std::move(res), IsoNotion::HeapSemigroup);
        CHECK(groups[name]["classes_group_semigroup"].get<int>() == res.group_semigroup->class_count);
        CHECK(groups[name]["classes_heap_semigroup"].get<int>() == res.heap_semigroup->class_count);
        // The heap notion is coarser or equal.
        CHECK(res.heap_semigroup->class_count <= res.group_semigroup->class_count);
    }
}

TEST_CASE("classification representatives are lex-least and classes are sane") {
    auto res = enumerate_naive(cyclic_group(3), 1).value();
    res = classify(std::move(res), IsoNotion::GroupSemigroup);
    const Classification& cls = *res.group_semigroup;
    CHECK(cls.class_count == 19);
    for (int c = 0; c < cls.class_count; ++c) {
        int rep = cls.representatives[static_cast<std::size_t>(c)];
        REQUIRE(rep >= 0);
        CHECK(cls.class_of[static_cast<std::size_t>(rep)] == c);
        for (std::size_t i = 0; i < res.trusses.size(); ++i)
            if (cls.class_of[i] == c)
                CHECK_FALSE(res.trusses[i].circ < res.trusses[static_cast<std::size_t>(rep)].circ);
    }
}

TEST_CASE("a truss and its extracted brace are heap-isomorphic but not group-isomorphic") {
    auto res = enumerate_structured(cyclic_group(4), 2).value();
    res = classify(std::move(res), IsoNotion::GroupSemigroup);
    res = classify(std::move(res), IsoNotion::HeapSemigroup);

    // a o b = a+b+2 and its extracted brace a+b both live in the enumeration.
    MagmaTable shifted = MagmaTable::from_fn(4, [](Elem a, Elem b) { return (a + b + 2) % 4; });
    MagmaTable plain = MagmaTable::from_fn(4, [](Elem a, Elem b) { return (a + b) % 4; });
    int i_shift = -1, i_plain = -1;
    for (std::size_t i = 0; i < res.trusses.size(); ++i) {
        if (res.trusses[i].circ == shifted) i_shift = static_cast<int>(i);
        if (res.trusses[i].circ == plain) i_plain = static_cast<int>(i);
    }
    REQUIRE(i_shift >= 0);
    REQUIRE(i_plain >= 0);
    CHECK(res.group_semigroup->class_of[static_cast<std::size_t>(i_shift)] !=
          res.group_semigroup->class_of[static_cast<std::size_t>(i_plain)]);
    CHECK(res.heap_semigroup->class_of[static_cast<std::size_t>(i_shift)] ==
          res.heap_semigroup->class_of[static_cast<std::size_t>(i_plain)]);
}

TEST_CASE("the enumerated set is closed under the family construction") {
    for (const char* name : {"z2", "z3", "z4"}) {
        auto g = group_by_name(name).value();
        auto res = enumerate_structured(g, 2).value();
        auto tables = result_tables(res);
        for (const auto& t : res.trusses)
            for (Elem e = 0; e < t.size(); ++e) {
                // Port the translated truss back along f(a) = a & e; the
                // resulting circle table must be in the enumeration.
                MagmaTable back = MagmaTable::from_fn(t.size(), [&](Elem a, Elem b) {
                    return g.mul(t.cir(g.mul(a, e), g.mul(b, e)), g.inv(e));
                });
                CAPTURE(name);
                CHECK(tables.count(back.entries()) == 1);
            }
    }
}

TEST_CASE("every enumerated truss with a circle group yields a braid solution") {
    auto res = enumerate_structured(cyclic_group(3), 2).value();
    int found = 0;
    for (const auto& t : res.trusses) {
        if (!validate_group(t.circ).ok()) continue;
        ++found;
        for (Elem e = 0; e < t.size(); ++e) CHECK(solution_from_truss(t, e).ok());
    }
    CHECK(found == 3);
}

TEST_CASE("parallel enumeration is byte-deterministic") {
    auto g = klein_four();
    auto serial = enumerate_structured(g, 1).value();
    auto parallel = enumerate_structured(g, 8).value();
    REQUIRE(serial.trusses.size() == parallel.trusses.size());
    for (std::size_t i = 0; i < serial.trusses.size(); ++i)
        CHECK(serial.trusses[i] == parallel.trusses[i]);
}

TEST_CASE("bound handling") {
    auto refused = enumerate_structured(cyclic_group(4), 1, 3);
    REQUIRE_FALSE(refused.ok());
    CHECK(refused.error().kind == "bound_exceeded");
    CHECK(enumerate_structured(cyclic_group(4), 1, 4).ok());
}

TEST_CASE("group_endomorphisms counts for the classic small groups") {
    CHECK(group_endomorphisms(cyclic_group(4)).size() == 4);
    CHECK(group_endomorphisms(klein_four()).size() == 16);
    CHECK(group_endomorphisms(symmetric3()).size() == 10);
}
