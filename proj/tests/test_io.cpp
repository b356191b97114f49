#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "trusslab/io.hpp"

using namespace trusslab;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("trusslab_io_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const {
        std::string p = (path / name).string();
        std::ofstream out(p);
        out << content;
        return p;
    }
};

}  // namespace

TEST_CASE("truss JSON round trip") {
    auto g = cyclic_group(4);
    auto t = build_truss(g, MagmaTable::from_fn(4, [](Elem a, Elem b) { return (a + b + 2) % 4; }),
                         Side::Left)
                 .value();
    Json j = truss_to_json(t);
    auto back = truss_from_json(j);
    REQUIRE(back.ok());
    CHECK(back.value() == t);
    // Serialization is key-stable byte for byte.
    CHECK(dump_json(j) == dump_json(truss_to_json(back.value())));
}

TEST_CASE("truss parsing validates structure and cocycle") {
    Json good{{"size", 2}, {"diamond", {{0, 1}, {1, 0}}}, {"circ", {{0, 1}, {1, 0}}}};
    CHECK(truss_from_json(good).ok());

    Json with_sigma = good;
    with_sigma["sigma"] = {0, 1};
    CHECK(truss_from_json(with_sigma).ok());
    with_sigma["sigma"] = {1, 0};
    auto rej = truss_from_json(with_sigma);
    REQUIRE_FALSE(rej.ok());
    CHECK(rej.error().kind == "sigma_mismatch");

    Json bad_side = good;
    bad_side["side"] = "diagonal";
    CHECK_FALSE(truss_from_json(bad_side).ok());

    Json two_sided = good;
    two_sided["side"] = "two-sided";
    REQUIRE(truss_from_json(two_sided).ok());
    CHECK(truss_from_json(two_sided).value().side == Side::TwoSided);

    Json not_group{{"diamond", {{0, 0}, {1, 1}}}, {"circ", {{0, 0}, {1, 1}}}};
    auto ng = truss_from_json(not_group);
    REQUIRE_FALSE(ng.ok());
    CHECK(ng.error().kind == "no_identity");

    Json ragged{{"diamond", {{0, 1}, {1}}}, {"circ", {{0, 1}, {1, 0}}}};
    CHECK_FALSE(truss_from_json(ragged).ok());

    Json out_of_range{{"diamond", {{0, 7}, {1, 0}}}, {"circ", {{0, 1}, {1, 0}}}};
    auto oor = truss_from_json(out_of_range);
    REQUIRE_FALSE(oor.ok());
    CHECK(oor.error().kind == "entry_out_of_range");
}

TEST_CASE("magma JSON guards") {
    CHECK(magma_from_json(Json{{"size", 2}, {"table", {{0, 1}, {1, 0}}}}).ok());
    CHECK_FALSE(magma_from_json(Json{{"size", 3}, {"table", {{0, 1}, {1, 0}}}}).ok());
    CHECK_FALSE(magma_from_json(Json{{"table", "zap"}}).ok());
    CHECK_FALSE(magma_from_json(Json::array()).ok());
}

TEST_CASE("ybe JSON round trip") {
    YBMap f = flip_map(3);
    auto back = ybe_from_json(ybe_to_json(f));
    REQUIRE(back.ok());
    CHECK(back.value() == f);
    CHECK_FALSE(ybe_from_json(Json{{"size", 2}, {"r", {{0, 0}}}}).ok());
}

TEST_CASE("morphism files resolve relative paths") {
    TempDir dir;
    dir.file("dom.json", dump_json(truss_to_json(
                             build_truss(cyclic_group(4), cyclic_group(4).op, Side::Left).value())));
    dir.file("cod.json", dump_json(truss_to_json(
                             build_truss(cyclic_group(2), cyclic_group(2).op, Side::Left).value())));
    std::string mpath = dir.file("map.json",
                                 "{\"domain\": \"dom.json\", \"codomain\": \"cod.json\", \"map\": [0,1,0,1]}");
    auto mf = load_morphism_file(mpath);
    REQUIRE(mf.ok());
    CHECK(mf.value().map == std::vector<Elem>{0, 1, 0, 1});
    CHECK(mf.value().domain.size() == 4);
    CHECK(mf.value().codomain.size() == 2);

    std::string missing = dir.file("bad.json", "{\"domain\": \"nope.json\", \"codomain\": \"cod.json\", \"map\": []}");
    CHECK_FALSE(load_morphism_file(missing).ok());
}

TEST_CASE("read_json_file failure modes") {
    CHECK_FALSE(read_json_file("/nonexistent/path.json").ok());
    TempDir dir;
    std::string garbled = dir.file("x.json", "{not json");
    auto out = read_json_file(garbled);
    REQUIRE_FALSE(out.ok());
    CHECK(out.error().kind == "parse_error");
}
