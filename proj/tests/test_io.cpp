#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hopfcat/catalog.hpp"
#include "hopfcat/io.hpp"

using namespace hopfcat;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("hopfcat_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path file(const std::string& name, const std::string& contents) const {
        const fs::path p = path / name;
        std::ofstream(p, std::ios::binary) << contents;
        return p;
    }
};

}  // namespace

TEST_CASE("Hopf algebras round-trip through JSON") {
    const auto s3 = group_algebra(symmetric3());
    const Json j = io::hopf_to_json(*s3);
    const HopfPtr back = io::hopf_from_json(j, "roundtrip");
    CHECK(back->structure_equals(*s3));
    CHECK(back->basis_names() == s3->basis_names());
}

TEST_CASE("group tables round-trip through JSON") {
    const auto q8 = quaternion_group();
    const Json j = io::group_table_to_json(q8);
    const GroupTable back = io::group_table_from_json(j, "roundtrip");
    CHECK(back.order() == 8);
    CHECK(back.name() == "q8");
    CHECK(back.table() == q8.table());
}

TEST_CASE("schema errors name the offending field") {
    Json j = io::hopf_to_json(*group_algebra(cyclic_group(2)));
    j.erase("counit");
    try {
        io::hopf_from_json(j, "broken");
        FAIL("expected a SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("counit") != std::string::npos);
    }
    Json g = io::group_table_to_json(cyclic_group(2));
    g["table"][0][1] = 7;
    CHECK_THROWS_AS(io::group_table_from_json(g, "broken"), SchemaError);
    CHECK_THROWS_AS(io::parse_json("{not json", "broken"), SchemaError);
}

TEST_CASE("scalars must be canonical strings or integers") {
    Json j = io::hopf_to_json(*group_algebra(cyclic_group(2)));
    j["mul"][0][3] = "1/0";
    CHECK_THROWS_AS(io::hopf_from_json(j, "broken"), SchemaError);
    j["mul"][0][3] = 1;  // plain integers are accepted
    CHECK_NOTHROW(io::hopf_from_json(j, "ok"));
    j["mul"][0][3] = 1.5;
    CHECK_THROWS_AS(io::hopf_from_json(j, "broken"), SchemaError);
}

TEST_CASE("morphism files resolve dom/cod paths relative to their directory") {
    TempDir dir;
    dir.file("s3.json", io::group_table_to_json(symmetric3()).dump());
    dir.file("c2.json", io::group_table_to_json(cyclic_group(2)).dump());
    Json m;
    m["dom"] = "s3.json";
    m["cod"] = "c2.json";
    Json rows = Json::array();
    for (int r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (int i = 0; i < 6; ++i) row.push_back(((i < 3) == (r == 0)) ? "1" : "0");
        rows.push_back(row);
    }
    m["matrix"] = rows;
    const Morphism sign = io::load_morphism(dir.file("sign.json", m.dump()));
    CHECK(sign.dom()->dim() == 6);
    CHECK(sign.cod()->dim() == 2);
    m["matrix"][0][0] = "0";  // no longer unit-preserving
    CHECK_THROWS_AS(io::load_morphism(dir.file("bad.json", m.dump())), PreconditionError);
}

TEST_CASE("subspace files canonicalize on load") {
    TempDir dir;
    const fs::path p = dir.file("sub.json", R"([["2","2","0"],["1","1","0"],["0","0","3"]])");
    const Subspace s = io::load_subspace(p, 3);
    CHECK(s.dim() == 2);
    CHECK(s.basis_vector(0) == Vec{1, 1, 0});
    CHECK(s.basis_vector(1) == Vec{0, 0, 1});
    CHECK_THROWS_AS(io::load_subspace(p, 4), SchemaError);
}

TEST_CASE("digests are stable") {
    CHECK(io::fnv1a_digest("abc") == "e71fa2190541574b");
    CHECK(io::fnv1a_digest("") == "cbf29ce484222325");
}

TEST_CASE("reports serialize without timing information") {
    Report r;
    r.command = "verify";
    r.inputs.emplace_back("x.json", "00ff");
    r.result = {{"all", true}};
    r.status = "pass";
    r.elapsed_ms = 1234;
    const std::string text = r.serialize(false);
    CHECK(text.find("1234") == std::string::npos);
    CHECK(text.find("elapsed") == std::string::npos);
    CHECK(r.serialize(false) == r.serialize(false));
}

TEST_CASE("a catalog loaded from exported tables matches the builtin one") {
    TempDir dir;
    for (const auto& t : Catalog::builtin_tables())
        dir.file(t.name() + ".json", io::group_table_to_json(t).dump());
    const Catalog loaded = Catalog::from_directory(dir.path);
    const Catalog builtin = Catalog::builtin();
    REQUIRE(loaded.objects().size() == builtin.objects().size());
    for (size_t i = 0; i < loaded.objects().size(); ++i) {
        CHECK(loaded.objects()[i].name == builtin.objects()[i].name);
        CHECK(loaded.objects()[i].algebra->structure_equals(*builtin.objects()[i].algebra));
    }
    CHECK(loaded.morphisms().size() == builtin.morphisms().size());
    CHECK(loaded.split_epis().size() == builtin.split_epis().size());
}

TEST_CASE("the committed data/catalog matches the builtin tables") {
    const fs::path data_dir = fs::path(HOPFCAT_DATA_DIR) / "catalog";
    REQUIRE(fs::exists(data_dir));
    for (const auto& t : Catalog::builtin_tables()) {
        const fs::path p = data_dir / (t.name() + ".json");
        INFO(p.string());
        REQUIRE(fs::exists(p));
        const GroupTable loaded = io::group_table_from_json(io::load_json_file(p), p.string());
        CHECK(loaded.table() == t.table());
        CHECK(loaded.identity() == t.identity());
    }
}
