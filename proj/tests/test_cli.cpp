#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopfcat/catalog.hpp"
#include "hopfcat/io.hpp"

using namespace hopfcat;
namespace fs = std::filesystem;

namespace {

const std::string kBin = HOPFCAT_BIN;
const fs::path kData = HOPFCAT_DATA_DIR;

struct RunResult {
    int code;
    std::string output;
};

RunResult run(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "hopfcat_cli_stdout.txt";
    const std::string cmd = kBin + " " + args + " > " + out.string() + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    fs::remove(out);
    return {WEXITSTATUS(status), ss.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("hopfcat_cli_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path file(const std::string& name, const std::string& contents) const {
        const fs::path p = path / name;
        std::ofstream(p, std::ios::binary) << contents;
        return p;
    }
};

std::string catalog_file(const std::string& name) { return (kData / "catalog" / name).string(); }
std::string example_file(const std::string& name) { return (kData / "examples" / name).string(); }

}  // namespace

TEST_CASE("verify accepts the bundled catalog objects") {
    const RunResult r = run("verify " + catalog_file("s3.json"));
    CHECK(r.code == 0);
    const Json report = Json::parse(r.output);
    CHECK(report["status"] == "pass");
    CHECK(report["result"]["all"] == true);
    CHECK(report["result"]["dim"] == 6);
}

TEST_CASE("verify reports are byte-identical across runs") {
    const RunResult a = run("verify " + catalog_file("q8.json"));
    const RunResult b = run("verify " + catalog_file("q8.json"));
    CHECK(a.code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("verify fails with exit 1 on a non-Hopf input") {
    TempDir dir;
    Json j = io::hopf_to_json(*group_algebra(symmetric3()));
    j["antipode"] = io::matrix_to_json(Matrix::identity(6));
    const RunResult r = run("verify " + dir.file("broken.json", j.dump()).string());
    CHECK(r.code == 1);
    const Json report = Json::parse(r.output);
    CHECK(report["status"] == "fail");
    CHECK(report["result"]["axioms"]["antipode_left"] == false);
    CHECK(report["result"]["axioms"]["associative"] == true);
}

TEST_CASE("malformed input exits with code 2") {
    TempDir dir;
    CHECK(run("verify " + dir.file("bad.json", "{ not json").string()).code == 2);
    CHECK(run("verify " + dir.file("empty.json", "{}").string()).code == 2);
    CHECK(run("verify /nonexistent/file.json").code == 2);
}

TEST_CASE("mathematical precondition failures exit with code 3") {
    TempDir dir;
    Json m;
    m["dom"] = catalog_file("s3.json");
    m["cod"] = catalog_file("c2.json");
    Json rows = Json::array();
    for (int r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (int i = 0; i < 6; ++i) row.push_back("1");  // not an algebra map
        rows.push_back(row);
    }
    m["matrix"] = rows;
    const RunResult r = run("kernel " + dir.file("bad_morphism.json", m.dump()).string());
    CHECK(r.code == 3);
}

TEST_CASE("kernel of the bundled sign morphism has dimension three") {
    const RunResult r = run("kernel " + example_file("sign.json"));
    REQUIRE(r.code == 0);
    const Json report = Json::parse(r.output);
    CHECK(report["result"]["dim"] == 3);
    CHECK(report["result"]["object"]["dim"] == 3);
}

TEST_CASE("cokernel of the bundled alternating inclusion has dimension two") {
    const RunResult r = run("cokernel " + example_file("a3_inclusion.json"));
    REQUIRE(r.code == 0);
    const Json report = Json::parse(r.output);
    CHECK(report["result"]["dim"] == 2);
    // emitted objects re-load and pass verify
    TempDir dir;
    const fs::path obj = dir.file("cokernel.json", report["result"]["object"].dump());
    CHECK(run("verify " + obj.string()).code == 0);
}

TEST_CASE("product of bundled c2 and c3 has dimension six") {
    const RunResult r =
        run("product " + catalog_file("c2.json") + " " + catalog_file("c3.json"));
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.output)["result"]["dim"] == 6);
}

TEST_CASE("pullback of the bundled sign cospan has dimension eighteen") {
    const RunResult r =
        run("pullback " + example_file("sign.json") + " " + example_file("sign.json"));
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.output)["result"]["dim"] == 18);
}

TEST_CASE("equalizer and coequalizer of the bundled sign against itself") {
    const RunResult eq =
        run("equalizer " + example_file("sign.json") + " " + example_file("sign.json"));
    REQUIRE(eq.code == 0);
    CHECK(Json::parse(eq.output)["result"]["dim"] == 6);
    const RunResult ce =
        run("coequalizer " + example_file("sign.json") + " " + example_file("sign.json"));
    REQUIRE(ce.code == 0);
    CHECK(Json::parse(ce.output)["result"]["dim"] == 2);
}

TEST_CASE("smash of the bundled inversion action is six-dimensional") {
    const RunResult r = run("smash " + example_file("inversion_c3.json"));
    REQUIRE(r.code == 0);
    const Json report = Json::parse(r.output);
    CHECK(report["result"]["dim"] == 6);
    // the emitted object re-loads and passes verify
    TempDir dir;
    const fs::path obj = dir.file("smash.json", report["result"]["object"].dump());
    CHECK(run("verify " + obj.string()).code == 0);
}

TEST_CASE("newman roundtrip verdict on the bundled alternating subspace") {
    const RunResult r =
        run("newman " + catalog_file("s3.json") + " " + example_file("a3_subspace.json"));
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.output)["result"]["roundtrip"] == true);
}

TEST_CASE("abelian verdicts cross-check commutativity") {
    const RunResult s3 = run("abelian " + catalog_file("s3.json"));
    REQUIRE(s3.code == 0);
    CHECK(Json::parse(s3.output)["result"]["abelian"] == false);
    const RunResult c6 = run("abelian " + catalog_file("c6.json"));
    REQUIRE(c6.code == 0);
    CHECK(Json::parse(c6.output)["result"]["abelian"] == true);
}

TEST_CASE("axioms on a reduced catalog directory is deterministic and green") {
    TempDir dir;
    TempDir reports;
    for (const char* name : {"c1", "c2", "c4"})
        dir.file(std::string(name) + ".json",
                 io::group_table_to_json(cyclic_group(name[1] - '0')).dump());
    const fs::path out1 = reports.path / "report1.json";
    const fs::path out2 = reports.path / "report2.json";
    const RunResult r1 = run("axioms " + dir.path.string() + " --out " + out1.string());
    const RunResult r2 = run("axioms " + dir.path.string() + " --out " + out2.string());
    REQUIRE(r1.code == 0);
    REQUIRE(r2.code == 0);
    CHECK(io::read_file(out1) == io::read_file(out2));
    const Json report = Json::parse(io::read_file(out1));
    CHECK(report["status"] == "pass");
    CHECK(report["result"]["checks"]["newman_roundtrips"]["failures"].empty());
}

TEST_CASE("the --pretty flag only changes whitespace") {
    const RunResult compact = run("verify " + catalog_file("c2.json"));
    const RunResult pretty = run("verify " + catalog_file("c2.json") + " --pretty");
    REQUIRE(compact.code == 0);
    REQUIRE(pretty.code == 0);
    CHECK(compact.output != pretty.output);
    CHECK(Json::parse(compact.output) == Json::parse(pretty.output));
}

TEST_CASE("HOPFCAT_CATALOG overrides the builtin catalog") {
    TempDir dir;
    dir.file("c2.json", io::group_table_to_json(cyclic_group(2)).dump());
    const fs::path out = dir.path / "report.json";
    const std::string cmd = "HOPFCAT_CATALOG=" + dir.path.string() + " " + kBin +
                            " axioms --out " + out.string() + " > /dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    const Json report = Json::parse(io::read_file(out));
    // c1 is synthesized as the zero object, c2 comes from the directory
    const auto& names = report["result"]["catalog"]["objects"];
    REQUIRE(names.size() == 2);
    CHECK(names[0] == "c1");
    CHECK(names[1] == "c2");
}
