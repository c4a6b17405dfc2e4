#include "scurve/mixedvol.hpp"
#include "scurve/parser.hpp"

#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using namespace scurve;
using nlohmann::json;

namespace {

std::string fix(const char* name) { return std::string(SCURVE_FIXTURE_DIR "/") + name; }

// Runs the CLI with stderr captured to a scratch file; returns stdout.
struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    const std::string errfile = "cli_stderr.tmp";
    std::string cmd = std::string(SCURVE_CLI_PATH) + " " + args + " 2>" + errfile;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream ef(errfile);
    std::stringstream es;
    es << ef.rdbuf();
    r.err = es.str();
    return r;
}

json parsed(const RunResult& r) {
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

json without_wall_ms(json j) {
    j["manifest"].erase("wall_ms");
    return j;
}

}  // namespace

TEST_CASE("prevariety lists pretropisms and stamps a manifest") {
    json j = parsed(run_cli("prevariety " + fix("eq5.pol") + " --json"));
    CHECK(j["nvars"] == 3);
    json want = json::array({{1, 0, 0}, {1, 0, 1}, {2, 1, 1}});
    CHECK(j["pretropisms"] == want);
    CHECK(j["manifest"]["command"] == "prevariety");
    CHECK(j["manifest"]["input_digest"].is_string());
    CHECK(!j["manifest"]["input_digest"].get<std::string>().empty());
    CHECK(j["manifest"]["version"].is_string());

    json v = parsed(run_cli("prevariety " + fix("viviani.pol") + " --json"));
    CHECK(v["pretropisms"] == json::array({{2, 1, 0}}));
}

TEST_CASE("series expands and certifies every exact branch") {
    json j = parsed(
        run_cli("series " + fix("viviani.pol") + " --ray 2,1,0 --pin x1=2 --order 9 --json"));
    CHECK(j["degenerate_start"] == false);
    CHECK(j["numeric_starts"].empty());
    REQUIRE(j["branches"].size() == 4);
    for (const json& b : j["branches"]) {
        CHECK(b["certified"] == true);
        CHECK(b["winding"] == 2);
        CHECK(b["tropism"] == json::array({2, 1, 0}));
        REQUIRE(b["coords"].size() == 3);
        // x1 stays the exact pin monomial 2t^2.
        CHECK(b["coords"][0] == json::array({{2, {2, 1}}}));
    }
    CHECK(j["manifest"]["config"]["pin"] == "x1=2");
}

TEST_CASE("series recovers an under-determined start order by order") {
    json j = parsed(
        run_cli("series " + fix("eq5.pol") + " --ray 3,1,1 --pin x2=1 --order 6 --json"));
    CHECK(j["degenerate_start"] == true);
    REQUIRE(j["branches"].size() == 1);
    const json& b = j["branches"][0];
    CHECK(b["winding"] == 3);
    CHECK(b["certified"] == true);
    REQUIRE(!b["coords"][0].empty());
    CHECK(b["coords"][0][0] == json::array({3, {-1, 2}}));
}

TEST_CASE("a ray inside a higher-dimensional cone exits with the no-solutions code") {
    RunResult r = run_cli("series " + fix("eq7n4.pol") + " --ray 1,1,1,1 --order 4 --json");
    CHECK(r.code == 4);
    CHECK(r.err.find("endgame") != std::string::npos);
}

TEST_CASE("shape violations exit with the shape code") {
    CHECK(run_cli("mixedvol " + fix("viviani.pol")).code == 3);
    CHECK(run_cli("degree " + fix("eq5.pol")).code == 3);
    CHECK(run_cli("endgame " + fix("eq5.pol")).code == 3);
    CHECK(run_cli("series " + fix("viviani.pol") + " --ray 1,1").code == 3);
    CHECK(run_cli("series " + fix("viviani.pol") + " --ray 0,1,0").code == 3);
    CHECK(run_cli("series " + fix("viviani.pol") + " --ray 2,1,0 --pin x4=1").code == 3);
    CHECK(run_cli("sample " + fix("viviani.pol") + " --ray 2,1,0 --pin x1=2 --branch 9").code == 3);
}

TEST_CASE("unreadable or unparsable input exits with the parse code") {
    CHECK(run_cli("prevariety " + fix("empty.pol")).code == 2);
    {
        std::ofstream bad("cli_bad_input.tmp");
        bad << "x1 + $;\n";
    }
    RunResult r = run_cli("prevariety cli_bad_input.tmp");
    CHECK(r.code == 2);
    CHECK(r.err.find("parse error") != std::string::npos);
    CHECK(run_cli("prevariety no_such_file.pol").code == 1);
    CHECK(run_cli("frobnicate " + fix("viviani.pol")).code != 0);
}

TEST_CASE("degree agrees with the library and mixedvol with the direct computation") {
    json d = parsed(run_cli("degree " + fix("eq4.pol") + " --json"));
    CHECK(d["bound"] == 4);
    CHECK(d["decomposition"]["total"] == 4);

    PolynomialSystem eq5 = load_system_file(fix("eq5.pol"));
    std::vector<std::vector<IVec>> supports;
    for (const Polynomial& p : eq5.polys) supports.push_back(p.support());
    json m = parsed(run_cli("mixedvol " + fix("eq5.pol") + " --json"));
    CHECK(m["mixed_volume"] == mixed_volume(supports).convert_to<int64_t>());
}

TEST_CASE("sample emits csv with a manifest comment line") {
    RunResult r = run_cli("sample " + fix("viviani.pol") +
                          " --ray 2,1,0 --pin x1=2 --count 3 --tmin 0.1 --tmax 0.3");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# {", 0) == 0);
    std::istringstream lines(r.out);
    std::string line;
    int n = 0;
    bool header = false;
    while (std::getline(lines, line)) {
        if (n == 1) header = line == "t,x1_re,x1_im,x2_re,x2_im,x3_re,x3_im";
        ++n;
    }
    CHECK(header);
    CHECK(n == 5);

    json j = parsed(run_cli("sample " + fix("viviani.pol") +
                            " --ray 2,1,0 --pin x1=2 --count 3 --tmin 0.1 --tmax 0.3 --json"));
    REQUIRE(j["points"].size() == 3);
    CHECK(j["points"][0].size() == 7);
    CHECK(j["points"][0][0] == 0.1);
    CHECK(j["points"][2][0] == 0.3);
}

TEST_CASE("endgame groups paths by their recovered tropism") {
    json j = parsed(run_cli("endgame " + fix("eq7n3.pol") + " --seed 11 --json"));
    REQUIRE(j["paths"].size() == 2);
    REQUIRE(j["groups"].size() == 1);
    CHECK(j["groups"][0]["tropism"] == json::array({2, 1, 1}));
    CHECK(j["groups"][0]["winding"] == 2);
    CHECK(j["groups"][0]["count"] == 2);
}

TEST_CASE("identical seeds reproduce byte-identical reports") {
    const std::string series_cmd =
        "series " + fix("eq5.pol") + " --ray 3,1,1 --pin x2=1 --order 6 --seed 99 --json";
    json a = without_wall_ms(parsed(run_cli(series_cmd)));
    json b = without_wall_ms(parsed(run_cli(series_cmd)));
    CHECK(a.dump() == b.dump());

    const std::string eg_cmd = "endgame " + fix("eq7n3.pol") + " --seed 7 --json";
    json e1 = without_wall_ms(parsed(run_cli(eg_cmd)));
    json e2 = without_wall_ms(parsed(run_cli(eg_cmd)));
    CHECK(e1.dump() == e2.dump());

    // A different seed may reorder paths but keeps the same group structure.
    json e3 = parsed(run_cli("endgame " + fix("eq7n3.pol") + " --seed 8 --json"));
    CHECK(e3["groups"] == e1["groups"]);
}

TEST_CASE("--out writes the payload to a file instead of stdout") {
    const std::string outfile = "cli_out.tmp";
    RunResult r = run_cli("prevariety " + fix("viviani.pol") + " --json --out " + outfile);
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(outfile);
    REQUIRE(f.good());
    json j = json::parse(f);
    CHECK(j["pretropisms"] == json::array({{2, 1, 0}}));
}
