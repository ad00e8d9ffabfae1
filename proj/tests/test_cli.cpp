#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string binary_path() {
    const char* p = std::getenv("TRITAIL_BIN");
    REQUIRE_MESSAGE(p != nullptr, "TRITAIL_BIN must point at the tritail binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = binary_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

json strip_wall_time(json j) {
    j.erase("wall_time_s");
    return j;
}

std::string fig1_file() {
    std::string path = "/tmp/tritail_test_fig1.edges";
    std::ofstream out(path);
    out << "n=8\n0 1\n0 2\n1 2\n1 6\n1 7\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n6 7\n";
    return path;
}

}  // namespace

TEST_CASE("h and f commands") {
    RunResult r = run_cli("h --y 5");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["y"] == 5.0);
    CHECK(j["h"] == 1.0);

    json f1 = json::parse(run_cli("f --x 1").output);
    CHECK(f1["f"].get<double>() == doctest::Approx(22.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("triangles on the example file") {
    json j = json::parse(run_cli("triangles --in " + fig1_file()).output);
    CHECK(j["n"] == 8);
    CHECK(j["edges"] == 12);
    CHECK(j["triangles"] == 6);
}

TEST_CASE("decompose reports the single component") {
    json j = json::parse(run_cli("decompose --in " + fig1_file() + " --spanning").output);
    REQUIRE(j["components"].size() == 1);
    const json& c = j["components"][0];
    CHECK(c["vertices"] == 8);
    CHECK(c["edges"] == 12);
    CHECK(c["triangles"] == 6);
    CHECK(c["excess"] == 4);
    CHECK(c["min_spanning_triangles"] == 5);
    CHECK(j["profile"] == json::array({6}));
}

TEST_CASE("pack finds the maximum") {
    json j = json::parse(run_cli("pack --in " + fig1_file()).output);
    CHECK(j["size"] == 2);
    CHECK(j["exact"] == true);
}

TEST_CASE("exhaustive tail is the exact dyadic value") {
    json j = json::parse(run_cli("tail --n 4 --d 2 --k 1 --exhaustive").output);
    CHECK(j["estimate"].get<double>() == 23.0 / 64.0);
    CHECK(j["std_err"] == 0.0);
    CHECK(j["exact"] == true);
}

TEST_CASE("seeded commands are byte-identical apart from timing") {
    std::string cmd = "tail --n 100 --d 2 --k 1 --trials 2000 --seed 7 --workers 3";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(strip_wall_time(json::parse(a.output)) == strip_wall_time(json::parse(b.output)));

    RunResult s1 = run_cli("sample --n 50 --d 2 --seed 11");
    RunResult s2 = run_cli("sample --n 50 --d 2 --seed 11");
    CHECK(s1.output == s2.output);  // no timing field in sample output
}

TEST_CASE("worker flag does not change estimates") {
    json w1 = json::parse(run_cli("tail --n 200 --d 2 --k 1 --trials 3000 --seed 5 --workers 1").output);
    json w4 = json::parse(run_cli("tail --n 200 --d 2 --k 1 --trials 3000 --seed 5 --workers 4").output);
    CHECK(w1["estimate"] == w4["estimate"]);
    CHECK(w1["successes"] == w4["successes"]);
}

TEST_CASE("a fresh seed is drawn and echoed when absent") {
    json j = json::parse(run_cli("tail --n 30 --d 2 --k 0 --trials 10").output);
    REQUIRE(j["seed"].is_number());
    std::uint64_t seed = j["seed"].get<std::uint64_t>();
    json again = json::parse(
        run_cli("tail --n 30 --d 2 --k 0 --trials 10 --seed " + std::to_string(seed)).output);
    CHECK(again["estimate"] == j["estimate"]);
    CHECK(again["successes"] == j["successes"]);
}

TEST_CASE("phase emits a csv grid") {
    RunResult r = run_cli("phase --n-min 1000 --n-max 100000 --steps 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("n,k_star,k_subcritical_below,k_supercritical_above\n", 0) == 0);
    int lines = 0;
    for (char ch : r.output)
        if (ch == '\n') ++lines;
    CHECK(lines == 4);  // header + 3 rows
}

TEST_CASE("extract and classify run end to end") {
    json core = json::parse(run_cli("extract dense-core --in " + fig1_file() +
                                    " --ell 6 --xi 0.1")
                                .output);
    CHECK(core["precondition_ok"] == true);

    json nc = json::parse(
        run_cli("extract near-clique --in " + fig1_file() + " --k 6 --eps 0.1").output);
    CHECK(nc.contains("v_prime"));

    json cls =
        json::parse(run_cli("classify --in " + fig1_file() + " --k 2 --eps 0.1").output);
    CHECK(cls["d_event"] == true);  // two disjoint triangles exist
}

TEST_CASE("exit codes") {
    CHECK(run_cli("tail --n 4 --d 2").exit_code == 1);          // missing --k
    CHECK(run_cli("nonsense").exit_code == 1);                  // unknown subcommand
    CHECK(run_cli("tail --n 4 --d 9 --k 1 --trials 5").exit_code == 1);  // d >= n

    // infeasible conditioning: exit 2
    RunResult feas =
        run_cli("conditional --n 20 --d 0.2 --k 40 --eps 0.3 --samples 4 --seed 1 --max-draws 400");
    CHECK(feas.exit_code == 2);
    json err = json::parse(feas.output);
    CHECK(err["error"]["type"] == "feasibility");

    // injected verify fault: exit 3 with a serialized counterexample
    RunResult broken =
        run_cli("verify --exhaustive-max-n 4 --samples 0 --skip-analytic --self-test-break");
    CHECK(broken.exit_code == 3);
    json rep = json::parse(broken.output);
    CHECK(rep["ok"] == false);
    REQUIRE(rep["violations"].size() > 0);
    CHECK(rep["violations"][0]["edge_list"].get<std::string>().size() > 0);
}

TEST_CASE("report --out writes the file") {
    std::string path = "/tmp/tritail_test_report.json";
    std::remove(path.c_str());
    RunResult r = run_cli("h --y 11 --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    json j = json::parse(in);
    CHECK(j["h"].get<double>() == doctest::Approx(1.8936).epsilon(1e-3));
}

TEST_CASE("graph --out writes the edge list") {
    std::string path = "/tmp/tritail_test_planted.edges";
    std::remove(path.c_str());
    json j = json::parse(run_cli("plant clique --n 30 --d 1 --m 5 --seed 2 --out " + path).output);
    CHECK(j["out"] == path);
    json t = json::parse(run_cli("triangles --in " + path).output);
    CHECK(t["triangles"].get<std::uint64_t>() >= 10);  // C(5,3) forced
    CHECK(t["n"] == 30);
}

TEST_CASE("exhaustive dist exposes the exact pmf") {
    json j = json::parse(run_cli("dist --n 4 --d 2 --exhaustive").output);
    CHECK(j["exact"] == true);
    CHECK(j["pmf"]["0"].get<double>() == 41.0 / 64.0);
}

TEST_CASE("verify clean run exits zero") {
    RunResult r = run_cli("verify --exhaustive-max-n 4 --samples 20 --n 40 --skip-analytic");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.output);
    CHECK(rep["ok"] == true);
    CHECK(rep["violations"].empty());
}
