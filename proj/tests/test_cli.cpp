#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <string>

#include "rangehit/io.hpp"
#include "support.hpp"

using Json = nlohmann::json;
using support::run;

namespace {

std::string cli() { return std::string("\"") + RANGEHIT_CLI_PATH + "\""; }

Json run_json(const std::string& args, int expect_exit) {
    const support::RunResult res = run(cli() + " " + args);
    REQUIRE(res.exit_code == expect_exit);
    return Json::parse(res.output);
}

}  // namespace

TEST_CASE("generate and solve the seven-line plane") {
    REQUIRE(run(cli() + " gen fano -o cli_fano.json").exit_code == 0);
    const Json report = run_json("solve cli_fano.json", 0);

    CHECK(report["command"] == "solve");
    CHECK(report["what"] == "all");
    CHECK(report["inputDigest"] == rangehit::digest_hex(support::read_file("cli_fano.json")));
    CHECK(report["instance"]["kind"] == "abstract");
    CHECK(report["instance"]["numVertices"] == 7);
    CHECK(report["instance"]["numEdges"] == 7);
    CHECK(report["instance"]["emptyTracesDropped"] == 0);

    const Json& r = report["results"];
    CHECK(r["nu"]["value"] == 1);
    CHECK(r["nuStar"]["objective"] == "7/3");
    CHECK(r["tauStar"]["objective"] == "7/3");
    CHECK(r["tau"]["value"] == 3);
    CHECK(r["tau"]["witness"].size() == 3);
    CHECK(r["starEqual"] == true);
    CHECK(r["chainHolds"] == true);
    CHECK(report["outcome"] == "success");
    CHECK(report["timingMs"].is_number());
}

TEST_CASE("solve --what restricts the report") {
    REQUIRE(run(cli() + " gen fano -o cli_fano.json").exit_code == 0);
    const Json report = run_json("solve cli_fano.json --what nu", 0);
    CHECK(report["results"].contains("nu"));
    CHECK(!report["results"].contains("tau"));
    CHECK(!report["results"].contains("chainHolds"));
}

TEST_CASE("generated hard instances have the advertised shape") {
    REQUIRE(run(cli() + " gen hard-r4 --n 3 -o cli_h3.json").exit_code == 0);
    const rangehit::InstanceDocument doc =
        rangehit::parse_instance(support::read_file("cli_h3.json"));
    REQUIRE(doc.kind == "geometric");
    CHECK(doc.geometric->dim == 4);
    CHECK(doc.geometric->points.size() == 3);
    CHECK(doc.geometric->ranges.size() == 3);

    const support::RunResult star = run(cli() + " gen star --n 5");
    REQUIRE(star.exit_code == 0);
    const rangehit::InstanceDocument sdoc = rangehit::parse_instance(star.output);
    REQUIRE(sdoc.kind == "abstract");
    CHECK(sdoc.abstract->num_vertices == 10);
    CHECK(sdoc.abstract->edges.size() == 5);
}

TEST_CASE("random generation is seed-deterministic") {
    const std::string args = " gen random --family disc --points 6 --ranges 3 --seed 7";
    const support::RunResult a = run(cli() + args);
    const support::RunResult b = run(cli() + args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    const support::RunResult c = run(cli() + " gen random --family disc --points 6 --ranges 3 --seed 8");
    REQUIRE(c.exit_code == 0);
    CHECK(a.output != c.output);

    const support::RunResult no_family = run(cli() + " gen random --points 6 --ranges 3 2>&1");
    CHECK(no_family.exit_code == 1);
    CHECK(no_family.output.find("error:") != std::string::npos);
}

TEST_CASE("a starved search budget exits 2 and says so") {
    REQUIRE(run(cli() + " gen hard-r4 --n 5 -o cli_h5.json").exit_code == 0);
    const support::RunResult res = run(cli() + " solve cli_h5.json --budget 1 2>&1");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("budget exhausted") != std::string::npos);
}

TEST_CASE("input errors exit 1") {
    CHECK(run(cli() + " solve cli_no_such_file.json 2>/dev/null").exit_code == 1);

    support::write_file("cli_bad.json", "{ not json");
    const support::RunResult bad = run(cli() + " solve cli_bad.json 2>&1");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("error:") != std::string::npos);

    CHECK(run(cli() + " frobnicate 2>/dev/null").exit_code == 1);
    CHECK(run(cli() + " gen hard-r4 --n 1 2>/dev/null").exit_code == 1);
    CHECK(run(cli() + " solve cli_fano.json --budget 0 2>/dev/null").exit_code == 1);
    CHECK(run(cli() + " --help >/dev/null").exit_code == 0);
}

TEST_CASE("epsnet hits every heavy edge on a disc instance") {
    REQUIRE(run(cli() + " gen fano -o cli_fano.json").exit_code == 0);
    REQUIRE(run(cli() + " gen random --family disc --points 10 --ranges 5 --seed 3 -o cli_disc.json")
                .exit_code == 0);
    const Json report = run_json("epsnet cli_disc.json --eps 1/5", 0);
    const Json& r = report["results"];
    CHECK(r["eps"] == "1/5");
    CHECK(r["threshold"] == "2");
    CHECK(r["allHeavyEdgesHit"] == true);
    CHECK(r["heavyEdges"] == r["heavyEdgesHit"]);
    CHECK(r["netSize"] == r["net"].size());

    CHECK(run(cli() + " epsnet cli_disc.json --eps 0 2>/dev/null").exit_code == 1);
    CHECK(run(cli() + " epsnet cli_fano.json --eps 1/5 2>/dev/null").exit_code == 1);
}

TEST_CASE("greedy report on the seven-line plane") {
    REQUIRE(run(cli() + " gen fano -o cli_fano.json").exit_code == 0);
    const Json report = run_json("greedy cli_fano.json", 0);
    const Json& r = report["results"];
    CHECK(r["matchingSize"] == 1);
    CHECK(r["chosen"] == Json::array({0}));
    REQUIRE(r["classes"].size() == 1);
    CHECK(r["classes"][0]["chosen"] == 0);
    CHECK(r["classes"][0]["edges"].size() == 7);
    CHECK(r["classes"][0]["exact"] == true);
    CHECK(r["hittingSet"]["value"] == 3);
    CHECK(r["partitionValid"] == true);
    CHECK(r["nu"]["value"] == 1);
    CHECK(r["boundHolds"] == true);
    CHECK(report["outcome"] == "success");
}

TEST_CASE("embedding verification, generated and from file") {
    const Json gen_mode = run_json("verify embedding --n 4", 0);
    CHECK(gen_mode["results"]["n"] == 4);
    CHECK(gen_mode["results"]["dim"] == 4);
    CHECK(gen_mode["results"]["incidenceChecks"] == 24);
    CHECK(gen_mode["results"]["edgesMatchStars"] == true);
    CHECK(gen_mode["results"]["noBoundaryIncidence"] == true);

    REQUIRE(run(cli() + " gen hard-r4 --n 3 -o cli_h3.json").exit_code == 0);
    const Json file_mode = run_json("verify embedding cli_h3.json", 0);
    CHECK(file_mode["results"]["n"] == 3);
    CHECK(file_mode["results"]["incidenceChecks"] == 9);
    CHECK(file_mode["results"]["edgesMatchStars"] == true);
}

TEST_CASE("duality sweep holds the chain and logs per-trial rows") {
    const Json report = run_json("verify duality --trials 6 --seed 404 --csv cli_dual.csv", 0);
    CHECK(report["results"]["trials"] == 6);
    CHECK(report["results"]["chainHeld"] == 6);
    const std::string csv = support::read_file("cli_dual.csv");
    CHECK(csv.rfind("trial,family,numEdges,nu,nuStar,tau,chainHolds\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("planarity sweeps verify their certificates") {
    const Json discs = run_json("verify planarity --trials 4 --seed 11", 0);
    CHECK(discs["results"]["trials"] == 4);
    CHECK(discs["results"]["planar"] == 4);

    const Json spaces =
        run_json("verify planarity --trials 3 --seed 12 --family halfspace --random-matching", 0);
    CHECK(spaces["results"]["planar"] == 3);
}

TEST_CASE("no six-point sample separates all nine pairs") {
    const Json report = run_json("verify k33 --trials 3 --seed 5", 0);
    CHECK(report["results"]["trials"] == 3);
    CHECK(report["results"]["allNineSeen"] == false);
    CHECK(report["results"]["maxFeasiblePairs"].get<int>() <= 8);
}

TEST_CASE("an edgeless abstract document solves to zeros") {
    support::write_file("cli_empty.json",
                        R"({"version":"1","kind":"abstract","numVertices":3,"edges":[]})");
    const Json report = run_json("solve cli_empty.json", 0);
    const Json& r = report["results"];
    CHECK(r["nu"]["value"] == 0);
    CHECK(r["tau"]["value"] == 0);
    CHECK(r["nuStar"]["objective"] == "0");
    CHECK(r["tauStar"]["objective"] == "0");
    CHECK(r["chainHolds"] == true);
}
