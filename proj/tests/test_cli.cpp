#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "gendeg/cli.hpp"

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "gendeg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = gendeg::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
    return std::string(GENDEG_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("compute command") {
    SUBCASE("path fixture at eps = 1") {
        const auto r = run_cli({"compute", "--input", fixture("path_plus_isolated.edges"),
                                "--epsilon", "1.0"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"values\":[1.33333333333333,1.66666666666667,"
                         "1.66666666666667,1.33333333333333,0]") != std::string::npos);
        CHECK(r.out.find("\"ranking\":[[\"2\",\"3\"],[\"1\",\"4\"],[\"5\"]]") !=
              std::string::npos);
    }
    SUBCASE("eps = 0 echoes the degree vector") {
        const auto r = run_cli({"compute", "--input", fixture("path_plus_isolated.edges"),
                                "--epsilon", "0", "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out == "epsilon,1,2,3,4,5\n0,1,2,2,1,0\n");
    }
    SUBCASE("byte-identical across repeated runs") {
        const std::vector<std::string> args{"compute", "--input",
                                            fixture("degree_seq_b.edges")};
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
    }
    SUBCASE("default epsilon is half the rank-monotone bound") {
        const auto r = run_cli({"compute", "--input", fixture("diamond_one_pendant.edges")});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"epsilon\":0.0954462176629") != std::string::npos);
    }
    SUBCASE("--output writes the artifact to a file") {
        const std::string path = "/tmp/gendeg_cli_test_compute.json";
        std::remove(path.c_str());
        const auto r = run_cli({"compute", "--input", fixture("path_plus_isolated.edges"),
                                "--epsilon", "1", "--output", path});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream in(path);
        REQUIRE(in.good());
        std::ostringstream content;
        content << in.rdbuf();
        CHECK(content.str().find("\"epsilon\":1,") != std::string::npos);
        std::remove(path.c_str());
    }
}

TEST_CASE("check command") {
    SUBCASE("ARM violation with witness node 6") {
        const auto r = run_cli({"check", "--arm", "--edge", "2,3", "--epsilon", "3",
                                "--input", fixture("diamond_core.edges")});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"axiom\":\"arm\"") != std::string::npos);
        CHECK(r.out.find("\"verdict\":\"fail\"") != std::string::npos);
        CHECK(r.out.find("\"nodes\":[\"3\",\"6\"]") != std::string::npos);
    }
    SUBCASE("--strict turns the failure into exit code 1") {
        const auto r = run_cli({"check", "--arm", "--edge", "2,3", "--epsilon", "3",
                                "--input", fixture("diamond_core.edges"), "--strict"});
        CHECK(r.code == 1);
    }
    SUBCASE("ARM passes inside the bound even under --strict") {
        const auto r = run_cli({"check", "--arm", "--edge", "2,3", "--epsilon", "0.1",
                                "--input", fixture("diamond_core.edges"), "--strict"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"verdict\":\"pass\"") != std::string::npos);
    }
    SUBCASE("IIC on the path fixture") {
        const auto r = run_cli({"check", "--iic", "--edge", "4,5", "--epsilon", "1",
                                "--input", fixture("path_plus_isolated.edges")});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"axiom\":\"iic\"") != std::string::npos);
        CHECK(r.out.find("\"verdict\":\"fail\"") != std::string::npos);
        CHECK(r.out.find("\"nodes\":[\"2\",\"3\"]") != std::string::npos);
    }
    SUBCASE("SCB without an input graph") {
        const auto r = run_cli({"check", "--scb", "--n", "5", "--epsilon", "1",
                                "--strict"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"axiom\":\"scb\"") != std::string::npos);
        CHECK(r.out.find("\"verdict\":\"pass\"") != std::string::npos);
    }
    SUBCASE("default suite covers every property") {
        const auto r = run_cli({"check", "--input", fixture("path_plus_isolated.edges"),
                                "--epsilons", "0.5,1", "--strict"});
        CHECK(r.code == 0);
        for (const char* axiom :
             {"degree_preservation", "zero_presumption", "idcp", "boundedness",
              "flatness", "agreement"})
            CHECK(r.out.find(std::string("\"axiom\":\"") + axiom + "\"") !=
                  std::string::npos);
        CHECK(r.out.find("\"verdict\":\"fail\"") == std::string::npos);
    }
    SUBCASE("reduced randomized ARM sweep") {
        const auto r = run_cli({"check", "--arm-sweep", "--graphs", "5", "--edits", "4",
                                "--seed", "42", "--strict"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"seed\":42") != std::string::npos);
        CHECK(r.out.find("\"violations\":[]") != std::string::npos);
    }
    SUBCASE("selector conflicts are usage errors") {
        const auto r = run_cli({"check", "--arm", "--iic", "--edge", "1,2",
                                "--input", fixture("path_plus_isolated.edges")});
        CHECK(r.code == 64);
    }
}

TEST_CASE("sweep command") {
    SUBCASE("csv output") {
        const auto r = run_cli({"sweep", "--input", fixture("path_plus_isolated.edges"),
                                "--grid", "0:1:2:lin"});
        CHECK(r.code == 0);
        CHECK(r.out == "epsilon,1,2,3,4,5\n"
                       "0,1,2,2,1,0\n"
                       "1,1.33333333333333,1.66666666666667,1.66666666666667,"
                       "1.33333333333333,0\n");
    }
    SUBCASE("json output carries rankings") {
        const auto r = run_cli({"sweep", "--input", fixture("path_plus_isolated.edges"),
                                "--grid", "1:1:1", "--format", "json"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"ranking\":[[\"2\",\"3\"],[\"1\",\"4\"],[\"5\"]]") !=
              std::string::npos);
    }
    SUBCASE("missing grid is a usage error") {
        CHECK(run_cli({"sweep", "--input", fixture("path_plus_isolated.edges")}).code == 64);
    }
    SUBCASE("malformed grid is a usage error") {
        CHECK(run_cli({"sweep", "--input", fixture("path_plus_isolated.edges"), "--grid",
                       "5:1:0"}).code == 64);
    }
}

TEST_CASE("watershed command") {
    const auto r = run_cli({"watershed", "--input", fixture("diamond_pendants.edges"),
                            "--grid", "0.01:40:64"});
    CHECK(r.code == 0);
    const std::string prefix = "{\"boundaries\":[";
    REQUIRE(r.out.rfind(prefix, 0) == 0);
    CHECK(std::stod(r.out.substr(prefix.size())) == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(r.out.find("2.2247448") != std::string::npos);
    CHECK(r.out.find("\"ranking\":[[\"3\"],[\"4\",\"5\"],[\"6\"],[\"1\",\"2\"]]") !=
          std::string::npos);
}

TEST_CASE("iterate command") {
    const auto r = run_cli({"iterate", "--input", fixture("path_plus_isolated.edges"),
                            "--epsilon", "1", "--k-max", "200"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("k,term_norm,1,2,3,4,5\n", 0) == 0);
    // the limit matches the closed form in the last row
    const std::size_t last_line = r.out.rfind('\n', r.out.size() - 2);
    CHECK(r.out.substr(last_line).find("1.33333333") != std::string::npos);
}

TEST_CASE("solitariness command") {
    const auto r = run_cli({"solitariness", "--input", fixture("chordal_ring8.edges"),
                            "--alpha", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"alpha\":1,") != std::string::npos);
    CHECK(r.out.find("\"ranking\":[[\"1\",\"3\",\"5\"],[\"2\",\"4\"],"
                     "[\"6\",\"7\",\"8\"]]") != std::string::npos);
}

TEST_CASE("exit code contract") {
    SUBCASE("missing input file -> 2") {
        const auto r = run_cli({"compute", "--input", "/nonexistent/graph.edges"});
        CHECK(r.code == 2);
        CHECK(r.err.find("parse error") != std::string::npos);
    }
    SUBCASE("malformed edge list -> 2 with line number") {
        const std::string path = "/tmp/gendeg_cli_test_bad.edges";
        std::ofstream(path) << "1 2\n3 3\n";
        const auto r = run_cli({"compute", "--input", path});
        CHECK(r.code == 2);
        CHECK(r.err.find("line 2") != std::string::npos);
        std::remove(path.c_str());
    }
    SUBCASE("unreachable residual target -> 3") {
        const auto r = run_cli({"compute", "--input", fixture("tailed_clique.edges"),
                                "--epsilon", "1", "--tol", "1e-30"});
        CHECK(r.code == 3);
        CHECK(r.err.find("numeric error") != std::string::npos);
    }
    SUBCASE("unknown flag -> 64") {
        CHECK(run_cli({"compute", "--frobnicate"}).code == 64);
    }
    SUBCASE("unknown subcommand -> 64") {
        CHECK(run_cli({"transmogrify"}).code == 64);
    }
    SUBCASE("unknown edge label -> 64") {
        CHECK(run_cli({"check", "--arm", "--edge", "2,zz", "--epsilon", "1",
                       "--input", fixture("diamond_core.edges")}).code == 64);
    }
    SUBCASE("negative epsilon -> 64") {
        CHECK(run_cli({"compute", "--input", fixture("path_plus_isolated.edges"), "--epsilon",
                       "-1"}).code == 64);
    }
    SUBCASE("help -> 0") {
        const auto r = run_cli({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("compute") != std::string::npos);
    }
}
