// Command-line front end: subcommand output is byte-stable and matches the
// checked-in golden files; exit codes follow the documented contract
// (0 success, 1 failed verification, 2 usage error, 3 resource cap).

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "apolar/cli.hpp"

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.emplace_back("apolar");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());

    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    CliResult r;
    try {
        r.code = apolar::cli_main(static_cast<int>(argv.size()), argv.data());
    } catch (...) {
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
        throw;
    }
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string golden(const std::string& name) {
    std::string path = std::string(APOLAR_TEST_GOLDEN_DIR) + "/" + name;
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("betti subcommand matches golden bytes in all formats", "[cli]") {
    auto table = run_cli({"betti", "--kind", "det", "--n", "2"});
    CHECK(table.code == 0);
    CHECK(table.out == golden("betti_det_n2_gf32003.txt"));

    auto json = run_cli({"betti", "--kind", "det", "--n", "2", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out == golden("betti_det_n2_gf32003.json"));

    auto csv = run_cli({"betti", "--kind", "det", "--n", "2", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == golden("betti_det_n2_gf32003.csv"));

    // Byte stability: repeated runs and the threaded path agree exactly.
    auto again = run_cli({"betti", "--kind", "det", "--n", "2", "--format", "json"});
    CHECK(again.out == json.out);
    auto det3 = run_cli({"betti", "--kind", "det", "--n", "3"});
    CHECK(det3.code == 0);
    CHECK(det3.out == golden("betti_det_n3_gf32003.txt"));
    auto det3_threaded = run_cli(
        {"betti", "--kind", "det", "--n", "3", "--threads", "2"});
    CHECK(det3_threaded.out == det3.out);
    auto perm3 = run_cli({"betti", "--kind", "perm", "--n", "3"});
    CHECK(perm3.code == 0);
    CHECK(perm3.out == golden("betti_perm_n3_gf32003.txt"));

    // --out writes the same bytes to a file.
    std::string tmp = "/tmp/apolar_cli_test_betti.txt";
    auto to_file = run_cli({"betti", "--kind", "det", "--n", "2", "--out", tmp});
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream is(tmp, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    CHECK(ss.str() == golden("betti_det_n2_gf32003.txt"));
}

TEST_CASE("formulas subcommand prints the closed forms", "[cli]") {
    auto f4 = run_cli({"formulas", "--n", "4"});
    CHECK(f4.code == 0);
    CHECK(f4.out ==
          "{\"n\":4,\"beta12\":100,\"beta23\":800,\"detBeta34\":3075,"
          "\"permBeta24\":12,\"permBeta34\":3087}\n");
    auto f2 = run_cli({"formulas", "--n", "2"});
    CHECK(f2.out ==
          "{\"n\":2,\"beta12\":9,\"beta23\":16,\"detBeta34\":9,"
          "\"permBeta24\":0,\"permBeta34\":9}\n");
}

TEST_CASE("relations subcommand lists an exact kernel basis", "[cli]") {
    auto r = run_cli({"relations", "--kind", "det", "--n", "3", "--multidegree",
                      "1,1,1;1,1,1", "--field", "qq"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "relations det n=3 mu=1,1,1;1,1,1 field=qq");
    std::getline(lines, line);
    CHECK(line == "dim 4");
    int basis_lines = 0;
    while (std::getline(lines, line)) ++basis_lines;
    CHECK(basis_lines == 4);

    auto j = run_cli({"relations", "--kind", "det", "--n", "3", "--multidegree",
                      "1,1,1;1,1,1", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"dim\":4") != std::string::npos);
    CHECK(j.out.find("\"field\":\"gf32003\"") != std::string::npos);
}

TEST_CASE("verify generation reports pass and fail correctly", "[cli]") {
    auto pass = run_cli({"verify", "generation", "--kind", "det", "--n", "2",
                         "--max-degree", "5"});
    CHECK(pass.code == 0);
    CHECK(pass.out.find("PASS (deficiency 0)") != std::string::npos);

    auto fail = run_cli({"verify", "generation", "--kind", "perm", "--n", "4",
                         "--max-degree", "4", "--no-quartic"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("FAIL (deficiency 12)") != std::string::npos);
    CHECK(fail.out.find("quartic=off") != std::string::npos);
}

TEST_CASE("cayley subcommands match golden bytes", "[cli]") {
    auto basis = run_cli({"cayley", "basis", "--m", "3"});
    CHECK(basis.code == 0);
    CHECK(basis.out == golden("cayley_basis_m3.txt"));

    auto reduce = run_cli({"cayley", "reduce", "--m", "4", "--word",
                           "(1 2)(3 4)(1 2)(3 4)"});
    CHECK(reduce.code == 0);
    CHECK(reduce.out == golden("reduce_m4_disjoint.txt"));

    auto dot = run_cli({"cayley", "export-dot", "--m", "3"});
    CHECK(dot.code == 0);
    CHECK(dot.out == golden("cayley_s3.dot"));

    auto too_big = run_cli({"cayley", "export-dot", "--m", "5"});
    CHECK(too_big.code == 2);
    CHECK(too_big.err.find("error:") != std::string::npos);

    auto not_closed = run_cli({"cayley", "reduce", "--m", "3", "--word", "(1 2)"});
    CHECK(not_closed.code == 2);
}

TEST_CASE("repcheck subcommand verdicts", "[cli]") {
    auto gen3 = run_cli({"repcheck", "--component", "generators", "--n", "3"});
    CHECK(gen3.code == 0);
    CHECK(gen3.out.rfind("repcheck generators n=3: PASS (predicted 36, computed 36)\n",
                         0) == 0);
    CHECK(gen3.out.find("\"verdict\":\"pass\"") != std::string::npos);

    auto rel2 = run_cli({"repcheck", "--component", "relations", "--n", "2"});
    CHECK(rel2.code == 0);
    CHECK(rel2.out.find("PASS (predicted 16, computed 16)") != std::string::npos);

    auto bad = run_cli({"repcheck", "--component", "fourthSyzygies", "--n", "2"});
    CHECK(bad.code == 2);
}

TEST_CASE("render-relation matches golden bytes", "[cli]") {
    auto r = run_cli({"render-relation", "--kind", "det", "--n", "2", "--relation",
                      "X[1,2]*sq(1,1) - X[1,1]*row(1;1,2)"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("render_rho1_n2.txt"));
}

TEST_CASE("usage errors exit 2, caps exit 3", "[cli]") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"betti", "--kind", "woof", "--n", "2"}).code == 2);
    CHECK(run_cli({"betti", "--kind", "det", "--n", "2", "--field", "gf:4"}).code == 2);
    CHECK(run_cli({"betti", "--kind", "det", "--n", "2", "--format", "xml"}).code == 2);
    CHECK(run_cli({"relations", "--kind", "det", "--n", "3", "--multidegree",
                   "1,1;1,1"})
              .code == 2);
    CHECK(run_cli({"betti", "--kind", "det", "--n", "2", "--out",
                   "/nonexistent_dir/x.txt"})
              .code == 2);

    auto capped_n = run_cli({"betti", "--kind", "det", "--n", "7"});
    CHECK(capped_n.code == 3);
    CHECK(capped_n.err.find("cap exceeded:") != std::string::npos);

    // A tiny level budget still emits the partial table but signals the cap.
    auto capped_budget = run_cli({"betti", "--kind", "det", "--n", "3",
                                  "--level-budget", "2"});
    CHECK(capped_budget.code == 3);
    CHECK(!capped_budget.out.empty());
    CHECK(capped_budget.out.find("?") != std::string::npos);
}
