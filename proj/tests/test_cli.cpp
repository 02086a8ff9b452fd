#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "oracle.hpp"
#include "qgor/facet_io.hpp"
#include "qgor/fixtures.hpp"

namespace qgor {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qgor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string path(const std::string& name) { return oracle::fixture_path(name + ".cplx").string(); }

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run_cli(args);
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  return nlohmann::json::parse(r.out);
}

TEST(Cli, ClassifySphereOverGF2) {
  const auto j = run_json({"classify", path("boundary-3-simplex"), "--field", "2"});
  EXPECT_TRUE(j["quasi_gorenstein"].get<bool>());
  EXPECT_TRUE(j["gorenstein"].get<bool>());
}

TEST(Cli, LiaisonOnTorusFacet) {
  const auto j = run_json({"liaison", path("csaszar-torus"), "--facets-a", "1", "--field", "q"});
  EXPECT_EQ(j["alternating_sum"], 0);
  EXPECT_TRUE(j["hypotheses"]["quasi_gorenstein"].get<bool>());
  EXPECT_TRUE(j["hypotheses"]["buchsbaum_a"].get<bool>());
  EXPECT_TRUE(j["duality_pairs_equal"].get<bool>());
  EXPECT_TRUE(j["link_restriction"]["holds"].get<bool>());
}

TEST(Cli, CollapseCounterexampleReportsFailure) {
  const auto r = run_cli({"collapse", path("paper-cex1-A"), "--forbid", "1,2,5"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out.rfind("FAILURE", 0), 0u) << r.out;
  const auto j = run_json({"collapse", path("paper-cex1-A"), "--forbid", "1,2,5"});
  EXPECT_EQ(j["status"], "FAILURE");
  EXPECT_FALSE(j["trace"]["steps"].empty());
  EXPECT_FALSE(j["betti_equal"].get<bool>());
}

TEST(Cli, CollapseWithPartitionDefaultsToVerticesOfB) {
  const auto j = run_json({"collapse", path("boundary-3-simplex"), "--facets-a", "1,2,3"});
  EXPECT_EQ(j["status"], "SUCCESS");
  EXPECT_TRUE(j["verification"]["valid"].get<bool>());
}

TEST(Cli, ListFacetsIsOneBased) {
  const auto r = run_cli({"classify", path("four-cycle"), "--list-facets"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1: {1,2}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("4: {3,4}"), std::string::npos) << r.out;
}

TEST(Cli, HomologyAndHochster) {
  const auto h = run_json({"homology", path("rp2-6"), "--field", "2"});
  EXPECT_EQ(h["reduced_betti"]["dims"], nlohmann::json({0, 0, 1, 1}));
  const auto t = run_json({"hochster", path("csaszar-torus")});
  EXPECT_EQ(t["depth"], 2);
  EXPECT_FALSE(t["cohen_macaulay"].get<bool>());
  EXPECT_EQ(t["a_invariant"], 0);
}

TEST(Cli, GraphReportAndRemoval) {
  const auto g = run_json({"graph", path("boundary-3-simplex"), "--t", "1"});
  EXPECT_EQ(g["edges"].size(), 6u);
  EXPECT_TRUE(g["two_connected"].get<bool>());
  const auto r = run_json({"graph", path("csaszar-torus"), "--remove", "1"});
  EXPECT_TRUE(r["removal"]["remainder_connected"].get<bool>());
  const auto dot = run_cli({"graph", path("four-cycle"), "--dot"});
  EXPECT_EQ(dot.out.rfind("graph", 0), 0u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"classify", "/nonexistent.cplx"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"classify", path("four-cycle"), "--field", "4"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"bogus"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"liaison", path("four-cycle"), "--facets-a", "9"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"homology", path("csaszar-torus"), "--max-faces", "3"}).code,
            cli::kExitCapacity);
  // hypothesis failures stay in-band
  EXPECT_EQ(run_cli({"liaison", path("four-cycle"), "--facets-a", "1,3"}).code, cli::kExitOk);
}

TEST(Cli, ParseErrorsNameTheLine) {
  const auto file = std::filesystem::temp_directory_path() / "qgor-bad.cplx";
  {
    std::ofstream out(file);
    out << "1 2\n1 0 2\n";
  }
  const auto r = run_cli({"classify", file.string()});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  std::filesystem::remove(file);
}

TEST(Cli, JsonFacetListsRoundTrip) {
  for (const auto& fx : corpus()) {
    const auto j = run_json({"classify", path(fx.name)});
    std::vector<std::vector<long long>> facets = j["complex"]["facets"];
    EXPECT_EQ(SimplicialComplex::from_facets(facets, j["complex"]["n"].get<std::size_t>()),
              fx.complex)
        << fx.name;
  }
}

}  // namespace
}  // namespace qgor
