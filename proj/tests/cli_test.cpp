#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "ricci/curvature.hpp"
#include "ricci/generators.hpp"
#include "ricci/graph_io.hpp"

namespace ricci {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("ricci_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"curvature", "--named", "petersen"}).code, cli::kExitOk);
  EXPECT_EQ(run({"verify-flat", "--named", "petersen"}).code, cli::kExitOk);
  EXPECT_EQ(run({"verify-flat", "--named", "C5"}).code, cli::kExitPropertyFalse);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"curvature"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"curvature", "--named", "heawood"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"curvature", "--graph", (dir_ / "missing.edges").string()}).code, cli::kExitUsage);
  EXPECT_EQ(run({"lattice", "--type", "G2", "--radius", "4"}).code, cli::kExitUsage);
}

TEST_F(CliTest, RationalsAreStrings) {
  const Outcome r = run({"curvature", "--named", "C5", "--edge", "0", "1"});
  ASSERT_EQ(r.code, 0);
  const auto j = r.json();
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["kappa"], "1/2");
  const auto v = run({"verify-flat", "--named", "C5"}).json();
  EXPECT_EQ(v["flat"], false);
  EXPECT_EQ(v["non_flat"][0]["kappa"], "1/2");
}

TEST_F(CliTest, GenerateRoundTripMatchesInMemory) {
  for (const char* format : {"edges", "json", "dot"}) {
    const auto path = dir_ / (std::string("g.") + format);
    ASSERT_EQ(run({"generate", "--named", "dodecahedral", "-o", path.string(), "--format", format}).code, 0);
    EXPECT_EQ(load_graph(path), dodecahedral_graph());
    const auto j = run({"curvature", "--graph", path.string()}).json();
    const auto expected = edge_curvatures(dodecahedral_graph());
    ASSERT_EQ(j.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(j[i]["kappa"], to_string(expected[i].kappa));
  }
}

TEST_F(CliTest, SearchWritesOneFilePerGraph) {
  const Outcome r = run({"search", "--max-n", "10", "--output-dir", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    ++files;
    EXPECT_TRUE(is_ricci_flat(load_graph(entry.path())).flat) << entry.path();
  }
  EXPECT_EQ(files, 6u);
  EXPECT_TRUE(std::filesystem::exists(dir_ / "petersen.edges"));
}

TEST_F(CliTest, ConstructionsAndLattices) {
  EXPECT_EQ(run({"product", "--left-named", "C6", "--right-named", "petersen", "--check"}).code, 0);
  EXPECT_EQ(run({"product", "--left-named", "K1,3", "--right-named", "C6", "--check"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"cover-check", "--source-named", "C12", "--target-named", "C6", "--modular", "--transfer"}).code,
            0);
  EXPECT_EQ(run({"cover-check", "--source-named", "C8", "--target-named", "C4", "--modular"}).code,
            cli::kExitPropertyFalse);
  EXPECT_EQ(run({"lattice", "--type", "B2", "--radius", "4"}).code, 0);

  const Outcome refused = run({"quotient", "--type", "A1A1", "--sublattice", "4 0; 0 4"});
  EXPECT_EQ(refused.code, cli::kExitPropertyFalse);
  EXPECT_EQ(refused.json()["refused"], true);
  EXPECT_EQ(refused.json()["distance"], 4);

  const Outcome torus = run({"quotient", "--type", "A1A1", "--sublattice", "8 0; 0 8", "--verify"});
  ASSERT_EQ(torus.code, 0);
  EXPECT_EQ(torus.json()["vertices"], 64);
  EXPECT_EQ(torus.json()["flatness"]["flat"], true);
}

TEST_F(CliTest, CoverMapFile) {
  const auto map = dir_ / "map.txt";
  {
    std::ofstream f(map);
    for (int v = 0; v < 12; ++v) f << v << ' ' << (v % 6) << '\n';
  }
  EXPECT_EQ(run({"cover-check", "--source-named", "C12", "--target-named", "C6", "--map", map.string()}).code, 0);
}

}  // namespace
}  // namespace ricci
