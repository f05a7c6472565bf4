#include "gwc/cache_io.hpp"
#include "gwc/hurwitz.hpp"
#include "gwc/query.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

using namespace gwc;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("gwc-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

struct Run {
  int code = -1;
  std::string out;
};

// runs the CLI binary with stdout captured and stderr discarded
Run run_cli(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("GWC_CLI");
  if (!bin) return {};
  const auto out_file = scratch_dir("out");
  const std::string cmd = env + " '" + std::string(bin) + "' " + args + " > '" + out_file.string() + "' 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  fs::remove(out_file);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

Bracket random_bracket(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Bracket b;
  b.genus = pick(0, 3);
  b.degree = pick(0, 5);
  const int n = pick(0, 5);
  for (int i = 0; i < n; ++i) {
    CohClass c;
    switch (pick(0, b.genus > 0 ? 3 : 1)) {
      case 0: c = CohClass::one(); break;
      case 1: c = CohClass::omega(); break;
      case 2: c = CohClass::alpha(pick(1, b.genus)); break;
      default: c = CohClass::beta(pick(1, b.genus)); break;
    }
    b.insertions.push_back(tau(pick(0, 12), c));
  }
  if (b.degree > 0) {
    auto parts = enumerate_partitions(b.degree);
    const int m = pick(0, 3);
    for (int j = 0; j < m; ++j) b.profiles.push_back(parts[pick(0, static_cast<int>(parts.size()) - 1)]);
  }
  return b;
}

}  // namespace

TEST(Parser, Examples) {
  auto b = parse_expression("<t2(1) t3(w)>", 0, 2);
  EXPECT_EQ(b, (Bracket{0, 2, {tau(2, CohClass::one()), tau(3, CohClass::omega())}, {}}));
  auto r = parse_expression("<t1(a1) t1(b1) | (2);(1,1)>", 1, 2);
  EXPECT_EQ(r.profiles, (std::vector<Partition>{{2}, {1, 1}}));
  EXPECT_EQ(r.insertions[1], tau(1, CohClass::beta(1)));
  EXPECT_EQ(parse_expression("<>", 0, 3).insertions.size(), 0u);
  EXPECT_EQ(parse_expression("  < t0( w )  >  ", 0, 1).insertions.size(), 1u);
}

TEST(Parser, SyntaxErrors) {
  try {
    parse_expression("<t1(a1) t1(b1) | (2),(1,1)>", 1, 2);
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 20u);
    EXPECT_NE(std::string(e.what()).find("position 20"), std::string::npos);
  }
  for (const char* bad : {"", "<", "<t>", "<t1(x)>", "<t1(w)", "t1(w)>", "<t1(w)> extra", "<| >", "<|(2,)>", "<t-1(w)>"})
    EXPECT_THROW(parse_expression(bad, 1, 2), ParseError) << bad;
}

TEST(Parser, SemanticErrors) {
  EXPECT_THROW(parse_expression("<t1(a2)>", 1, 1), SemanticError);
  EXPECT_THROW(parse_expression("<t1(b0)>", 1, 1), SemanticError);
  EXPECT_THROW(parse_expression("<| (2)>", 0, 3), SemanticError);
  EXPECT_THROW(parse_expression("<| (1,2)>", 0, 3), SemanticError);
  EXPECT_NO_THROW(parse_expression("<t1(a2)>", 2, 1));
}

TEST(Parser, RoundTripOnRandomCorpus) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const Bracket b = random_bracket(rng);
    const std::string text = render(b);
    EXPECT_EQ(parse_expression(text, b.genus, b.degree), b) << text;
    EXPECT_EQ(render(parse_expression(text, b.genus, b.degree)), text);
  }
}

TEST(Cache, StoreAndLoad) {
  const auto dir = scratch_dir("cache") / "nested";
  const auto t = build_character_table(4);
  store_table(dir, t);
  EXPECT_TRUE(fs::exists(dir / table_file_name(4)));
  EXPECT_EQ(table_file_name(4), "chartab-v1-d4.json");
  auto back = load_table(dir, 4);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->partitions, t.partitions);
  EXPECT_EQ(back->dim, t.dim);
  EXPECT_EQ(back->class_size, t.class_size);
  EXPECT_EQ(back->chi, t.chi);

  std::ifstream in(dir / table_file_name(4));
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["version"], 1);
  EXPECT_EQ(j["degree"], 4);
  EXPECT_TRUE(j["chi"][0].is_string());
  fs::remove_all(dir.parent_path());
}

TEST(Cache, TamperedAndMissingFiles) {
  const auto dir = scratch_dir("tamper");
  std::vector<std::string> warnings;
  auto warn = [&](const std::string& w) { warnings.push_back(w); };
  EXPECT_FALSE(load_table(dir, 3, warn).has_value());
  EXPECT_TRUE(warnings.empty());

  store_table(dir, build_character_table(3));
  auto path = dir / table_file_name(3);
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  in.close();
  j["dim"][0] = "7";
  std::ofstream(path) << j.dump();
  EXPECT_FALSE(load_table(dir, 3, warn).has_value());
  EXPECT_EQ(warnings.size(), 1u);

  std::ofstream(path) << "{ not json";
  EXPECT_FALSE(load_table(dir, 3, warn).has_value());
  EXPECT_EQ(warnings.size(), 2u);

  j["dim"][0] = "1";
  j["version"] = 2;
  std::ofstream(path) << j.dump();
  EXPECT_FALSE(load_table(dir, 3, warn).has_value());

  // the persistence hooks rebuild and rewrite a bad file
  clear_character_tables();
  set_table_persistence(directory_persistence(dir, warn));
  EXPECT_TRUE(character_table(3)->consistent());
  set_table_persistence({});
  clear_character_tables();
  EXPECT_TRUE(load_table(dir, 3).has_value());
  fs::remove_all(dir);
}

TEST(Cache, DirectoryResolution) {
  ::unsetenv("GWC_CACHE_DIR");
  EXPECT_FALSE(resolve_cache_dir(std::nullopt).has_value());
  ::setenv("GWC_CACHE_DIR", "/tmp/from-env", 1);
  EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/tmp/from-env"));
  EXPECT_EQ(resolve_cache_dir(std::string("/tmp/from-flag")), fs::path("/tmp/from-flag"));
  ::unsetenv("GWC_CACHE_DIR");
}

class Binary : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!std::getenv("GWC_CLI")) GTEST_SKIP() << "GWC_CLI not set";
  }
};

TEST_F(Binary, EvalWorkedExample) {
  auto r = run_cli("eval '<t2(1) t3(w)>' --genus 0 --degree 1");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  const Rational expected = 10 * stationary_invariant({0, 1, {4}, {}}) - 3 * stationary_invariant({0, 1, {1, 3}, {}});
  EXPECT_EQ(j["value"].get<std::string>(), to_string(expected));
  EXPECT_EQ(j["query"], "<t2(1) t3(w)>");
  EXPECT_FALSE(j["pipeline"].empty());
}

TEST_F(Binary, ExitCodes) {
  EXPECT_EQ(run_cli("check trees --max-k 6").code, 0);
  EXPECT_EQ(run_cli("eval '<t1(a1) t1(b1) | (2),(1,1)>' --genus 1 --degree 2").code, 2);
  EXPECT_EQ(run_cli("eval '<t1(a2)>' --genus 1 --degree 1").code, 2);
  EXPECT_EQ(run_cli("check no-such-suite").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  EXPECT_EQ(run_cli("eval").code, 2);
}

TEST_F(Binary, TableContainsEmptyInvariant) {
  auto r = run_cli("table --genus 1 --degree 2 --max-level 0");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& e : j["entries"])
    if (e["degree"] == 2 && e["query"] == "<>") found = e["value"] == "2";
  EXPECT_TRUE(found);
}

TEST_F(Binary, DeterministicAndQuiet) {
  const std::string args = "eval '<t1(1) t2(a1) t1(b1) t0(w) | (2);(1,1)>' --genus 1 --degree 2";
  auto a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto q = run_cli(args + " --quiet");
  EXPECT_EQ(q.code, 0);
  EXPECT_TRUE(q.out.empty());
  auto t = run_cli(args + " --no-json");
  EXPECT_EQ(t.out.rfind("<", 0), 0u);
}

TEST_F(Binary, CacheDirectoryFlagAndEnvironment) {
  const auto flag_dir = scratch_dir("flag"), env_dir = scratch_dir("env");
  EXPECT_EQ(run_cli("eval '<t3(w)>' --degree 3 --cache-dir '" + flag_dir.string() + "'",
                    "GWC_CACHE_DIR='" + env_dir.string() + "'").code, 0);
  EXPECT_TRUE(fs::exists(flag_dir / table_file_name(3)));
  EXPECT_FALSE(fs::exists(env_dir));
  EXPECT_EQ(run_cli("eval '<t3(w)>' --degree 3", "GWC_CACHE_DIR='" + env_dir.string() + "'").code, 0);
  EXPECT_TRUE(fs::exists(env_dir / table_file_name(3)));
  fs::remove_all(flag_dir);
  fs::remove_all(env_dir);
}
