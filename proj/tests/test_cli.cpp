#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "frucht/cli.hpp"
#include "frucht/graph_io.hpp"

using namespace frucht;
using cli::RunConfig;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FRUCHT_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "frucht_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, BuildVerify) {
  RunConfig cfg;
  cfg.subcommand = "build";
  cfg.group_path = data("c3.grp");
  cfg.gens = "1";
  cfg.verify = true;
  cfg.output_path = scratch("c3.g6").string();
  auto r = run(cfg);
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("aut_order=3\n"), std::string::npos);
  EXPECT_NE(r.out.find("iso_to_group=yes\n"), std::string::npos);
  std::ifstream in(cfg.output_path);
  std::string g6;
  in >> g6;
  EXPECT_EQ(from_graph6(g6).order(), 36);

  RunConfig v;
  v.subcommand = "verify";
  v.group_path = data("c3.grp");
  v.graph_path = cfg.output_path;
  EXPECT_EQ(run(v).code, cli::kOk);
  v.group_path = data("s3.grp");
  auto mismatch = run(v);
  EXPECT_EQ(mismatch.code, cli::kVerificationFailed);
  EXPECT_NE(mismatch.out.find("iso_to_group=no"), std::string::npos);
}

TEST(Cli, BuildWithoutGensUsesGreedySet) {
  RunConfig cfg;
  cfg.subcommand = "build";
  cfg.group_path = data("s3.grp");
  auto r = run(cfg);
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("graph6="), std::string::npos);
}

TEST(Cli, AutPetersen) {
  RunConfig cfg;
  cfg.subcommand = "aut";
  cfg.inputs = {data("petersen.g6")};
  auto r = run(cfg);
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("order=120\norbits=1\n"), std::string::npos);
}

TEST(Cli, AutOnTextFormats) {
  auto dg = scratch("cycle.dg");
  write(dg, "dg 3 3\n0 1\n1 2\n2 0\n");
  RunConfig cfg;
  cfg.subcommand = "aut";
  cfg.inputs = {dg.string()};
  EXPECT_NE(run(cfg).out.find("order=3\n"), std::string::npos);
  auto cdg = scratch("two.cdg");
  write(cdg, "cdg 2 2 2\n0 1 0\n1 0 1\n");
  cfg.inputs = {cdg.string()};
  EXPECT_NE(run(cfg).out.find("order=1\n"), std::string::npos);
}

TEST(Cli, Iso) {
  auto a = scratch("a.g6"), b = scratch("b.g6"), c = scratch("c.g6");
  write(a, to_graph6(cycle_graph(5)) + "\n");
  write(b, to_graph6(relabel(cycle_graph(5), std::vector<int>{2, 4, 1, 3, 0})) + "\n");
  write(c, to_graph6(path_graph(5)) + "\n");
  RunConfig cfg;
  cfg.subcommand = "iso";
  cfg.inputs = {a.string(), b.string()};
  EXPECT_NE(run(cfg).out.find("isomorphic=yes"), std::string::npos);
  cfg.inputs = {a.string(), c.string()};
  EXPECT_NE(run(cfg).out.find("isomorphic=no"), std::string::npos);
}

TEST(Cli, RcpgAndSweep) {
  RunConfig cfg;
  cfg.subcommand = "rcpg";
  cfg.set = "{{},{{}}}";
  auto r = run(cfg);
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("rigid=yes"), std::string::npos);

  RunConfig sweep;
  sweep.subcommand = "rcpg-sweep";
  sweep.rank = 2;
  auto s = run(sweep);
  EXPECT_EQ(s.code, cli::kOk);
  EXPECT_NE(s.out.find("sets=4\n"), std::string::npos);
  EXPECT_NE(s.out.find("pairs_checked=6\nisomorphic_pairs=0\nresult=pass\n"), std::string::npos);
}

TEST(Cli, OrderEncode) {
  RunConfig cfg;
  cfg.subcommand = "order-encode";
  cfg.n = 1;
  EXPECT_NE(run(cfg).out.find("graph6=@\n"), std::string::npos);
  cfg.n = 3;
  cfg.verify = true;
  auto r = run(cfg);
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("rigid=yes\nconnected=yes"), std::string::npos);
}

TEST(Cli, DrrSearch) {
  RunConfig cfg;
  cfg.subcommand = "drr-search";
  cfg.group_path = data("v4.grp");
  auto r = run(cfg);
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("witness=none"), std::string::npos);
  cfg.group_path = data("c3.grp");
  EXPECT_NE(run(cfg).out.find("witness={1}"), std::string::npos);
}

TEST(Cli, RgProbeIsDeterministic) {
  RunConfig cfg;
  cfg.subcommand = "rg-probe";
  cfg.n = 12;
  cfg.seeds = {3, 4};
  cfg.ext_k = 2;
  auto a = run(cfg), b = run(cfg);
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed=4\n"), std::string::npos);
}

TEST(Cli, InputErrorsReturnTwo) {
  RunConfig cfg;
  cfg.subcommand = "nonsense";
  EXPECT_EQ(run(cfg).code, cli::kInputError);

  cfg.subcommand = "aut";
  cfg.inputs = {data("missing.g6")};
  EXPECT_EQ(run(cfg).code, cli::kInputError);

  auto bad = scratch("bad.grp");
  write(bad, "table 2\n0 1\n1 q\n");
  RunConfig build;
  build.subcommand = "build";
  build.group_path = bad.string();
  auto r = run(build);
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);

  build.group_path = data("c3.grp");
  build.gens = "0";
  EXPECT_EQ(run(build).code, cli::kInputError);

  RunConfig rc;
  rc.subcommand = "rcpg";
  rc.set = "{{}";
  EXPECT_EQ(run(rc).code, cli::kInputError);

  RunConfig cap;
  cap.subcommand = "build";
  cap.group_path = data("s3.grp");
  cap.group_cap = 5;
  EXPECT_EQ(run(cap).code, cli::kInputError);
}
