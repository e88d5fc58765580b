#include <iostream>

#include <CLI11.hpp>

#include "frucht/cli.hpp"

int main(int argc, char** argv) {
  using frucht::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"Graphs with prescribed automorphism groups"};
  app.require_subcommand(1);
  app.add_option("--group-cap", cfg.group_cap, "Largest group order accepted")->check(CLI::PositiveNumber);

  auto* build = app.add_subcommand("build", "Build a graph whose automorphism group is the given group");
  build->add_option("--group", cfg.group_path, "Group file")->required();
  build->add_option("--gens", cfg.gens, "Generator element indices, e.g. \"1,2\"");
  build->add_option("--out", cfg.output_path, "graph6 output file");
  build->add_flag("--verify", cfg.verify, "Compute the automorphism group and compare it with the group");

  auto* aut = app.add_subcommand("aut", "Automorphism group of a graph6, dg or cdg file");
  aut->add_option("file", cfg.inputs, "Graph file")->required()->expected(1);
  aut->add_option("--point", cfg.point, "Distinguished vertex");

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two graph files");
  iso->add_option("files", cfg.inputs, "Two graph files")->required()->expected(2);

  auto* rcpg = app.add_subcommand("rcpg", "Rigid connected pointed graph for a hereditarily finite set");
  rcpg->add_option("--set", cfg.set, "Set in {} notation")->required();
  rcpg->add_option("--out", cfg.output_path, "graph6 output file");
  rcpg->add_option("--rank-bound", cfg.rank_bound, "Largest set rank accepted");

  auto* sweep = app.add_subcommand("rcpg-sweep", "Check all sets up to a rank for rigidity and pairwise non-isomorphism");
  sweep->add_option("--rank", cfg.rank, "Largest rank swept")->required();
  sweep->add_option("--rank-bound", cfg.rank_bound, "Largest set rank accepted");

  auto* order = app.add_subcommand("order-encode", "Encode the linear order on n points as a graph");
  order->add_option("--n", cfg.n, "Order size")->required();
  order->add_option("--out", cfg.output_path, "graph6 output file");
  order->add_flag("--verify", cfg.verify, "Check rigidity and connectivity");

  auto* drr = app.add_subcommand("drr-search", "Search for a digraphical regular representation");
  drr->add_option("--group", cfg.group_path, "Group file")->required();
  drr->add_option("--bound", cfg.drr_bound, "Largest group order searched");

  auto* probe = app.add_subcommand("rg-probe", "Neighborhood and extension report for random graphs");
  probe->add_option("--n", cfg.n, "Vertex count")->required();
  probe->add_option("--seed", cfg.seeds, "Seed (repeatable)");
  probe->add_option("--ext-k", cfg.ext_k, "Largest k for the extension property");

  auto* verify = app.add_subcommand("verify", "Check that a graph's automorphism group is isomorphic to a group");
  verify->add_option("--graph", cfg.graph_path, "graph6 file")->required();
  verify->add_option("--group", cfg.group_path, "Group file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : frucht::cli::kInputError;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return frucht::cli::run(cfg, std::cout, std::cerr);
}
