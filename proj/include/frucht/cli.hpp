#pragma once

// Command dispatch behind the `frucht` tool. Reports are line-oriented
// key=value text; graph outputs are graph6. Exit status: 0 success,
// 1 verification failure, 2 input error.

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "aut.hpp"
#include "cayley.hpp"
#include "errors.hpp"
#include "gadgets.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "group.hpp"
#include "order_codec.hpp"
#include "rcpg.hpp"
#include "rg_probe.hpp"

namespace frucht::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;  // positional files (aut, iso)
  std::string group_path;
  std::string graph_path;
  std::string output_path;
  std::string gens;
  std::string set;
  bool verify = false;
  int group_cap = 5040;
  int rank_bound = 4;
  int drr_bound = 16;
  int rank = 3;
  int n = 0;
  int ext_k = 3;
  std::optional<int> point;
  std::vector<std::uint64_t> seeds{1};
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      const long v = std::stol(token, &used);
      if (used != token.size() || v < 0 || v > 1000000) throw InputError("");
      out.push_back(static_cast<int>(v));
    } catch (const std::exception&) {
      throw InputError("malformed element list '" + text + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '{' || c == '}') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

inline std::string int_set(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// Any of the three graph file kinds, sniffed from the first non-blank token.
struct AnyGraph {
  enum class Kind { kGraph, kDigraph, kColored } kind = Kind::kGraph;
  Graph graph;
  Digraph digraph;
  ColoredDigraph colored;

  int order() const {
    switch (kind) {
      case Kind::kGraph: return graph.order();
      case Kind::kDigraph: return digraph.order();
      default: return colored.order();
    }
  }
};

inline AnyGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string first;
  in >> first;
  AnyGraph g;
  if (first == "cdg") {
    g.kind = AnyGraph::Kind::kColored;
    g.colored = colored_digraph_from_text(text);
  } else if (first == "dg") {
    g.kind = AnyGraph::Kind::kDigraph;
    g.digraph = digraph_from_text(text);
  } else {
    g.graph = from_graph6(first);
  }
  return g;
}

inline void emit_graph(const Graph& g, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output_path.empty()) {
    out << "graph6=" << to_graph6(g) << "\n";
  } else {
    write_file(cfg.output_path, to_graph6(g) + "\n");
    out << "output=" << cfg.output_path << "\n";
  }
}

inline void print_aut(const AutGroup& aut, std::ostream& out) {
  out << "degree=" << aut.degree << "\n";
  out << "order=" << aut.order << "\n";
  out << "orbits=" << aut.orbit_count() << "\n";
  out << "generators=" << aut.generators.size() << "\n";
  for (const auto& g : aut.generators) out << "generator=" << g.to_cycles() << "\n";
}

inline FiniteGroup load_group(const RunConfig& cfg) {
  if (cfg.group_path.empty()) throw InputError("--group is required");
  return parse_group(read_file(cfg.group_path), GroupOptions{cfg.group_cap});
}

inline int cmd_build(const RunConfig& cfg, std::ostream& out) {
  const auto g = load_group(cfg);
  const GeneratingSet s =
      cfg.gens.empty() ? greedy_generating_set(g) : make_generating_set(g, parse_int_list(cfg.gens));
  out << "group_order=" << g.order() << "\n";
  out << "gens=" << int_set(s.elements) << "\n";
  if (!cfg.verify) {
    const auto enc = encode_colored_digraph(colored_cayley(g, s).graph);
    out << "vertices=" << enc.graph.order() << "\nedges=" << enc.graph.size() << "\n";
    emit_graph(enc.graph, cfg, out);
    return kOk;
  }
  const auto res = frucht_graph(g, s);
  const auto& r = res.report;
  out << "vertices=" << res.encoded.graph.order() << "\nedges=" << res.encoded.graph.size() << "\n";
  out << "aut_order=" << r.aut_order << "\n";
  out << "embedding=" << yes_no(r.embedding_verified) << "\n";
  out << "base_preserved=" << yes_no(r.base_preserved) << "\n";
  out << "iso_to_group=" << yes_no(r.iso_to_group) << "\n";
  out << "orbits=" << r.orbit_count << "\n";
  emit_graph(res.encoded.graph, cfg, out);
  out << "result=" << (r.passed() ? "pass" : "fail") << "\n";
  return r.passed() ? kOk : kVerificationFailed;
}

inline int cmd_aut(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw InputError("aut expects exactly one graph file");
  const auto g = load_graph(cfg.inputs[0]);
  AutGroup aut;
  switch (g.kind) {
    case AnyGraph::Kind::kGraph: aut = automorphism_group(g.graph, cfg.point); break;
    case AnyGraph::Kind::kDigraph: aut = automorphism_group(g.digraph, cfg.point); break;
    case AnyGraph::Kind::kColored: aut = automorphism_group(g.colored, cfg.point); break;
  }
  print_aut(aut, out);
  return kOk;
}

inline int cmd_iso(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 2) throw InputError("iso expects exactly two graph files");
  const auto a = load_graph(cfg.inputs[0]);
  const auto b = load_graph(cfg.inputs[1]);
  if (a.kind != b.kind) throw InputError("iso: graph kinds differ");
  std::optional<VertexMap> map;
  switch (a.kind) {
    case AnyGraph::Kind::kGraph: map = are_isomorphic(a.graph, b.graph); break;
    case AnyGraph::Kind::kDigraph: map = are_isomorphic(a.digraph, b.digraph); break;
    case AnyGraph::Kind::kColored: map = are_isomorphic(a.colored, b.colored); break;
  }
  out << "isomorphic=" << yes_no(map.has_value()) << "\n";
  if (map) out << "map=" << Permutation::from_images(map->images()).to_cycles() << "\n";
  return kOk;
}

inline int cmd_rcpg(const RunConfig& cfg, std::ostream& out) {
  if (cfg.set.empty()) throw InputError("--set is required");
  const auto x = hf_parse(cfg.set);
  const auto pg = rcpg_for_hf(x, cfg.rank_bound);
  const bool connected = is_connected(pg.graph());
  const bool rigid = is_rigid(pg);
  out << "set=" << hf_format(x) << "\nrank=" << x.rank() << "\n";
  out << "vertices=" << pg.order() << "\nedges=" << pg.graph().size() << "\npoint=" << pg.point() << "\n";
  out << "connected=" << yes_no(connected) << "\nrigid=" << yes_no(rigid) << "\n";
  emit_graph(pg.graph(), cfg, out);
  return connected && rigid ? kOk : kVerificationFailed;
}

inline int cmd_rcpg_sweep(const RunConfig& cfg, std::ostream& out) {
  if (cfg.rank < 0) throw InputError("--rank must be non-negative");
  if (cfg.rank > cfg.rank_bound) throw CapExceeded("--rank exceeds --rank-bound");
  const auto sets = hf_enumerate(cfg.rank);
  RcpgFactory factory(cfg.rank_bound);
  std::vector<PointedGraph> graphs;
  bool ok = true;
  out << "sets=" << sets.size() << "\n";
  for (const auto& s : sets) {
    graphs.push_back(factory.get(s));
    const bool connected = is_connected(graphs.back().graph());
    const bool rigid = is_rigid(graphs.back());
    ok = ok && connected && rigid;
    out << "set " << s.code() << " vertices=" << graphs.back().order() << " edges=" << graphs.back().graph().size()
        << " connected=" << yes_no(connected) << " rigid=" << yes_no(rigid) << "\n";
  }
  std::size_t pairs = 0, isomorphic = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      ++pairs;
      if (are_isomorphic(graphs[i], graphs[j])) {
        ++isomorphic;
        out << "isomorphic_pair " << sets[i].code() << " " << sets[j].code() << "\n";
      }
    }
  ok = ok && isomorphic == 0;
  out << "pairs_checked=" << pairs << "\nisomorphic_pairs=" << isomorphic << "\n";
  out << "result=" << (ok ? "pass" : "fail") << "\n";
  return ok ? kOk : kVerificationFailed;
}

inline int cmd_order_encode(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 0) throw InputError("--n must be non-negative");
  const auto g = order_graph(LinOrder{cfg.n});
  out << "n=" << cfg.n << "\nvertices=" << g.order() << "\nedges=" << g.size() << "\n";
  if (cfg.verify) {
    const bool rigid = is_rigid(g);
    const bool connected = is_connected(g);
    out << "rigid=" << yes_no(rigid) << "\nconnected=" << yes_no(connected) << "\n";
    emit_graph(g, cfg, out);
    return rigid && connected ? kOk : kVerificationFailed;
  }
  emit_graph(g, cfg, out);
  return kOk;
}

inline int cmd_drr_search(const RunConfig& cfg, std::ostream& out) {
  const auto g = load_group(cfg);
  const auto res = drr_search(g, cfg.drr_bound);
  out << "group_order=" << g.order() << "\n";
  out << "candidates=" << res.candidates.size() << "\n";
  for (const auto& c : res.candidates)
    out << "candidate " << int_set(c.elements) << " aut_order=" << c.aut_order << " orbits=" << c.orbits << "\n";
  out << "witness=" << (res.witness ? int_set(res.witness->elements) : std::string("none")) << "\n";
  return kOk;
}

inline int cmd_rg_probe(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 1) throw InputError("--n must be positive");
  if (cfg.ext_k < 0) throw InputError("--ext-k must be non-negative");
  for (auto seed : cfg.seeds) {
    const auto g = sample_graph(cfg.n, seed);
    out << "seed=" << seed << "\nn=" << cfg.n << "\nedges=" << g.size() << "\n";
    out << neighborhood_report(g, cfg.ext_k).to_text();
  }
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto group = load_group(cfg);
  if (cfg.graph_path.empty()) throw InputError("--graph is required");
  const auto g = from_graph6(read_file(cfg.graph_path));
  const auto aut = automorphism_group(g);
  out << "vertices=" << g.order() << "\naut_order=" << aut.order << "\ngroup_order=" << group.order() << "\n";
  bool iso = false;
  if (aut.order == group.order()) {
    const auto as_group = FiniteGroup::from_permutations(g.order(), aut.generators, GroupOptions{cfg.group_cap});
    iso = are_isomorphic(as_group, group).has_value();
  }
  out << "iso_to_group=" << yes_no(iso) << "\n";
  return iso ? kOk : kVerificationFailed;
}

}  // namespace detail

/// Dispatches one invocation; diagnostics go to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using namespace detail;
  try {
    if (cfg.group_cap < 1 || cfg.rank_bound < 1 || cfg.drr_bound < 1) throw InputError("bounds must be positive");
    if (cfg.subcommand == "build") return cmd_build(cfg, out);
    if (cfg.subcommand == "aut") return cmd_aut(cfg, out);
    if (cfg.subcommand == "iso") return cmd_iso(cfg, out);
    if (cfg.subcommand == "rcpg") return cmd_rcpg(cfg, out);
    if (cfg.subcommand == "rcpg-sweep") return cmd_rcpg_sweep(cfg, out);
    if (cfg.subcommand == "order-encode") return cmd_order_encode(cfg, out);
    if (cfg.subcommand == "drr-search") return cmd_drr_search(cfg, out);
    if (cfg.subcommand == "rg-probe") return cmd_rg_probe(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace frucht::cli
