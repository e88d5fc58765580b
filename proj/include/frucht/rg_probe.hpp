#pragma once

// Finite probes of random-graph behaviour: G(n, 1/2) samples, the extension
// property Ext(k), and rigidity / pairwise isomorphism of closed
// neighborhoods viewed as pointed graphs.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aut.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "parallel.hpp"

namespace frucht {

/// G(n, 1/2). The stream is std::mt19937_64 seeded with `seed`; pairs (i, j),
/// i < j, are visited in lexicographic order and each draws one 64-bit word,
/// the pair being an edge iff the word's top bit is set.
inline Graph sample_graph(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("sample_graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() >> 63) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

struct ExtensionResult {
  bool holds = true;
  std::vector<int> joined;  // counterexample U: z must be adjacent to all of these
  std::vector<int> avoided;  // counterexample V: z must be adjacent to none of these
};

/// Ext(k): for all disjoint U, V with |U|+|V| <= k some z outside U and V is
/// adjacent to every vertex of U and no vertex of V. The first failing pair
/// in (size, subset, split) order is reported.
inline ExtensionResult extension_property(const Graph& g, int k) {
  if (k < 0) throw InputError("extension property needs k >= 0");
  const int n = g.order();
  std::vector<int> chosen;
  std::vector<char> in_set(static_cast<std::size_t>(n), 0);
  ExtensionResult result;

  auto check_split = [&](unsigned mask) {
    for (int z = 0; z < n; ++z) {
      if (in_set[static_cast<std::size_t>(z)]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < chosen.size() && ok; ++i)
        ok = g.adjacent(z, chosen[i]) == static_cast<bool>(mask >> i & 1);
      if (ok) return true;
    }
    return false;
  };

  for (int size = 0; size <= std::min(k, n); ++size) {
    // Enumerate size-subsets in lexicographic order.
    std::vector<int> comb(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i;
    for (;;) {
      chosen = comb;
      for (int v : chosen) in_set[static_cast<std::size_t>(v)] = 1;
      for (unsigned mask = 0; mask < (1u << size); ++mask) {
        if (check_split(mask)) continue;
        result.holds = false;
        for (int i = 0; i < size; ++i)
          ((mask >> i & 1) ? result.joined : result.avoided).push_back(chosen[static_cast<std::size_t>(i)]);
        return result;
      }
      for (int v : chosen) in_set[static_cast<std::size_t>(v)] = 0;
      int i = size - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return result;
}

/// Subgraph induced on v and its neighbors, pointed at v. Vertex v becomes
/// 0 and its neighbors 1..deg in increasing id order.
inline PointedGraph neighborhood(const Graph& g, int v) {
  detail::check_vertex(v, g.order(), "neighborhood");
  std::vector<int> members{v};
  for (int w : g.neighbors(v)) members.push_back(w);
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int w : g.neighbors(members[i])) {
      const int j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.push_back({static_cast<int>(i), j});
    }
  return PointedGraph(Graph(static_cast<int>(members.size()), std::move(edges)), 0);
}

struct ProbeReport {
  std::vector<bool> rigid;                    // per vertex
  std::vector<int> iso_class;                 // per vertex, numbered by first occurrence
  int class_count = 0;
  std::vector<ExtensionResult> extension;     // index k = 0..ext_k

  bool all_rigid() const { return std::all_of(rigid.begin(), rigid.end(), [](bool r) { return r; }); }
  bool pairwise_non_isomorphic() const { return class_count == static_cast<int>(iso_class.size()); }

  std::string to_text() const {
    std::string out;
    out += "vertices=" + std::to_string(rigid.size()) + "\n";
    int rigid_count = 0;
    for (bool r : rigid) rigid_count += r;
    out += "rigid_neighborhoods=" + std::to_string(rigid_count) + "\n";
    out += "neighborhood_classes=" + std::to_string(class_count) + "\n";
    out += std::string("all_rigid=") + (all_rigid() ? "yes" : "no") + "\n";
    out += std::string("pairwise_non_isomorphic=") + (pairwise_non_isomorphic() ? "yes" : "no") + "\n";
    for (std::size_t k = 0; k < extension.size(); ++k) {
      const auto& e = extension[k];
      out += "ext" + std::to_string(k) + "=" + (e.holds ? "yes" : "no");
      if (!e.holds) {
        auto list = [](const std::vector<int>& v) {
          std::string s = "{";
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
          return s + "}";
        };
        out += " U=" + list(e.joined) + " V=" + list(e.avoided);
      }
      out += "\n";
    }
    for (std::size_t v = 0; v < rigid.size(); ++v)
      out += "vertex " + std::to_string(v) + " rigid=" + (rigid[v] ? "yes" : "no") +
             " class=" + std::to_string(iso_class[v]) + "\n";
    return out;
  }
};

inline ProbeReport neighborhood_report(const Graph& g, int ext_k = 3) {
  const int n = g.order();
  ProbeReport report;
  std::vector<PointedGraph> hoods;
  for (int v = 0; v < n; ++v) hoods.push_back(neighborhood(g, v));

  auto rigid = parallel_map(static_cast<std::size_t>(n), [&](std::size_t v) { return is_rigid(hoods[v]) ? 1 : 0; });
  report.rigid.assign(rigid.begin(), rigid.end());

  // Cheap invariant first: (order, size, sorted degree sequence).
  auto key = [&](const PointedGraph& p) {
    std::vector<int> k{p.order(), static_cast<int>(p.graph().size())};
    std::vector<int> degrees;
    for (int w = 0; w < p.order(); ++w) degrees.push_back(p.graph().degree(w));
    std::sort(degrees.begin(), degrees.end());
    k.insert(k.end(), degrees.begin(), degrees.end());
    return k;
  };
  std::vector<std::vector<int>> keys;
  for (const auto& h : hoods) keys.push_back(key(h));
  std::vector<int> representatives;
  report.iso_class.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    for (std::size_t c = 0; c < representatives.size(); ++c) {
      const int r = representatives[c];
      if (keys[static_cast<std::size_t>(r)] != keys[static_cast<std::size_t>(v)]) continue;
      if (are_isomorphic(hoods[static_cast<std::size_t>(r)], hoods[static_cast<std::size_t>(v)])) {
        report.iso_class[static_cast<std::size_t>(v)] = static_cast<int>(c);
        break;
      }
    }
    if (report.iso_class[static_cast<std::size_t>(v)] < 0) {
      report.iso_class[static_cast<std::size_t>(v)] = static_cast<int>(representatives.size());
      representatives.push_back(v);
    }
  }
  report.class_count = static_cast<int>(representatives.size());
  for (int k = 0; k <= ext_k; ++k) report.extension.push_back(extension_property(g, k));
  return report;
}

}  // namespace frucht
