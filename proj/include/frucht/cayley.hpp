#pragma once

// Colored directed Cayley graphs: vertex g, and an arc of color c from g to
// g*s_c for every generator s_c. Also the plain Cayley digraph and the
// exhaustive search for digraphical regular representations.

#include <optional>
#include <string>
#include <vector>

#include "aut.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "parallel.hpp"

namespace frucht {

struct CayleyResult {
  ColoredDigraph graph;
  FiniteGroup group;
  GeneratingSet gens;
  VertexMap vertex_of;  // group element -> vertex id
};

namespace detail {

inline void check_cayley_input(const FiniteGroup& g, const GeneratingSet& s) {
  if (s.elements.empty()) {
    if (g.order() != 1) throw NotGenerating("empty generating set is only valid for the trivial group");
    return;
  }
  if (!is_generating_set(g, s.elements)) throw NotGenerating("elements do not generate the group");
}

}  // namespace detail

/// Vertices are element indices. The trivial group with S = {} gives one arcless vertex.
inline CayleyResult colored_cayley(const FiniteGroup& g, const GeneratingSet& s) {
  detail::check_cayley_input(g, s);
  std::vector<ColoredArc> arcs;
  arcs.reserve(static_cast<std::size_t>(g.order()) * s.elements.size());
  for (int x = 0; x < g.order(); ++x)
    for (std::size_t c = 0; c < s.elements.size(); ++c)
      arcs.push_back({x, g.mul(x, s.elements[c]), static_cast<int>(c)});
  return {ColoredDigraph(g.order(), static_cast<int>(s.elements.size()), std::move(arcs)), g, s,
          VertexMap::identity(g.order())};
}

/// Uncolored Cayley digraph.
inline Digraph cayley_digraph(const FiniteGroup& g, const GeneratingSet& s) {
  detail::check_cayley_input(g, s);
  std::vector<Arc> arcs;
  for (int x = 0; x < g.order(); ++x)
    for (int e : s.elements) arcs.push_back({x, g.mul(x, e)});
  return Digraph(g.order(), std::move(arcs));
}

/// Left multiplication by `gamma` as a vertex permutation of a Cayley graph.
inline Permutation left_multiplication(const CayleyResult& res, int gamma) {
  std::vector<int> img(static_cast<std::size_t>(res.group.order()));
  for (int x = 0; x < res.group.order(); ++x)
    img[static_cast<std::size_t>(res.vertex_of(x))] = res.vertex_of(res.group.mul(gamma, x));
  return Permutation::from_images(std::move(img));
}

struct EmbeddingReport {
  bool maps_preserve_arcs = false;
  bool maps_distinct = false;
  BigInt aut_order = 0;
  bool aut_order_matches = false;

  bool passed() const { return maps_preserve_arcs && maps_distinct && aut_order_matches; }
};

inline EmbeddingReport verify_regular_embedding(const CayleyResult& res) {
  EmbeddingReport r;
  std::vector<Permutation> maps;
  r.maps_preserve_arcs = true;
  for (int gamma = 0; gamma < res.group.order(); ++gamma) {
    maps.push_back(left_multiplication(res, gamma));
    if (!is_automorphism(res.graph, maps.back())) r.maps_preserve_arcs = false;
  }
  std::sort(maps.begin(), maps.end());
  r.maps_distinct = std::adjacent_find(maps.begin(), maps.end()) == maps.end();
  r.aut_order = automorphism_group(res.graph).order;
  r.aut_order_matches = r.aut_order == res.group.order();
  return r;
}

/// Number of vertex orbits of `aut` acting on `g`.
template <class Object>
int orbit_count(const Object& g, const AutGroup& aut) {
  if (aut.degree != g.order()) throw InputError("automorphism group degree does not match vertex count");
  return aut.orbit_count();
}

struct DrrCandidate {
  std::vector<int> elements;
  BigInt aut_order;
  int orbits = 0;
};

struct DrrSearchResult {
  std::optional<GeneratingSet> witness;
  std::vector<DrrCandidate> candidates;  // generating subsets examined, in enumeration order
  std::size_t subsets_examined = 0;      // all subsets, generating or not
};

/// Enumerates identity-free subsets by size, then lexicographically, and
/// returns the first generating S with |Aut(cay(G,S))| = |G| and one vertex
/// orbit. Candidates after the witness are not reported.
inline DrrSearchResult drr_search(const FiniteGroup& g, int bound = 16) {
  if (g.order() > bound)
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds DRR search bound " + std::to_string(bound));
  DrrSearchResult result;
  const int m = g.order() - 1;  // non-identity elements 1..m
  for (int size = 0; size <= m; ++size) {
    if (size == 0 && g.order() != 1) continue;
    // All size-subsets of {1..m} in lexicographic order.
    std::vector<std::vector<int>> batch;
    std::vector<int> comb(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
      ++result.subsets_examined;
      if (g.order() == 1 || is_generating_set(g, comb)) batch.push_back(comb);
      int i = size - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - (size - 1 - i)) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j) - 1] + 1;
    }
    auto evaluated = parallel_map(batch.size(), [&](std::size_t i) {
      auto d = cayley_digraph(g, GeneratingSet{batch[i]});
      auto aut = automorphism_group(d);
      return DrrCandidate{batch[i], aut.order, aut.orbit_count()};
    });
    for (auto& c : evaluated) {
      const bool drr = c.aut_order == g.order() && c.orbits == 1;
      result.candidates.push_back(std::move(c));
      if (drr) {
        result.witness = GeneratingSet{result.candidates.back().elements};
        return result;
      }
    }
  }
  return result;
}

}  // namespace frucht
