#pragma once

// Brute-force references used only by tests. Nothing here shares code with
// the refinement engine: automorphisms are counted by trying every vertex
// bijection (with early rejection on adjacency), group automorphisms by
// trying every bijection of the elements.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "frucht/graph.hpp"
#include "frucht/group.hpp"

namespace frucht::oracle {

/// Dense labeled adjacency: label[u][v] = 0 if no arc, else arc kind + 1.
struct DenseStructure {
  int n = 0;
  std::vector<std::vector<int>> label;
  std::vector<int> color;
};

inline DenseStructure dense(const Graph& g) {
  DenseStructure d{g.order(), std::vector<std::vector<int>>(static_cast<std::size_t>(g.order()), std::vector<int>(static_cast<std::size_t>(g.order()), 0)), std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
  for (const auto& e : g.edges()) d.label[e.u][e.v] = d.label[e.v][e.u] = 1;
  return d;
}

inline DenseStructure dense(const ColoredDigraph& g) {
  DenseStructure d{g.order(), std::vector<std::vector<int>>(static_cast<std::size_t>(g.order()), std::vector<int>(static_cast<std::size_t>(g.order()), 0)), std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
  for (const auto& a : g.arcs()) d.label[a.tail][a.head] = a.color + 1;
  return d;
}

inline DenseStructure dense(const Digraph& g) { return dense(with_single_color(g)); }

/// Calls visit(image) for every label- and color-preserving bijection, by exhaustive backtracking.
template <class Visit>
void brute_force_automorphisms(const DenseStructure& d, Visit&& visit) {
  std::vector<int> image(static_cast<std::size_t>(d.n), -1);
  std::vector<char> used(static_cast<std::size_t>(d.n), 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == d.n) {
      visit(image);
      return;
    }
    for (int w = 0; w < d.n; ++w) {
      if (used[w] || d.color[v] != d.color[w]) continue;
      bool ok = d.label[v][v] == d.label[w][w];
      for (int u = 0; u < v && ok; ++u)
        ok = d.label[u][v] == d.label[image[u]][w] && d.label[v][u] == d.label[w][image[u]];
      if (!ok) continue;
      used[w] = 1;
      image[v] = w;
      self(self, v + 1);
      used[w] = 0;
    }
    image[v] = -1;
  };
  rec(rec, 0);
}

inline std::uint64_t brute_force_aut_count(const DenseStructure& d) {
  std::uint64_t count = 0;
  brute_force_automorphisms(d, [&](const std::vector<int>&) { ++count; });
  return count;
}

template <class G>
std::vector<Permutation> brute_force_aut_list(const G& g) {
  std::vector<Permutation> out;
  brute_force_automorphisms(dense(g), [&](const std::vector<int>& img) { out.push_back(Permutation::from_images(img)); });
  return out;
}

template <class G>
std::uint64_t brute_force_aut_count(const G& g, int point = -1) {
  auto d = dense(g);
  if (point >= 0) d.color[point] = 1;
  return brute_force_aut_count(d);
}

/// Every bijection of the elements fixing the identity, filtered by the homomorphism law.
inline std::vector<std::vector<int>> brute_force_group_automorphisms(const FiniteGroup& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int a = 0; a < g.order() && ok; ++a)
      for (int b = 0; b < g.order() && ok; ++b) ok = perm[g.mul(a, b)] == g.mul(perm[a], perm[b]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

/// Conjugation maps y -> x y x^-1, deduplicated.
inline std::vector<std::vector<int>> brute_force_inner_automorphisms(const FiniteGroup& g) {
  std::vector<std::vector<int>> out;
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> m(static_cast<std::size_t>(g.order()));
    for (int y = 0; y < g.order(); ++y) m[y] = g.mul(g.mul(x, y), g.inverse(x));
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Naive closure of a permutation group, for comparing against Schreier-Sims.
inline std::size_t naive_group_order(int degree, const std::vector<Permutation>& gens) {
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::set<Permutation> seen{elems.front()};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto y = elems[i] * g;
      if (seen.insert(y).second) elems.push_back(y);
    }
  return elems.size();
}

// Library distributions are implementation-defined; these draws are not, so
// seeded samples are identical on every platform.
inline bool coin(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng, p)) e.push_back({i, j});
  return Graph(n, std::move(e));
}

inline Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
  std::vector<Arc> a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && coin(rng, p)) a.push_back({i, j});
  return Digraph(n, std::move(a));
}

inline ColoredDigraph random_colored_digraph(int n, int k, double p, std::mt19937_64& rng) {
  std::vector<ColoredArc> a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && coin(rng, p)) a.push_back({i, j, static_cast<int>(rng() % static_cast<std::uint64_t>(k))});
  return ColoredDigraph(n, k, std::move(a));
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng() % static_cast<std::uint64_t>(i + 1)]);
  return Permutation::from_images(std::move(p));
}

}  // namespace frucht::oracle
