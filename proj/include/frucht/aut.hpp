#pragma once

// Automorphism groups and isomorphisms of graphs, digraphs, edge-colored
// digraphs and pointed graphs.
//
// The engine is a plain individualization-refinement search. Every object is
// first flattened into a `Structure`: vertices with an initial color and a
// labeled adjacency list, where the label ("kind") distinguishes undirected
// edges, out-arcs and in-arcs of each color. Ordered partitions are refined
// to the coarsest equitable partition with cells ordered by a label-invariant
// key, so the search tree of an isomorphic copy is the image of the original
// tree. The first leaf found by always individualizing the smallest vertex of
// the target cell serves as reference; the orbit of each individualized
// vertex under the stabilizer of the ones above it is computed by searching
// sibling subtrees for leaves equivalent to the reference. The group order is
// the product of those orbit lengths.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "perm.hpp"

namespace frucht {

/// Per-vertex class ids.
using Coloring = std::vector<int>;

struct AutGroup {
  int degree = 0;
  std::vector<Permutation> generators;  // sorted lexicographically
  BigInt order = 1;

  std::vector<int> orbit_representatives() const { return frucht::orbit_representatives(degree, generators); }
  int orbit_count() const { return count_orbits(degree, generators); }
};

namespace detail {

struct Structure {
  int n = 0;
  int kinds = 1;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, kind), sorted
  std::vector<int> color;                             // initial vertex colors

  bool has(int u, int v, int kind) const {
    const auto& l = adj[static_cast<std::size_t>(u)];
    return std::binary_search(l.begin(), l.end(), std::pair{v, kind});
  }
};

inline void finish(Structure& s) {
  for (auto& l : s.adj) std::sort(l.begin(), l.end());
  s.color.assign(static_cast<std::size_t>(s.n), 0);
}

inline Structure make_structure(const Graph& g) {
  Structure s;
  s.n = g.order();
  s.adj.resize(static_cast<std::size_t>(s.n));
  for (int v = 0; v < s.n; ++v)
    for (int w : g.neighbors(v)) s.adj[static_cast<std::size_t>(v)].emplace_back(w, 0);
  finish(s);
  return s;
}

inline Structure make_structure(const ColoredDigraph& d) {
  Structure s;
  s.n = d.order();
  s.kinds = std::max(2, 2 * d.colors());
  s.adj.resize(static_cast<std::size_t>(s.n));
  for (const auto& a : d.arcs()) {
    s.adj[static_cast<std::size_t>(a.tail)].emplace_back(a.head, 2 * a.color);
    s.adj[static_cast<std::size_t>(a.head)].emplace_back(a.tail, 2 * a.color + 1);
  }
  finish(s);
  return s;
}

inline Structure make_structure(const Digraph& d) { return make_structure(with_single_color(d)); }

inline void set_point(Structure& s, std::optional<int> point) {
  if (!point) return;
  check_vertex(*point, s.n, "point");
  for (auto& c : s.color) c = 1;
  s.color[static_cast<std::size_t>(*point)] = 0;
}

inline void set_coloring(Structure& s, const Coloring& coloring) {
  if (static_cast<int>(coloring.size()) != s.n) throw InputError("coloring size does not match vertex count");
  for (int c : coloring)
    if (c < 0) throw InputError("negative color class");
  s.color = coloring;
}

/// Maps `from`'s vertices through `map` onto `to`; true iff every labeled
/// adjacency is carried onto one (and degrees agree, so it is a bijection on adjacencies).
inline bool maps_onto(const Structure& from, const Structure& to, std::span<const int> map) {
  if (from.n != to.n) return false;
  for (int v = 0; v < from.n; ++v) {
    const int mv = map[static_cast<std::size_t>(v)];
    if (from.color[static_cast<std::size_t>(v)] != to.color[static_cast<std::size_t>(mv)]) return false;
    const auto& l = from.adj[static_cast<std::size_t>(v)];
    if (l.size() != to.adj[static_cast<std::size_t>(mv)].size()) return false;
    for (auto [w, kind] : l)
      if (!to.has(mv, map[static_cast<std::size_t>(w)], kind)) return false;
  }
  return true;
}

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + h;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Ordered partition: `cell[v]` is the position of v's cell; cells are 0..count-1.
struct Partition {
  std::vector<int> cell;
  int count = 0;
  std::uint64_t invariant = 0;

  bool discrete() const { return count == static_cast<int>(cell.size()); }
};

inline Partition initial_partition(const Structure& s) {
  std::vector<int> values = s.color;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Partition p;
  p.cell.resize(static_cast<std::size_t>(s.n));
  for (int v = 0; v < s.n; ++v)
    p.cell[static_cast<std::size_t>(v)] =
        static_cast<int>(std::lower_bound(values.begin(), values.end(), s.color[static_cast<std::size_t>(v)]) -
                         values.begin());
  p.count = static_cast<int>(values.size());
  return p;
}

/// Refines `p` to the coarsest equitable partition below it. New cells are
/// ordered by (old cell, neighbor signature), which depends only on the
/// structure, never on vertex ids.
inline void refine(const Structure& s, Partition& p) {
  const int n = s.n;
  std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offset[static_cast<std::size_t>(v) + 1] = offset[static_cast<std::size_t>(v)] + s.adj[static_cast<std::size_t>(v)].size();
  std::vector<std::uint64_t> sig(offset.back());
  std::vector<int> order(static_cast<std::size_t>(n));
  const auto kinds = static_cast<std::uint64_t>(s.kinds);

  auto segment_less = [&](int a, int b) {
    return std::lexicographical_compare(sig.begin() + static_cast<std::ptrdiff_t>(offset[static_cast<std::size_t>(a)]),
                                        sig.begin() + static_cast<std::ptrdiff_t>(offset[static_cast<std::size_t>(a) + 1]),
                                        sig.begin() + static_cast<std::ptrdiff_t>(offset[static_cast<std::size_t>(b)]),
                                        sig.begin() + static_cast<std::ptrdiff_t>(offset[static_cast<std::size_t>(b) + 1]));
  };

  for (;;) {
    for (int v = 0; v < n; ++v) {
      auto* out = sig.data() + offset[static_cast<std::size_t>(v)];
      for (auto [w, kind] : s.adj[static_cast<std::size_t>(v)])
        *out++ = static_cast<std::uint64_t>(p.cell[static_cast<std::size_t>(w)]) * kinds + static_cast<std::uint64_t>(kind);
      std::sort(sig.data() + offset[static_cast<std::size_t>(v)], out);
    }
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const int ca = p.cell[static_cast<std::size_t>(a)], cb = p.cell[static_cast<std::size_t>(b)];
      if (ca != cb) return ca < cb;
      if (segment_less(a, b)) return true;
      if (segment_less(b, a)) return false;
      return a < b;
    });
    std::vector<int> next(static_cast<std::size_t>(n));
    int count = 0;
    for (int i = 0; i < n; ++i) {
      const int v = order[static_cast<std::size_t>(i)];
      if (i > 0) {
        const int u = order[static_cast<std::size_t>(i) - 1];
        if (p.cell[static_cast<std::size_t>(u)] != p.cell[static_cast<std::size_t>(v)] || segment_less(u, v)) ++count;
      }
      next[static_cast<std::size_t>(v)] = count;
    }
    if (n > 0) ++count;
    if (count == p.count) break;
    p.cell = std::move(next);
    p.count = count;
  }

  // The last round split nothing, so `sig` is relative to the final cells and
  // every member of a cell shares its signature.
  std::uint64_t h = mix(0, static_cast<std::uint64_t>(p.count));
  int last_cell = -1;
  for (int v : order) {
    const int c = p.cell[static_cast<std::size_t>(v)];
    if (c == last_cell) {
      h = mix(h, 1);
      continue;
    }
    last_cell = c;
    h = mix(h, 0xce11);
    for (auto i = offset[static_cast<std::size_t>(v)]; i < offset[static_cast<std::size_t>(v) + 1]; ++i) h = mix(h, sig[i]);
  }
  p.invariant = h;
}

inline Partition individualize(const Structure& s, const Partition& p, int v) {
  Partition q;
  q.cell = p.cell;
  q.count = p.count + 1;
  const int c = p.cell[static_cast<std::size_t>(v)];
  for (int u = 0; u < static_cast<int>(q.cell.size()); ++u) {
    int& cu = q.cell[static_cast<std::size_t>(u)];
    if (cu > c || (cu == c && u != v)) ++cu;
  }
  refine(s, q);
  return q;
}

/// First smallest non-singleton cell, members ascending.
inline std::vector<int> target_cell(const Partition& p) {
  std::vector<int> size(static_cast<std::size_t>(p.count), 0);
  for (int c : p.cell) ++size[static_cast<std::size_t>(c)];
  int best = -1;
  for (int c = 0; c < p.count; ++c)
    if (size[static_cast<std::size_t>(c)] > 1 && (best < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(best)])) best = c;
  std::vector<int> members;
  for (int v = 0; v < static_cast<int>(p.cell.size()); ++v)
    if (p.cell[static_cast<std::size_t>(v)] == best) members.push_back(v);
  return members;
}

class Search {
 public:
  Search(const Structure& s) : s_(s) {
    Partition p = initial_partition(s);
    refine(s, p);
    while (!p.discrete()) {
      Level level{p, target_cell(p), 0};
      level.chosen = level.target.front();
      Partition child = individualize(s, p, level.chosen);
      path_.push_back(std::move(level));
      p = std::move(child);
    }
    leaf_ = std::move(p);
  }

  AutGroup automorphisms() {
    AutGroup result;
    result.degree = s_.n;
    std::vector<Permutation> gens;
    const int depth = static_cast<int>(path_.size());
    for (int d = depth - 1; d >= 0; --d) {
      const Level& level = path_[static_cast<std::size_t>(d)];
      const int v = level.chosen;
      auto rep = orbit_representatives(s_.n, gens);
      std::vector<int> failed;
      std::vector<int> prefix;
      for (int i = 0; i < d; ++i) prefix.push_back(path_[static_cast<std::size_t>(i)].chosen);
      for (int w : level.target) {
        if (w == v || rep[static_cast<std::size_t>(w)] == rep[static_cast<std::size_t>(v)]) continue;
        if (std::any_of(failed.begin(), failed.end(), [&](int f) { return rep[static_cast<std::size_t>(f)] == rep[static_cast<std::size_t>(w)]; })) continue;
        Partition child = individualize(s_, level.part, w);
        std::optional<Permutation> g;
        if (child.invariant == invariant_at(d + 1)) {
          prefix.push_back(w);
          g = descend(s_, child, d + 1, prefix, gens);
          prefix.pop_back();
        }
        if (g) {
          gens.push_back(std::move(*g));
          rep = orbit_representatives(s_.n, gens);
        } else {
          failed.push_back(w);
        }
      }
      const auto orbit = std::count_if(level.target.begin(), level.target.end(),
                                       [&](int w) { return rep[static_cast<std::size_t>(w)] == rep[static_cast<std::size_t>(v)]; });
      result.order *= static_cast<unsigned>(orbit);
    }
    std::sort(gens.begin(), gens.end());
    result.generators = std::move(gens);
    return result;
  }

  /// Vertex map from this structure onto `other`, if the two are isomorphic.
  /// `other_gens` (automorphisms of `other`) prune equivalent branches.
  std::optional<std::vector<int>> isomorphism_to(const Structure& other, std::span<const Permutation> other_gens) {
    if (other.n != s_.n) return std::nullopt;
    Partition p = initial_partition(other);
    refine(other, p);
    if (p.invariant != invariant_at(0)) return std::nullopt;
    std::vector<int> prefix;
    auto g = descend(other, p, 0, prefix, other_gens);
    if (!g) return std::nullopt;
    return g->images();
  }

  std::uint64_t root_invariant() const { return invariant_at(0); }

 private:
  struct Level {
    Partition part;
    std::vector<int> target;
    int chosen;
  };

  std::uint64_t invariant_at(int d) const {
    return d < static_cast<int>(path_.size()) ? path_[static_cast<std::size_t>(d)].part.invariant : leaf_.invariant;
  }

  // Searches the subtree under `node` (at depth `d`, reached by individualizing
  // `prefix`) of `target`'s search tree for a leaf whose induced map from the
  // reference leaf is an isomorphism onto `target`.
  std::optional<Permutation> descend(const Structure& target, const Partition& node, int d, std::vector<int>& prefix,
                                     std::span<const Permutation> prune_gens) {
    const int depth = static_cast<int>(path_.size());
    if (node.discrete()) {
      if (d != depth) return std::nullopt;
      std::vector<int> at(static_cast<std::size_t>(target.n));
      for (int u = 0; u < target.n; ++u) at[static_cast<std::size_t>(node.cell[static_cast<std::size_t>(u)])] = u;
      std::vector<int> map(static_cast<std::size_t>(s_.n));
      for (int v = 0; v < s_.n; ++v) map[static_cast<std::size_t>(v)] = at[static_cast<std::size_t>(leaf_.cell[static_cast<std::size_t>(v)])];
      if (!maps_onto(s_, target, map)) return std::nullopt;
      return Permutation::from_images(std::move(map));
    }
    if (d >= depth) return std::nullopt;

    // Automorphisms of the target fixing the prefix pointwise map sibling
    // subtrees onto each other; one representative per orbit suffices.
    std::vector<Permutation> fixing;
    for (const auto& g : prune_gens)
      if (std::all_of(prefix.begin(), prefix.end(), [&](int x) { return g(x) == x; })) fixing.push_back(g);
    auto rep = orbit_representatives(target.n, fixing);
    std::vector<int> tried;
    for (int w : target_cell(node)) {
      const int r = rep[static_cast<std::size_t>(w)];
      if (std::find(tried.begin(), tried.end(), r) != tried.end()) continue;
      tried.push_back(r);
      Partition child = individualize(target, node, w);
      if (child.invariant != invariant_at(d + 1)) continue;
      prefix.push_back(w);
      auto g = descend(target, child, d + 1, prefix, prune_gens);
      prefix.pop_back();
      if (g) return g;
    }
    return std::nullopt;
  }

  const Structure& s_;
  std::vector<Level> path_;
  Partition leaf_;
};

inline AutGroup automorphism_group(const Structure& s) { return Search(s).automorphisms(); }

template <class Object>
std::optional<VertexMap> isomorphism(Structure a, Structure b) {
  if (a.n != b.n) return std::nullopt;
  std::size_t ma = 0, mb = 0;
  for (const auto& l : a.adj) ma += l.size();
  for (const auto& l : b.adj) mb += l.size();
  if (ma != mb) return std::nullopt;
  Search search(a);
  {
    Partition p = initial_partition(b);
    refine(b, p);
    if (p.invariant != search.root_invariant()) return std::nullopt;
  }
  const AutGroup aut_b = automorphism_group(b);
  auto map = search.isomorphism_to(b, aut_b.generators);
  if (!map) return std::nullopt;
  return VertexMap(std::move(*map), b.n);
}

inline Coloring first_occurrence_numbering(const Partition& p) {
  std::vector<int> renumber(static_cast<std::size_t>(p.count), -1);
  Coloring out(p.cell.size());
  int next = 0;
  for (std::size_t v = 0; v < p.cell.size(); ++v) {
    int& r = renumber[static_cast<std::size_t>(p.cell[v])];
    if (r < 0) r = next++;
    out[v] = r;
  }
  return out;
}

inline Coloring refine_structure(Structure s, const Coloring& initial) {
  set_coloring(s, initial);
  Partition p = initial_partition(s);
  refine(s, p);
  return first_occurrence_numbering(p);
}

}  // namespace detail

/// Coarsest equitable coloring refining `initial`; classes numbered by first occurrence.
inline Coloring refine(const Graph& g, const Coloring& initial) {
  return detail::refine_structure(detail::make_structure(g), initial);
}
inline Coloring refine(const Digraph& g, const Coloring& initial) {
  return detail::refine_structure(detail::make_structure(g), initial);
}
inline Coloring refine(const ColoredDigraph& g, const Coloring& initial) {
  return detail::refine_structure(detail::make_structure(g), initial);
}

inline Coloring uniform_coloring(int n) { return Coloring(static_cast<std::size_t>(n), 0); }

template <class Object>
AutGroup automorphism_group(const Object& object, std::optional<int> point = std::nullopt) {
  auto s = detail::make_structure(object);
  detail::set_point(s, point);
  return detail::automorphism_group(s);
}

/// Automorphisms that also preserve a vertex coloring.
template <class Object>
AutGroup automorphism_group(const Object& object, const Coloring& coloring) {
  auto s = detail::make_structure(object);
  detail::set_coloring(s, coloring);
  return detail::automorphism_group(s);
}

inline AutGroup automorphism_group(const PointedGraph& g) { return automorphism_group(g.graph(), g.point()); }

template <class Object>
bool is_rigid(const Object& object, std::optional<int> point = std::nullopt) {
  return automorphism_group(object, point).order == 1;
}

inline bool is_rigid(const PointedGraph& g) { return is_rigid(g.graph(), g.point()); }

template <class Object>
bool is_automorphism(const Object& object, const Permutation& p) {
  if (p.degree() != object.order()) return false;
  auto s = detail::make_structure(object);
  return detail::maps_onto(s, s, p.images());
}

inline bool is_automorphism(const PointedGraph& g, const Permutation& p) {
  return p.degree() == g.order() && p(g.point()) == g.point() && is_automorphism(g.graph(), p);
}

template <class Object>
std::optional<VertexMap> are_isomorphic(const Object& a, const Object& b) {
  return detail::isomorphism<Object>(detail::make_structure(a), detail::make_structure(b));
}

inline std::optional<VertexMap> are_isomorphic(const PointedGraph& a, const PointedGraph& b) {
  auto sa = detail::make_structure(a.graph());
  auto sb = detail::make_structure(b.graph());
  detail::set_point(sa, a.point());
  detail::set_point(sb, b.point());
  return detail::isomorphism<PointedGraph>(std::move(sa), std::move(sb));
}

}  // namespace frucht
