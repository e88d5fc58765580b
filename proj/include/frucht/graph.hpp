#pragma once

// Simple graphs, digraphs, edge-colored digraphs and pointed graphs over
// dense vertex ids 0..n-1, plus the construction primitives every other
// module builds on. All types are immutable once constructed.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace frucht {

struct Edge {
  int u;
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  int tail;
  int head;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct ColoredArc {
  int tail;
  int head;
  int color;
  friend auto operator<=>(const ColoredArc&, const ColoredArc&) = default;
};

namespace detail {

inline void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n)
    throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " out of range for " + std::to_string(n) +
                     " vertices");
}

inline std::vector<std::vector<int>> sorted_lists(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
  for (auto [a, b] : pairs) lists[static_cast<std::size_t>(a)].push_back(b);
  for (auto& l : lists) std::sort(l.begin(), l.end());
  return lists;
}

}  // namespace detail

/// Undirected simple graph. Edges are stored normalized (u < v) and sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}

  /// Rejects loops, duplicate edges (in either orientation) and out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InputError("negative vertex count");
    for (auto& e : edges_) {
      detail::check_vertex(e.u, n, "edge");
      detail::check_vertex(e.v, n, "edge");
      if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
      throw InputError("duplicate edge {" + std::to_string(it->u) + "," + std::to_string(it->v) + "}");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size() * 2);
    for (auto e : edges_) {
      pairs.emplace_back(e.u, e.v);
      pairs.emplace_back(e.v, e.u);
    }
    adj_ = detail::sorted_lists(n, pairs);
  }

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  bool adjacent(int u, int v) const {
    const auto& l = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(l.begin(), l.end(), v);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Directed graph without loops; antiparallel arc pairs are allowed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : Digraph(n, {}) {}

  Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw InputError("negative vertex count");
    for (const auto& a : arcs_) {
      detail::check_vertex(a.tail, n, "arc");
      detail::check_vertex(a.head, n, "arc");
      if (a.tail == a.head) throw InputError("loop at vertex " + std::to_string(a.tail));
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (auto it = std::adjacent_find(arcs_.begin(), arcs_.end()); it != arcs_.end())
      throw InputError("duplicate arc (" + std::to_string(it->tail) + "," + std::to_string(it->head) + ")");
    std::vector<std::pair<int, int>> out, in;
    for (auto a : arcs_) {
      out.emplace_back(a.tail, a.head);
      in.emplace_back(a.head, a.tail);
    }
    out_ = detail::sorted_lists(n, out);
    in_ = detail::sorted_lists(n, in);
  }

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::span<const int> out_neighbors(int v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const int> in_neighbors(int v) const { return in_[static_cast<std::size_t>(v)]; }

  bool has_arc(int u, int v) const {
    const auto& l = out_[static_cast<std::size_t>(u)];
    return std::binary_search(l.begin(), l.end(), v);
  }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_;
};

/// Digraph whose arcs carry a color id in 0..k-1, at most one color per ordered pair.
class ColoredDigraph {
 public:
  ColoredDigraph() = default;

  ColoredDigraph(int n, int k, std::vector<ColoredArc> arcs) : n_(n), k_(k), arcs_(std::move(arcs)) {
    if (n < 0) throw InputError("negative vertex count");
    if (k < 0) throw InputError("negative color count");
    for (const auto& a : arcs_) {
      detail::check_vertex(a.tail, n, "arc");
      detail::check_vertex(a.head, n, "arc");
      if (a.tail == a.head) throw InputError("loop at vertex " + std::to_string(a.tail));
      if (a.color < 0 || a.color >= k)
        throw InputError("color " + std::to_string(a.color) + " out of range for " + std::to_string(k) + " colors");
    }
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 1; i < arcs_.size(); ++i)
      if (arcs_[i].tail == arcs_[i - 1].tail && arcs_[i].head == arcs_[i - 1].head)
        throw InputError("duplicate colored arc (" + std::to_string(arcs_[i].tail) + "," +
                         std::to_string(arcs_[i].head) + ")");
  }

  int order() const noexcept { return n_; }
  int colors() const noexcept { return k_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  const std::vector<ColoredArc>& arcs() const noexcept { return arcs_; }

  /// Color of arc (u,v), or -1 when absent.
  int color_of(int u, int v) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), ColoredArc{u, v, -1});
    return (it != arcs_.end() && it->tail == u && it->head == v) ? it->color : -1;
  }

  /// Same digraph with colors forgotten.
  Digraph uncolored() const {
    std::vector<Arc> arcs;
    arcs.reserve(arcs_.size());
    for (const auto& a : arcs_) arcs.push_back({a.tail, a.head});
    return Digraph(n_, std::move(arcs));
  }

  friend bool operator==(const ColoredDigraph& a, const ColoredDigraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<ColoredArc> arcs_;
};

inline ColoredDigraph with_single_color(const Digraph& d) {
  std::vector<ColoredArc> arcs;
  for (const auto& a : d.arcs()) arcs.push_back({a.tail, a.head, 0});
  return ColoredDigraph(d.order(), 1, std::move(arcs));
}

class PointedGraph {
 public:
  PointedGraph() : graph_(1), point_(0) {}

  PointedGraph(Graph g, int point) : graph_(std::move(g)), point_(point) {
    detail::check_vertex(point, graph_.order(), "point");
  }

  const Graph& graph() const noexcept { return graph_; }
  int point() const noexcept { return point_; }
  int order() const noexcept { return graph_.order(); }

  friend bool operator==(const PointedGraph&, const PointedGraph&) = default;

 private:
  Graph graph_;
  int point_;
};

/// Total map from the vertices of a source graph into those of a target graph.
class VertexMap {
 public:
  VertexMap() = default;
  VertexMap(std::vector<int> image, int target_order) : image_(std::move(image)), target_order_(target_order) {
    for (int v : image_) detail::check_vertex(v, target_order, "vertex map");
  }

  static VertexMap identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    return VertexMap(std::move(img), n);
  }

  int operator()(int v) const { return image_[static_cast<std::size_t>(v)]; }
  int source_order() const noexcept { return static_cast<int>(image_.size()); }
  int target_order() const noexcept { return target_order_; }
  const std::vector<int>& images() const noexcept { return image_; }

  bool is_injective() const {
    std::vector<int> s = image_;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  }

  bool is_bijective() const { return source_order() == target_order_ && is_injective(); }

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<int> image_;
  int target_order_ = 0;
};

/// Accumulates edges for a graph under construction; vertices are appended.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(const Graph& g) : n_(g.order()), edges_(g.edges()) {}

  int add_vertex() { return n_++; }
  int add_vertices(int count) {
    const int first = n_;
    n_ += count;
    return first;
  }
  void add_edge(int u, int v) { edges_.push_back({u, v}); }

  /// Adds a copy of `g` with its vertex i renamed to `offset_map[i]`.
  void add_relabeled(const Graph& g, const std::vector<int>& offset_map) {
    for (const auto& e : g.edges())
      edges_.push_back({offset_map[static_cast<std::size_t>(e.u)], offset_map[static_cast<std::size_t>(e.v)]});
  }

  int order() const noexcept { return n_; }
  Graph build() const { return Graph(n_, edges_); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct UnionResult {
  Graph graph;
  VertexMap first;
  VertexMap second;
};

/// Vertices of `a` keep their ids; vertices of `b` follow.
inline UnionResult disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder builder(a);
  const int offset = builder.add_vertices(b.order());
  std::vector<int> second(static_cast<std::size_t>(b.order()));
  for (int v = 0; v < b.order(); ++v) second[static_cast<std::size_t>(v)] = offset + v;
  builder.add_relabeled(b, second);
  const int n = builder.order();
  std::vector<int> first(static_cast<std::size_t>(a.order()));
  for (int v = 0; v < a.order(); ++v) first[static_cast<std::size_t>(v)] = v;
  return {builder.build(), VertexMap(std::move(first), n), VertexMap(std::move(second), n)};
}

struct AttachResult {
  Graph graph;
  VertexMap label_map;
};

/// Glues a fresh copy of `label` onto `host`, identifying the label's point with `v`.
inline AttachResult attach_pointed(const Graph& host, int v, const PointedGraph& label) {
  detail::check_vertex(v, host.order(), "attach_pointed");
  GraphBuilder builder(host);
  std::vector<int> map(static_cast<std::size_t>(label.order()));
  for (int w = 0; w < label.order(); ++w)
    map[static_cast<std::size_t>(w)] = (w == label.point()) ? v : builder.add_vertex();
  builder.add_relabeled(label.graph(), map);
  const int n = builder.order();
  return {builder.build(), VertexMap(std::move(map), n)};
}

/// Hangs a path of `length` fresh vertices off `v`.
inline Graph add_pendant_path(const Graph& host, int v, int length) {
  detail::check_vertex(v, host.order(), "add_pendant_path");
  if (length < 1) throw InputError("pendant path length must be positive");
  GraphBuilder builder(host);
  int prev = v;
  for (int i = 0; i < length; ++i) {
    const int w = builder.add_vertex();
    builder.add_edge(prev, w);
    prev = w;
  }
  return builder.build();
}

inline bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbors(x)) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

inline Graph underlying_graph(const Digraph& d) {
  std::vector<Edge> edges;
  for (const auto& a : d.arcs())
    if (a.tail < a.head || !d.has_arc(a.head, a.tail)) edges.push_back({a.tail, a.head});
  return Graph(d.order(), std::move(edges));
}

// Small named graphs used throughout tests and the CLI.

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, std::move(e));
}

inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, std::move(e));
}

inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, std::move(e));
}

/// Applies a vertex bijection to every edge.
inline Graph relabel(const Graph& g, std::span<const int> image) {
  std::vector<Edge> e;
  e.reserve(g.size());
  for (const auto& ed : g.edges())
    e.push_back({image[static_cast<std::size_t>(ed.u)], image[static_cast<std::size_t>(ed.v)]});
  return Graph(g.order(), std::move(e));
}

}  // namespace frucht
