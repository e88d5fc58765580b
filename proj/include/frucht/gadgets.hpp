#pragma once

// Replacing a (colored) digraph by a simple graph with the same automorphism
// group. Each arc (u,v) becomes a path u - m1 - m2 - v; m1 carries a pendant
// stick of `first_stick` vertices, m2 one of `second_stick` vertices, and for
// colored arcs a fresh copy of the color's label graph is glued onto m1 by
// its point. Base vertices keep ids 0..n-1; gadget vertices follow, arc by
// arc in sorted arc order.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aut.hpp"
#include "cayley.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"

namespace frucht {

/// Pointed paths on 5, 6, ..., k+4 vertices, each pointed at an end.
inline std::vector<PointedGraph> default_color_labels(int k) {
  if (k < 0) throw InputError("negative color count");
  std::vector<PointedGraph> labels;
  for (int c = 0; c < k; ++c) labels.emplace_back(path_graph(c + 5), 0);
  return labels;
}

struct GadgetLayout {
  int first_stick = 2;
  int second_stick = 3;
  std::vector<PointedGraph> color_labels;

  static GadgetLayout with_default_labels(int colors) {
    GadgetLayout layout;
    layout.color_labels = default_color_labels(colors);
    return layout;
  }

  void validate_sticks() const {
    if (first_stick < 1 || second_stick < 1) throw InputError("stick lengths must be positive");
    if (first_stick == second_stick) throw InputError("stick lengths must differ");
  }

  /// Sticks valid; labels connected, rigid as pointed graphs, pairwise non-isomorphic.
  void validate() const {
    validate_sticks();
    for (std::size_t i = 0; i < color_labels.size(); ++i) {
      const auto& l = color_labels[i];
      if (!is_connected(l.graph())) throw InputError("color label " + std::to_string(i) + " is not connected");
      if (!is_rigid(l)) throw InputError("color label " + std::to_string(i) + " is not rigid as a pointed graph");
      for (std::size_t j = 0; j < i; ++j)
        if (are_isomorphic(color_labels[j], l))
          throw InputError("color labels " + std::to_string(j) + " and " + std::to_string(i) + " are isomorphic");
    }
  }
};

struct ArcGadget {
  int tail;
  int head;
  int color;  // -1 for uncolored arcs
  int first_vertex;
  int vertex_count;
};

struct EncodedGraph {
  Graph graph;
  VertexMap base;  // source vertex -> vertex of `graph`
  std::vector<ArcGadget> gadgets;
};

namespace detail {

struct ArcSpec {
  int tail, head, color;
};

inline EncodedGraph encode(int n, const std::vector<ArcSpec>& arcs, const GadgetLayout& layout) {
  GraphBuilder b;
  b.add_vertices(n);
  EncodedGraph out;
  for (const auto& a : arcs) {
    const int first = b.order();
    const int m1 = b.add_vertex();
    const int m2 = b.add_vertex();
    b.add_edge(a.tail, m1);
    b.add_edge(m1, m2);
    b.add_edge(m2, a.head);
    int prev = m1;
    for (int i = 0; i < layout.first_stick; ++i) {
      const int w = b.add_vertex();
      b.add_edge(prev, w);
      prev = w;
    }
    prev = m2;
    for (int i = 0; i < layout.second_stick; ++i) {
      const int w = b.add_vertex();
      b.add_edge(prev, w);
      prev = w;
    }
    if (a.color >= 0) {
      const auto& label = layout.color_labels[static_cast<std::size_t>(a.color)];
      std::vector<int> map(static_cast<std::size_t>(label.order()));
      for (int w = 0; w < label.order(); ++w) map[static_cast<std::size_t>(w)] = (w == label.point()) ? m1 : b.add_vertex();
      b.add_relabeled(label.graph(), map);
    }
    out.gadgets.push_back({a.tail, a.head, a.color, first, b.order() - first});
  }
  out.graph = b.build();
  out.base = VertexMap(VertexMap::identity(n).images(), out.graph.order());
  return out;
}

}  // namespace detail

inline EncodedGraph encode_directions(const Digraph& d, const GadgetLayout& layout = {}) {
  layout.validate_sticks();
  std::vector<detail::ArcSpec> arcs;
  for (const auto& a : d.arcs()) arcs.push_back({a.tail, a.head, -1});
  return detail::encode(d.order(), arcs, layout);
}

inline EncodedGraph encode_colored_digraph(const ColoredDigraph& cd, const GadgetLayout& layout) {
  if (static_cast<int>(layout.color_labels.size()) < cd.colors())
    throw InputError("layout has " + std::to_string(layout.color_labels.size()) + " color labels, need " +
                     std::to_string(cd.colors()));
  layout.validate();
  std::vector<detail::ArcSpec> arcs;
  for (const auto& a : cd.arcs()) arcs.push_back({a.tail, a.head, a.color});
  return detail::encode(cd.order(), arcs, layout);
}

inline EncodedGraph encode_colored_digraph(const ColoredDigraph& cd) {
  return encode_colored_digraph(cd, GadgetLayout::with_default_labels(cd.colors()));
}

/// Extends an automorphism of the source (on base vertices) to the encoding:
/// the gadget of arc (u,v) goes vertex-for-vertex onto the gadget of (p(u),p(v)).
/// Returns nullopt if `source_perm` does not carry arcs to arcs of the same color.
inline std::optional<Permutation> extend_automorphism(const EncodedGraph& enc, const Permutation& source_perm) {
  const int n = enc.base.source_order();
  if (source_perm.degree() != n) throw InputError("permutation degree does not match source vertex count");
  std::map<std::pair<int, int>, std::size_t> by_arc;
  for (std::size_t i = 0; i < enc.gadgets.size(); ++i) by_arc[{enc.gadgets[i].tail, enc.gadgets[i].head}] = i;
  std::vector<int> img(static_cast<std::size_t>(enc.graph.order()), -1);
  for (int v = 0; v < n; ++v) img[static_cast<std::size_t>(enc.base(v))] = enc.base(source_perm(v));
  for (const auto& g : enc.gadgets) {
    auto it = by_arc.find({source_perm(g.tail), source_perm(g.head)});
    if (it == by_arc.end()) return std::nullopt;
    const auto& h = enc.gadgets[it->second];
    if (h.color != g.color || h.vertex_count != g.vertex_count) return std::nullopt;
    for (int k = 0; k < g.vertex_count; ++k) img[static_cast<std::size_t>(g.first_vertex + k)] = h.first_vertex + k;
  }
  return Permutation::from_images(std::move(img));
}

/// True iff every generator maps base vertices onto base vertices.
inline bool preserves_base(const EncodedGraph& enc, const AutGroup& aut) {
  std::vector<char> is_base(static_cast<std::size_t>(enc.graph.order()), 0);
  for (int v : enc.base.images()) is_base[static_cast<std::size_t>(v)] = 1;
  for (const auto& g : aut.generators)
    for (int v : enc.base.images())
      if (!is_base[static_cast<std::size_t>(g(v))]) return false;
  return true;
}

/// Restriction of each generator to the base vertices, renumbered 0..n-1.
inline std::vector<Permutation> restrict_to_base(const EncodedGraph& enc, const AutGroup& aut) {
  const int n = enc.base.source_order();
  std::vector<int> source_of(static_cast<std::size_t>(enc.graph.order()), -1);
  for (int v = 0; v < n; ++v) source_of[static_cast<std::size_t>(enc.base(v))] = v;
  std::vector<Permutation> out;
  for (const auto& g : aut.generators) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const int s = source_of[static_cast<std::size_t>(g(enc.base(v)))];
      if (s < 0) throw InputError("automorphism does not preserve the base vertices");
      img[static_cast<std::size_t>(v)] = s;
    }
    out.push_back(Permutation::from_images(std::move(img)));
  }
  return out;
}

struct FruchtReport {
  BigInt aut_order = 0;
  bool aut_order_matches = false;
  bool embedding_verified = false;  // every left multiplication extends to an automorphism
  bool base_preserved = false;
  bool iso_to_group = false;
  int orbit_count = 0;

  bool passed() const { return aut_order_matches && embedding_verified && base_preserved && iso_to_group; }
};

struct FruchtResult {
  EncodedGraph encoded;
  AutGroup aut;
  FruchtReport report;
};

/// Colored Cayley graph of (G, S) encoded as a simple graph, with the
/// automorphism group computed and compared against G.
inline FruchtResult frucht_graph(const FiniteGroup& g, const GeneratingSet& s, std::optional<GadgetLayout> layout = {}) {
  const auto cay = colored_cayley(g, s);
  const GadgetLayout lay = layout ? *layout : GadgetLayout::with_default_labels(cay.graph.colors());
  FruchtResult out{encode_colored_digraph(cay.graph, lay), {}, {}};
  out.aut = automorphism_group(out.encoded.graph);
  auto& rep = out.report;
  rep.aut_order = out.aut.order;
  rep.aut_order_matches = out.aut.order == g.order();
  rep.orbit_count = out.aut.orbit_count();

  rep.embedding_verified = true;
  for (int gamma = 0; gamma < g.order(); ++gamma) {
    auto ext = extend_automorphism(out.encoded, left_multiplication(cay, gamma));
    if (!ext || !is_automorphism(out.encoded.graph, *ext)) rep.embedding_verified = false;
  }

  rep.base_preserved = preserves_base(out.encoded, out.aut);
  if (rep.base_preserved && rep.aut_order_matches) {
    const auto restricted = restrict_to_base(out.encoded, out.aut);
    // Restriction is faithful only if its order matches the full group's.
    if (permutation_group_order(g.order(), restricted) == out.aut.order) {
      const auto as_group = FiniteGroup::from_permutations(g.order(), restricted);
      rep.iso_to_group = are_isomorphic(as_group, g).has_value();
    }
  }
  return out;
}

}  // namespace frucht
