#pragma once

// Finite linear orders 0 < 1 < ... < n-1 as tournaments, and their
// direction-gadget encodings as simple graphs.

#include "errors.hpp"
#include "gadgets.hpp"
#include "graph.hpp"

namespace frucht {

struct LinOrder {
  int size = 0;
};

/// Arc (i, j) iff i < j.
inline Digraph order_to_digraph(LinOrder order) {
  if (order.size < 0) throw InputError("order size must be non-negative");
  std::vector<Arc> arcs;
  for (int i = 0; i < order.size; ++i)
    for (int j = i + 1; j < order.size; ++j) arcs.push_back({i, j});
  return Digraph(order.size, std::move(arcs));
}

inline EncodedGraph encode_order(LinOrder order) { return encode_directions(order_to_digraph(order)); }

/// n + 7 n(n-1)/2 vertices with the default sticks.
inline Graph order_graph(LinOrder order) { return encode_order(order).graph; }

}  // namespace frucht
