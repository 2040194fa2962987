#pragma once

#include <vector>

#include "bei/graph.hpp"

namespace bei {

/// Graph generators. Every generator returns the graph already carrying the
/// labeling used by the corresponding proof, so the identity labeling is the
/// one the certificates are checked against.

/// Parts occupy consecutive index blocks in the given order.
Graph complete_multipartite(const std::vector<int>& sizes);

/// Leg counts per spine vertex; first and last must be 0.
struct CaterpillarSpec {
  std::vector<int> legs;

  /// Label of the k-th spine vertex (k is 1-based): v_1 = 1 and
  /// v_{k+1} = v_k + legs_k + 1.
  Vertex spine_label(int k) const;
  int spine_length() const { return static_cast<int>(legs.size()); }
  int vertex_count() const;
};

Graph caterpillar(const CaterpillarSpec& spec);

Graph complete_graph(int n);
Graph path_graph(int n);
/// n isolated vertices.
Graph empty_graph(int n);

/// Disjoint union with g2 shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Join: disjoint union plus every edge between the two operands.
Graph join(const Graph& g1, const Graph& g2);

/// Complete graph on 1..n0 joined with the disjoint union of complete graphs
/// on consecutive blocks of the given sizes.
Graph join_of_completes(int n0, const std::vector<int>& parts);

/// Bipartite graph on 1..2m: {a,b} is an edge iff a odd, b even, a < b.
Graph g_m(int m);
/// g_m with every even vertex g renamed g-1 and every odd vertex g+1.
Graph f_m(int m);

/// (G,g) * (H,h): identify the leaf g of G with the leaf h of H.
/// G keeps its labels; the remaining vertices of H follow in their original
/// order, so for g = d_G and h = 1 the vertex v of H becomes v + d_G - 1.
Graph star_compose(const Graph& g, Vertex g_leaf, const Graph& h, Vertex h_leaf);

/// (G,g) o (H,h): identify the neighbours of the leaves g and h and delete
/// both leaves. The labels of G minus g are compacted in order; H's remaining
/// vertices follow, so for g = d_G and h = 1 the vertex v of H becomes
/// v + d_G - 3.
Graph circ_compose(const Graph& g, Vertex g_leaf, const Graph& h, Vertex h_leaf);

}  // namespace bei
