#include "bei/families.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace bei {

Graph complete_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("no parts given");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
  if (sizes.size() == 1 && sizes.front() != 1)
    throw std::invalid_argument(
        "a single part must be a single vertex (the graph would be edgeless)");

  std::vector<int> part_of;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[i]),
                   static_cast<int>(i));
  const int d = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= d; ++u)
    for (Vertex v = u + 1; v <= d; ++v)
      if (part_of[u - 1] != part_of[v - 1]) edges.emplace_back(u, v);
  return make_graph(d, edges);
}

Vertex CaterpillarSpec::spine_label(int k) const {
  Vertex v = 1;
  for (int i = 1; i < k; ++i) v += legs[i - 1] + 1;
  return v;
}

int CaterpillarSpec::vertex_count() const {
  return spine_length() + std::accumulate(legs.begin(), legs.end(), 0);
}

Graph caterpillar(const CaterpillarSpec& spec) {
  const auto& a = spec.legs;
  if (a.size() < 2) throw std::invalid_argument("caterpillar spine needs l >= 2");
  if (a.front() != 0 || a.back() != 0)
    throw std::invalid_argument("caterpillar spine endpoints carry no legs");
  for (int x : a)
    if (x < 0) throw std::invalid_argument("leg counts must be nonnegative");

  std::vector<Edge> edges;
  Vertex v = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int j = 1; j <= a[i]; ++j) edges.emplace_back(v, v + j);
    const Vertex next = v + a[i] + 1;
    if (i + 1 < a.size()) edges.emplace_back(v, next);
    v = next;
  }
  return make_graph(spec.vertex_count(), edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u < n; ++u) edges.emplace_back(u, u + 1);
  return make_graph(n, edges);
}

Graph empty_graph(int n) { return make_graph(n, {}); }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int shift = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
  return make_graph(g1.order() + g2.order(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int shift = g1.order();
  std::vector<Edge> edges = disjoint_union(g1, g2).edges();
  for (Vertex u = 1; u <= g1.order(); ++u)
    for (Vertex v = 1; v <= g2.order(); ++v) edges.emplace_back(u, v + shift);
  return make_graph(g1.order() + g2.order(), edges);
}

Graph join_of_completes(int n0, const std::vector<int>& parts) {
  if (n0 < 1) throw std::invalid_argument("n0 must be positive");
  for (int n : parts)
    if (n < 1) throw std::invalid_argument("part sizes must be positive");
  if (parts.empty()) return complete_graph(n0);
  Graph rest = complete_graph(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i)
    rest = disjoint_union(rest, complete_graph(parts[i]));
  return join(complete_graph(n0), rest);
}

Graph g_m(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= 2 * m; a += 2)
    for (Vertex b = a + 1; b <= 2 * m; b += 2) edges.emplace_back(a, b);
  return make_graph(2 * m, edges);
}

Graph f_m(int m) {
  Graph g = g_m(m);
  Labeling swap;
  for (Vertex v = 1; v <= g.order(); ++v)
    swap.perm.push_back(v % 2 == 0 ? v - 1 : v + 1);
  return relabel(g, swap);
}

namespace {

void require_leaf(const Graph& g, Vertex v, const char* which) {
  if (v < 1 || v > g.order())
    throw std::invalid_argument(std::string(which) + " vertex out of range");
  if (g.degree(v) != 1)
    throw std::invalid_argument(std::string(which) + " vertex " +
                                std::to_string(v) + " is not a leaf");
}

}  // namespace

Graph star_compose(const Graph& g, Vertex g_leaf, const Graph& h, Vertex h_leaf) {
  require_leaf(g, g_leaf, "first operand");
  require_leaf(h, h_leaf, "second operand");
  const int dg = g.order();
  std::vector<Vertex> name(static_cast<std::size_t>(h.order()) + 1, 0);
  for (Vertex v = 1; v <= h.order(); ++v) {
    if (v == h_leaf)
      name[v] = g_leaf;
    else
      name[v] = dg + (v < h_leaf ? v : v - 1);
  }
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(name[u], name[v]);
  return make_graph(dg + h.order() - 1, edges);
}

Graph circ_compose(const Graph& g, Vertex g_leaf, const Graph& h, Vertex h_leaf) {
  require_leaf(g, g_leaf, "first operand");
  require_leaf(h, h_leaf, "second operand");
  const Vertex g_nbr = g.neighbors(g_leaf).front();
  const Vertex h_nbr = h.neighbors(h_leaf).front();

  auto g_name = [&](Vertex v) { return v < g_leaf ? v : v - 1; };
  const int base = g.order() - 1;
  std::vector<Vertex> h_name(static_cast<std::size_t>(h.order()) + 1, 0);
  int rank = 0;
  for (Vertex v = 1; v <= h.order(); ++v) {
    if (v == h_leaf) continue;
    if (v == h_nbr) {
      h_name[v] = g_name(g_nbr);
      continue;
    }
    h_name[v] = base + ++rank;
  }

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (u != g_leaf && v != g_leaf) edges.emplace_back(g_name(u), g_name(v));
  for (auto [u, v] : h.edges())
    if (u != h_leaf && v != h_leaf) edges.emplace_back(h_name[u], h_name[v]);
  return make_graph(g.order() + h.order() - 3, edges);
}

}  // namespace bei
