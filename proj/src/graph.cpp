#include "bei/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace bei {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // keep the smaller index as root so roots are block minima
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

std::string pair_text(const Edge& e) {
  std::ostringstream os;
  os << "(" << e.first << "," << e.second << ")";
  return os.str();
}

}  // namespace

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  if (d_ > 64) throw std::invalid_argument("neighbor_mask requires d <= 64");
  std::uint64_t m = 0;
  for (Vertex u : nbrs_[v - 1]) m |= std::uint64_t{1} << (u - 1);
  return m;
}

Graph make_graph(int d, const std::vector<Edge>& edges) {
  if (d < 1) throw std::invalid_argument("vertex count must be positive");
  Graph g;
  g.d_ = d;
  for (auto e : edges) {
    if (e.first < 1 || e.first > d || e.second < 1 || e.second > d)
      throw std::invalid_argument("edge endpoint out of range: " + pair_text(e));
    if (e.first == e.second)
      throw std::invalid_argument("loop edge: " + pair_text(e));
    if (e.first > e.second) std::swap(e.first, e.second);
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adj_.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0);
  g.nbrs_.assign(static_cast<std::size_t>(d), {});
  for (auto [u, v] : g.edges_) {
    g.adj_[g.index(u, v)] = 1;
    g.adj_[g.index(v, u)] = 1;
    g.nbrs_[u - 1].push_back(v);
    g.nbrs_[v - 1].push_back(u);
  }
  for (auto& n : g.nbrs_) std::sort(n.begin(), n.end());
  return g;
}

Labeling Labeling::identity(int d) {
  Labeling pi;
  pi.perm.resize(static_cast<std::size_t>(d));
  std::iota(pi.perm.begin(), pi.perm.end(), 1);
  return pi;
}

Labeling Labeling::from_order(const std::vector<Vertex>& order) {
  Labeling pi;
  pi.perm.assign(order.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k)
    pi.perm[order[k] - 1] = static_cast<Vertex>(k + 1);
  return pi;
}

bool Labeling::is_valid_for(int d) const {
  if (perm.size() != static_cast<std::size_t>(d)) return false;
  auto image = perm;
  std::sort(image.begin(), image.end());
  for (int k = 0; k < d; ++k)
    if (image[k] != k + 1) return false;
  return true;
}

Labeling Labeling::inverse() const {
  Labeling inv;
  inv.perm.assign(perm.size(), 0);
  for (std::size_t v = 0; v < perm.size(); ++v)
    inv.perm[perm[v] - 1] = static_cast<Vertex>(v + 1);
  return inv;
}

Graph relabel(const Graph& g, const Labeling& pi) {
  if (!pi.is_valid_for(g.order()))
    throw std::invalid_argument("labeling is not a permutation of 1..d");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [u, v] : g.edges()) edges.emplace_back(pi(u), pi(v));
  return make_graph(g.order(), edges);
}

VertexSet relabel(const VertexSet& s, const Labeling& pi) {
  VertexSet out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(pi(v));
  std::sort(out.begin(), out.end());
  return out;
}

Partition components_after_removal(const Graph& g, const VertexSet& s) {
  const int d = g.order();
  std::vector<char> removed(static_cast<std::size_t>(d), 0);
  for (Vertex v : s) {
    if (v < 1 || v > d) throw std::invalid_argument("vertex out of range");
    removed[v - 1] = 1;
  }
  UnionFind uf(d);
  for (auto [u, v] : g.edges())
    if (!removed[u - 1] && !removed[v - 1]) uf.unite(u - 1, v - 1);

  Partition blocks;
  std::vector<int> block_of_root(static_cast<std::size_t>(d), -1);
  for (int v = 0; v < d; ++v) {
    if (removed[v]) continue;
    const int r = uf.find(v);
    if (block_of_root[r] < 0) {
      block_of_root[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of_root[r]].push_back(v + 1);
  }
  return blocks;
}

bool is_connected(const Graph& g) {
  return components_after_removal(g, {}).size() == 1;
}

namespace {

// Checks the closed / weakly closed triple condition on a graph whose
// current vertex names are the labels.
bool labeling_condition(const Graph& h, bool require_both) {
  for (auto [i, k] : h.edges()) {
    for (Vertex j = i + 1; j < k; ++j) {
      const bool left = h.has_edge(i, j);
      const bool right = h.has_edge(j, k);
      if (require_both ? !(left && right) : !(left || right)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_closed_labeling(const Graph& g, const Labeling& pi) {
  return labeling_condition(relabel(g, pi), true);
}

bool is_weakly_closed_labeling(const Graph& g, const Labeling& pi) {
  return labeling_condition(relabel(g, pi), false);
}

namespace {

class LabelingSearch {
 public:
  LabelingSearch(const Graph& g, const LabelingSearchOptions& options)
      : g_(g),
        options_(options),
        used_(static_cast<std::size_t>(g.order()), 0) {}

  LabelingSearchResult run() {
    LabelingSearchResult result;
    const bool done = extend();
    result.nodes = nodes_;
    if (done) {
      result.status = LabelingSearchResult::Status::found;
      result.labeling = Labeling::from_order(order_);
    } else if (exhausted_budget_) {
      result.status = LabelingSearchResult::Status::budget_exceeded;
    } else {
      result.status = LabelingSearchResult::Status::absent;
    }
    return result;
  }

 private:
  // Placing v at the next label only settles triples whose largest label
  // is the new one.
  bool consistent(Vertex v) const {
    const std::size_t k = order_.size();
    const bool both = options_.mode == LabelingMode::closed;
    for (std::size_t i = 0; i < k; ++i) {
      if (!g_.has_edge(order_[i], v)) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        const bool left = g_.has_edge(order_[i], order_[j]);
        const bool right = g_.has_edge(order_[j], v);
        if (both ? !(left && right) : !(left || right)) return false;
      }
    }
    return true;
  }

  bool extend() {
    if (order_.size() == static_cast<std::size_t>(g_.order())) return true;
    for (Vertex v = 1; v <= g_.order(); ++v) {
      if (used_[v - 1]) continue;
      if (nodes_ >= options_.node_budget) {
        exhausted_budget_ = true;
        return false;
      }
      ++nodes_;
      if (!consistent(v)) continue;
      used_[v - 1] = 1;
      order_.push_back(v);
      if (extend()) return true;
      order_.pop_back();
      used_[v - 1] = 0;
      if (exhausted_budget_) return false;
    }
    return false;
  }

  const Graph& g_;
  LabelingSearchOptions options_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
  std::uint64_t nodes_ = 0;
  bool exhausted_budget_ = false;
};

}  // namespace

LabelingSearchResult find_labeling(const Graph& g,
                                   const LabelingSearchOptions& options) {
  if (g.order() > options.max_vertices)
    throw BudgetExceeded("labeling search limited to d <= " +
                         std::to_string(options.max_vertices));
  return LabelingSearch(g, options).run();
}

std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g,
                                                     int max_vertices) {
  const int d = g.order();
  constexpr int kHardLimit = 24;
  if (d > max_vertices || d > kHardLimit)
    throw BudgetExceeded("Hamiltonian path search limited to d <= " +
                         std::to_string(std::min(max_vertices, kHardLimit)));
  if (d == 1) return std::vector<Vertex>{1};

  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(d));
  for (Vertex v = 1; v <= d; ++v)
    nbr[v - 1] = static_cast<std::uint32_t>(g.neighbor_mask(v));

  // ends[mask]: set of vertices at which some path covering exactly mask ends
  const std::uint32_t full = (1u << d) - 1;
  std::vector<std::uint32_t> ends(std::size_t{1} << d, 0);
  for (int v = 0; v < d; ++v) ends[1u << v] = 1u << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    while (e) {
      const int v = __builtin_ctz(e);
      e &= e - 1;
      std::uint32_t next = nbr[v] & ~mask;
      while (next) {
        const int w = __builtin_ctz(next);
        next &= next - 1;
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  if (ends[full] == 0) return std::nullopt;

  std::vector<Vertex> path;
  std::uint32_t mask = full;
  int v = __builtin_ctz(ends[full]);
  while (true) {
    path.push_back(v + 1);
    const std::uint32_t rest = mask & ~(1u << v);
    if (rest == 0) break;
    const std::uint32_t cand = ends[rest] & nbr[v];
    v = __builtin_ctz(cand);
    mask = rest;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_hamiltonian_path(const Graph& g, const std::vector<Vertex>& path) {
  if (path.size() != static_cast<std::size_t>(g.order())) return false;
  std::vector<char> seen(path.size(), 0);
  for (Vertex v : path) {
    if (v < 1 || v > g.order() || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    if (!g.has_edge(path[k], path[k + 1])) return false;
  return true;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  const int d = g.order();
  std::vector<int> side(static_cast<std::size_t>(d), -1);
  for (Vertex start = 1; start <= d; ++start) {
    if (side[start - 1] >= 0) continue;
    side[start - 1] = 0;
    std::queue<Vertex> q;
    q.push(start);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (side[w - 1] < 0) {
          side[w - 1] = 1 - side[u - 1];
          q.push(w);
        } else if (side[w - 1] == side[u - 1]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<VertexSet, VertexSet> parts;
  for (Vertex v = 1; v <= d; ++v)
    (side[v - 1] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

}  // namespace bei
