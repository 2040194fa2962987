#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bei {

/// Vertices are 1-based: a graph on d vertices uses labels 1..d.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;
/// Blocks ordered by ascending minimum vertex; each block sorted.
using Partition = std::vector<VertexSet>;

/// Raised when a caller-imposed resource bound (vertex count, subsets,
/// Gröbner pairs, ...) would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on 1..d. Edges are stored normalized (i < j),
/// deduplicated and sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  int order() const { return d_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  bool has_edge(Vertex u, Vertex v) const {
    return u != v && adj_[index(u, v)] != 0;
  }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v - 1]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v - 1].size()); }

  /// Neighborhood as a bitmask (bit v-1 set for neighbor v); requires d <= 64.
  std::uint64_t neighbor_mask(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.d_ == b.d_ && a.edges_ == b.edges_;
  }

  friend Graph make_graph(int d, const std::vector<Edge>& edges);

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(d_) +
           static_cast<std::size_t>(v - 1);
  }

  int d_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
};

/// Builds a canonical graph. Throws std::invalid_argument naming the
/// offending pair for loops or out-of-range endpoints.
Graph make_graph(int d, const std::vector<Edge>& edges);

/// A relabeling: vertex v receives the new name perm[v-1].
struct Labeling {
  std::vector<Vertex> perm;

  static Labeling identity(int d);
  /// Labeling that sends order[k] to k+1.
  static Labeling from_order(const std::vector<Vertex>& order);

  bool is_valid_for(int d) const;
  Vertex operator()(Vertex v) const { return perm[v - 1]; }
  Labeling inverse() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// The graph with every vertex v renamed to pi(v).
Graph relabel(const Graph& g, const Labeling& pi);
VertexSet relabel(const VertexSet& s, const Labeling& pi);

/// Connected components of G \ S, ordered by minimum vertex.
Partition components_after_removal(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

bool is_closed_labeling(const Graph& g, const Labeling& pi);
bool is_weakly_closed_labeling(const Graph& g, const Labeling& pi);

enum class LabelingMode { closed, weakly_closed };

struct LabelingSearchOptions {
  LabelingMode mode = LabelingMode::weakly_closed;
  std::uint64_t node_budget = 10'000'000;
  int max_vertices = 10;
};

struct LabelingSearchResult {
  enum class Status { found, absent, budget_exceeded };
  Status status = Status::absent;
  std::optional<Labeling> labeling;
  std::uint64_t nodes = 0;
};

/// Backtracking search over label prefixes. The first labeling found is the
/// lexicographically smallest vertex order (vertex named 1, then 2, ...).
/// Throws BudgetExceeded when d exceeds options.max_vertices; running out of
/// node budget is reported through Status::budget_exceeded instead.
LabelingSearchResult find_labeling(const Graph& g,
                                   const LabelingSearchOptions& options = {});

/// A Hamiltonian path as a vertex sequence, or nullopt when none exists.
/// Exact subset dynamic program; throws BudgetExceeded when d > max_vertices.
std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g,
                                                     int max_vertices = 20);

bool is_hamiltonian_path(const Graph& g, const std::vector<Vertex>& path);

/// BFS 2-coloring; vertex 1 (and the minimum vertex of every further
/// component) goes to the first side.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

}  // namespace bei
