#pragma once

#include <vector>

#include "bei/graph.hpp"

namespace bei {

/// The minimal prime p_S of the binomial edge ideal: generated by x_s, y_s
/// for s in S and all 2-minors inside each connected component of G \ S.
struct MinimalPrime {
  VertexSet cut_set;
  Partition components;
  int height = 0;  // |S| + d - c(S)

  friend bool operator==(const MinimalPrime&, const MinimalPrime&) = default;
};

/// Packages S with its component partition and height; no cut-set check.
MinimalPrime make_prime(const Graph& g, const VertexSet& s);

/// S is a cut set iff S is empty or c(S \ {s}) < c(S) for every s in S.
/// Throws std::invalid_argument for disconnected graphs.
bool is_cut_set(const Graph& g, const VertexSet& s);

/// All cut sets, ordered by size then lexicographically. Throws
/// BudgetExceeded when d > max_vertices (at most 2^max_vertices subsets).
std::vector<MinimalPrime> enumerate_minimal_primes(const Graph& g,
                                                   int max_vertices = 22);

struct Classification {
  int ass_count = 0;
  bool unmixed = false;
  bool accessible = false;
  bool traceable = false;
};

Classification classify(const Graph& g, const std::vector<MinimalPrime>& primes);
Classification classify(const Graph& g, int max_vertices = 22);

/// The primes of pi(G), obtained by renaming the primes of G.
std::vector<MinimalPrime> relabel_primes(const std::vector<MinimalPrime>& primes,
                                         const Labeling& pi);

}  // namespace bei
