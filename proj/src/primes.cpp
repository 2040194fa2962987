#include "bei/primes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace bei {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("graph must be connected");
}

bool size_then_lex(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Component counts of G \ S for every S, indexed by the bitmask of S.
std::vector<std::uint8_t> component_counts(const Graph& g) {
  const int d = g.order();
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(d));
  for (Vertex v = 1; v <= d; ++v)
    nbr[v - 1] = static_cast<std::uint32_t>(g.neighbor_mask(v));
  const std::uint32_t full = (1u << d) - 1;

  std::vector<std::uint8_t> count(std::size_t{1} << d, 0);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    std::uint32_t rest = full & ~mask;
    int c = 0;
    while (rest) {
      std::uint32_t comp = rest & (~rest + 1);
      std::uint32_t frontier = comp;
      while (frontier) {
        std::uint32_t grown = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1)
          grown |= nbr[__builtin_ctz(f)];
        grown &= rest & ~comp;
        comp |= grown;
        frontier = grown;
      }
      rest &= ~comp;
      ++c;
    }
    count[mask] = static_cast<std::uint8_t>(c);
  }
  return count;
}

VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet s;
  for (; mask; mask &= mask - 1) s.push_back(__builtin_ctz(mask) + 1);
  return s;
}

}  // namespace

MinimalPrime make_prime(const Graph& g, const VertexSet& s) {
  MinimalPrime p;
  p.cut_set = s;
  std::sort(p.cut_set.begin(), p.cut_set.end());
  p.components = components_after_removal(g, p.cut_set);
  p.height = static_cast<int>(p.cut_set.size()) + g.order() -
             static_cast<int>(p.components.size());
  return p;
}

bool is_cut_set(const Graph& g, const VertexSet& s) {
  require_connected(g);
  if (s.empty()) return true;
  const auto c = components_after_removal(g, s).size();
  for (std::size_t k = 0; k < s.size(); ++k) {
    VertexSet smaller = s;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
    if (components_after_removal(g, smaller).size() >= c) return false;
  }
  return true;
}

std::vector<MinimalPrime> enumerate_minimal_primes(const Graph& g,
                                                   int max_vertices) {
  require_connected(g);
  const int d = g.order();
  constexpr int kHardLimit = 24;
  if (d > max_vertices || d > kHardLimit)
    throw BudgetExceeded("cut-set enumeration limited to d <= " +
                         std::to_string(std::min(max_vertices, kHardLimit)));

  const auto count = component_counts(g);
  std::vector<VertexSet> cut_sets;
  const std::uint32_t full = (1u << d) - 1;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    bool cut = true;
    for (std::uint32_t m = mask; m && cut; m &= m - 1)
      cut = count[mask & ~(m & (~m + 1))] < count[mask];
    if (cut) cut_sets.push_back(mask_to_set(mask));
  }
  std::sort(cut_sets.begin(), cut_sets.end(), size_then_lex);

  std::vector<MinimalPrime> primes;
  primes.reserve(cut_sets.size());
  for (const auto& s : cut_sets) primes.push_back(make_prime(g, s));
  return primes;
}

Classification classify(const Graph& g, const std::vector<MinimalPrime>& primes) {
  Classification c;
  c.ass_count = static_cast<int>(primes.size());

  const bool all_equal = std::all_of(
      primes.begin(), primes.end(),
      [&](const MinimalPrime& p) { return p.height == primes.front().height; });
  const bool all_top = std::all_of(
      primes.begin(), primes.end(),
      [&](const MinimalPrime& p) { return p.height == g.order() - 1; });
  if (all_equal != all_top)
    throw std::logic_error("unmixedness tests disagree; is the graph connected?");
  c.unmixed = all_equal;

  std::set<VertexSet> cut_sets;
  for (const auto& p : primes) cut_sets.insert(p.cut_set);
  c.accessible = c.unmixed;
  for (const auto& p : primes) {
    if (!c.accessible) break;
    if (p.cut_set.empty()) continue;
    bool reachable = false;
    for (std::size_t k = 0; k < p.cut_set.size() && !reachable; ++k) {
      VertexSet smaller = p.cut_set;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
      reachable = cut_sets.count(smaller) > 0;
    }
    c.accessible = reachable;
  }

  c.traceable = hamiltonian_path(g, std::max(g.order(), 1)).has_value();
  return c;
}

Classification classify(const Graph& g, int max_vertices) {
  return classify(g, enumerate_minimal_primes(g, max_vertices));
}

std::vector<MinimalPrime> relabel_primes(const std::vector<MinimalPrime>& primes,
                                         const Labeling& pi) {
  std::vector<MinimalPrime> out;
  out.reserve(primes.size());
  for (const auto& p : primes) {
    MinimalPrime q;
    q.cut_set = relabel(p.cut_set, pi);
    for (const auto& block : p.components) q.components.push_back(relabel(block, pi));
    std::sort(q.components.begin(), q.components.end());
    q.height = p.height;
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), [](const MinimalPrime& a, const MinimalPrime& b) {
    return size_then_lex(a.cut_set, b.cut_set);
  });
  return out;
}

}  // namespace bei
