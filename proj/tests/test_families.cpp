#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bei/families.hpp"
#include "bei/primes.hpp"
#include "oracles.hpp"

using namespace bei;

TEST_CASE("complete multipartite") {
  const Graph g = complete_multipartite({3, 2, 1});
  CHECK(g.order() == 6);
  CHECK(g.size() == 11);
  CHECK(complete_multipartite({1, 1}) == path_graph(2));
  CHECK(complete_multipartite({2, 2}).edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(complete_multipartite({1}).order() == 1);
  CHECK_THROWS_AS(complete_multipartite({}), std::invalid_argument);
  CHECK_THROWS_AS(complete_multipartite({3}), std::invalid_argument);
  CHECK_THROWS_AS(complete_multipartite({2, 0}), std::invalid_argument);
}

TEST_CASE("complete multipartite graphs are weakly closed under every labeling") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> sizes;
    int d = 0;
    const int parts = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts && d < 8; ++i) {
      const int s = 1 + static_cast<int>(rng() % std::min(3, 8 - d));
      sizes.push_back(s);
      d += s;
    }
    if (sizes.size() < 2) continue;
    const Graph g = complete_multipartite(sizes);
    Labeling pi = Labeling::identity(g.order());
    std::shuffle(pi.perm.begin(), pi.perm.end(), rng);
    CHECK(is_weakly_closed_labeling(g, pi));
  }
}

TEST_CASE("caterpillar labeling follows the spine recurrence") {
  const CaterpillarSpec spec{{0, 1, 0, 0}};
  CHECK(spec.spine_label(1) == 1);
  CHECK(spec.spine_label(2) == 2);
  CHECK(spec.spine_label(3) == 4);
  CHECK(spec.spine_label(4) == 5);
  CHECK(caterpillar(spec).edges() == std::vector<Edge>{{1, 2}, {2, 3}, {2, 4}, {4, 5}});
  CHECK(caterpillar({{0, 0}}) == path_graph(2));
  CHECK(caterpillar({{0, 2, 0}}).edges() == std::vector<Edge>{{1, 2}, {2, 3}, {2, 4}, {2, 5}});
  CHECK_THROWS_AS(caterpillar({{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(caterpillar({{0}}), std::invalid_argument);
  CHECK_THROWS_AS(caterpillar({{0, -1, 0}}), std::invalid_argument);
}

TEST_CASE("caterpillars: last spine vertex is d, identity weakly closed") {
  for (int l = 2; l <= 5; ++l) {
    std::vector<int> legs(l, 0);
    // odometer over interior leg counts 0..2
    while (true) {
      const CaterpillarSpec spec{legs};
      const Graph g = caterpillar(spec);
      CHECK(spec.spine_label(l) == g.order());
      CHECK(g.size() == static_cast<std::size_t>(g.order() - 1));
      CHECK(is_connected(g));
      CHECK(is_weakly_closed_labeling(g, Labeling::identity(g.order())));
      int k = 1;
      while (k < l - 1 && legs[k] == 2) legs[k++] = 0;
      if (k >= l - 1) break;
      ++legs[k];
    }
  }
}

TEST_CASE("joins") {
  CHECK(join(complete_graph(1), disjoint_union(complete_graph(2), complete_graph(3))) ==
        join_of_completes(1, {2, 3}));
  CHECK(join_of_completes(1, {2, 3}).size() == 9);
  CHECK(join(complete_graph(1), complete_graph(1)) == path_graph(2));
  CHECK(join(empty_graph(2), complete_graph(1)).edges() == std::vector<Edge>{{1, 3}, {2, 3}});
  CHECK(join_of_completes(2, {1}) == complete_graph(3));
  CHECK(join_of_completes(1, {1, 1}).edges() == std::vector<Edge>{{1, 2}, {1, 3}});
}

TEST_CASE("join of completes: weakly closed and exactly two cut sets") {
  for (int n0 = 1; n0 <= 3; ++n0)
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        const Graph g = join_of_completes(n0, {a, b});
        CHECK(is_weakly_closed_labeling(g, Labeling::identity(g.order())));
        const auto primes = enumerate_minimal_primes(g);
        REQUIRE(primes.size() == 2);
        VertexSet core(n0);
        std::iota(core.begin(), core.end(), 1);
        CHECK(primes[1].cut_set == core);
      }
}

TEST_CASE("G_m and F_m") {
  CHECK(g_m(3).edges() == std::vector<Edge>{{1, 2}, {1, 4}, {1, 6}, {3, 4}, {3, 6}, {5, 6}});
  CHECK(f_m(2) == path_graph(4));
  CHECK(g_m(1) == path_graph(2));
  CHECK_THROWS_AS(g_m(0), std::invalid_argument);
  for (int m = 1; m <= 6; ++m) {
    const auto parts = bipartition(g_m(m));
    REQUIRE(parts);
    for (Vertex v : parts->first) CHECK(v % 2 == 1);
    for (Vertex v : parts->second) CHECK(v % 2 == 0);
    CHECK(parts->first.size() == static_cast<std::size_t>(m));
    CHECK(is_weakly_closed_labeling(g_m(m), Labeling::identity(2 * m)));
  }
}

TEST_CASE("star composition") {
  CHECK(star_compose(path_graph(3), 3, path_graph(3), 1) == path_graph(5));
  CHECK(star_compose(path_graph(2), 2, path_graph(2), 1) == path_graph(3));
  CHECK(star_compose(f_m(2), 4, f_m(2), 1) == path_graph(7));
  CHECK_THROWS_AS(star_compose(path_graph(3), 2, path_graph(3), 1), std::invalid_argument);
}

TEST_CASE("circ composition") {
  CHECK(circ_compose(path_graph(4), 4, path_graph(4), 1) == path_graph(5));
  CHECK(circ_compose(path_graph(3), 3, path_graph(3), 1) == path_graph(3));
  const Graph f3 = f_m(3);
  CHECK(f3.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {5, 6}});
  const Graph c = circ_compose(f3, 6, f3, 1);
  CHECK(c.order() == 9);
  CHECK(is_connected(c));
  CHECK(bipartition(c).has_value());
  CHECK(classify(c).unmixed);
  CHECK(classify(c).accessible);
  CHECK_THROWS_AS(circ_compose(f3, 2, f3, 1), std::invalid_argument);
}

TEST_CASE("compositions of F_n blocks keep the weakly closed labeling") {
  for (int a = 2; a <= 4; ++a)
    for (int b = 2; b <= 4; ++b) {
      const Graph fa = f_m(a), fb = f_m(b);
      const Graph s = star_compose(fa, fa.order(), fb, 1);
      if (s.order() <= 10) CHECK(is_weakly_closed_labeling(s, Labeling::identity(s.order())));
      const Graph c = circ_compose(fa, fa.order(), fb, 1);
      if (c.order() <= 10) CHECK(is_weakly_closed_labeling(c, Labeling::identity(c.order())));
    }
}
