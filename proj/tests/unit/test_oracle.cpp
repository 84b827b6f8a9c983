#include <doctest.h>

#include <random>

#include "bcs/error.hpp"
#include "bcs/generators.hpp"
#include "bcs/oracle.hpp"
#include "reference.hpp"

using namespace bcs;

namespace {

constexpr Color R = Color::Red;
constexpr Color B = Color::Blue;

BicoloredGraph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return BicoloredGraph(std::vector<Color>(static_cast<std::size_t>(n), R), edges);
}

BicoloredGraph checkerboard3() {
  std::vector<Color> colors;
  std::vector<Edge> edges;
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) {
      colors.push_back((x + y) % 2 == 0 ? R : B);
      const int id = 3 * y + x;
      if (x < 2) edges.emplace_back(id, id + 1);
      if (y < 2) edges.emplace_back(id, id + 3);
    }
  }
  return BicoloredGraph(colors, edges);
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("connected subsets are enumerated once each") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto g = random_graph(9, 0.3, seed);
      const auto adj = ref::adjacency(g);
      std::vector<int> seen(1u << 9, 0);
      for_each_connected_subset(g, 9, [&](std::uint64_t m) {
        ++seen[m];
        return false;
      });
      for (ref::Mask m = 1; m < (1u << 9); ++m) CHECK(seen[m] == (ref::mask_connected(adj, m) ? 1 : 0));
    }
    int calls = 0;
    for_each_connected_subset(cycle(6), 6, [&](std::uint64_t) { return ++calls == 3; });
    CHECK(calls == 3);
  }

  TEST_CASE("maximum examples") {
    CHECK(bcs_oracle(BicoloredGraph({R, B}, std::vector<Edge>{{0, 1}})).size() == 2);
    const BicoloredGraph star({R, B, B, B}, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(bcs_oracle(star).size() == 2);
    const auto grid = checkerboard3();
    const auto best = bcs_oracle(grid);
    CHECK(best.size() == 8);
    CHECK(validate_solution(grid, best));
    CHECK(bcs_oracle(cycle(4)).empty());
    CHECK_THROWS_AS(bcs_oracle(cycle(19)), CapacityError);
    CHECK(bcs_oracle(cycle(19), OracleBudget{20, 8}).empty());
  }

  TEST_CASE("exact-size examples") {
    const BicoloredGraph path({R, B, B, R}, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(k_bcs_oracle(path, 0));
    CHECK(k_bcs_oracle(path, 4));
    CHECK(k_bcs_oracle(path, 2));
    CHECK_FALSE(k_bcs_oracle(path, 3));
    CHECK(bcs_oracle_reaches(path, 4));
    CHECK_FALSE(bcs_oracle_reaches(path, 5));
  }

  TEST_CASE("oracle agrees with the plain subset scan") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 80; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 12);
      const auto g = random_graph(n, 0.25, rng());
      const auto best = bcs_oracle(g);
      CHECK(validate_solution(g, best));
      CHECK(best.size() == ref::max_balanced(g));
      for (int k = 0; k <= n; ++k) {
        bool hit = k == 0;
        for_each_connected_subset(g, k, [&](std::uint64_t m) {
          int red = 0;
          for (int v = 0; v < n; ++v) red += ((m >> v) & 1) && g.color(v) == R ? 1 : 0;
          hit = std::popcount(m) == static_cast<unsigned>(k) && 2 * red == k;
          return hit;
        });
        CHECK(k_bcs_oracle(g, k) == hit);
      }
    }
  }

  TEST_CASE("rectilinear Steiner examples") {
    const std::vector<GridPoint> two{{0, 0}, {3, 0}};
    CHECK(rst_oracle(two) == 3);
    const std::vector<GridPoint> three{{0, 0}, {2, 0}, {1, 1}};
    CHECK(rst_oracle(three) == 3);
    const std::vector<GridPoint> one{{4, 4}};
    CHECK(rst_oracle(one) == 0);
    const std::vector<GridPoint> corners{{0, 0}, {2, 0}, {0, 2}, {2, 2}};
    CHECK(rst_oracle(corners) == 6);
    const std::vector<GridPoint> dup{{0, 0}, {0, 0}, {1, 1}};
    CHECK(rst_oracle(dup) == 2);
    CHECK_THROWS_AS(rst_oracle(std::vector<GridPoint>{}), InputError);
    CHECK_THROWS_AS(rst_oracle(std::vector<GridPoint>{{0, 0}, {7, 0}}), CapacityError);
  }

  TEST_CASE("two and three points have closed-form lengths") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<GridPoint> p;
      for (int i = 0; i < 3; ++i) p.emplace_back(static_cast<int>(rng() % 5), static_cast<int>(rng() % 5));
      const int manhattan = std::abs(p[0].first - p[1].first) + std::abs(p[0].second - p[1].second);
      CHECK(rst_oracle(std::span(p).first(2)) == manhattan);
      // Three terminals: half the bounding-box perimeter.
      const auto [xl, xh] = std::minmax({p[0].first, p[1].first, p[2].first});
      const auto [yl, yh] = std::minmax({p[0].second, p[1].second, p[2].second});
      CHECK(rst_oracle(p) == (xh - xl) + (yh - yl));
    }
  }

  TEST_CASE("dominating set examples") {
    const BicoloredGraph star({R, R, R, R}, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(dominating_set_oracle(star, 1));
    CHECK_FALSE(dominating_set_oracle(cycle(5), 1));
    CHECK(dominating_set_oracle(cycle(5), 2));
    CHECK(dominating_set_oracle(cycle(6), 2));
    CHECK_FALSE(dominating_set_oracle(BicoloredGraph({R, R, R}, std::vector<Edge>{}), 2));
    CHECK_THROWS_AS(dominating_set_oracle(cycle(13), 3), CapacityError);
    CHECK_THROWS_AS(dominating_set_oracle(cycle(5), -1), InputError);
  }
}
