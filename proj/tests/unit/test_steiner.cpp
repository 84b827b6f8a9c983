#include <doctest.h>

#include <numeric>
#include <random>

#include "bcs/error.hpp"
#include "bcs/generators.hpp"
#include "bcs/permutation.hpp"
#include "bcs/steiner.hpp"
#include "reference.hpp"

using namespace bcs;

namespace {

constexpr Color R = Color::Red;
constexpr Color B = Color::Blue;

VertexSet random_terminals(const BicoloredGraph& g, std::mt19937_64& rng, int max_count) {
  VertexSet all(static_cast<std::size_t>(g.size()));
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(max_count, g.size())));
  all.resize(static_cast<std::size_t>(count));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_SUITE("steiner") {
  TEST_CASE("interval greedy on small hand instances") {
    IntervalModel m{{{0, 1, B}, {1.5, 3, B}, {0.5, 2, R}}};
    auto g = interval_graph(m);
    auto res = select_steiners_interval(m, g, std::vector<Vertex>{0, 1});
    CHECK(res.connected);
    CHECK(res.steiner_vertices == VertexSet{2});

    res = select_steiners_interval(m, g, std::vector<Vertex>{0, 2});
    CHECK(res.steiner_vertices.empty());

    IntervalModel chain{{{0, 1, B}, {2, 3, B}, {4, 5, B}, {0.5, 2.5, R}, {2.4, 4.5, R}, {0.9, 1.1, R}}};
    g = interval_graph(chain);
    res = select_steiners_interval(chain, g, std::vector<Vertex>{0, 1, 2});
    CHECK(res.steiner_vertices == VertexSet{3, 4});
    CHECK(ref::steiner_size(g, {0, 1, 2}) == 2);
  }

  TEST_CASE("interval greedy refuses a disconnected substrate") {
    IntervalModel m{{{0, 1, B}, {2, 3, B}}};
    const auto g = interval_graph(m);
    CHECK_THROWS_AS(select_steiners_interval(m, g, std::vector<Vertex>{0, 1}), InputError);
    CHECK_THROWS_AS(select_steiners_interval(m, g, std::vector<Vertex>{}), InputError);
  }

  TEST_CASE("interval greedy is minimum and makes progress every step") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      std::mt19937_64 rng(seed);
      const int n = 2 + static_cast<int>(rng() % 13);
      const auto m = random_interval_model(n, rng(), {0.1, 0.5, 0.5});
      const auto g = interval_graph(m);
      if (count_components(g) != 1) continue;
      const auto terminals = random_terminals(g, rng, 5);
      SteinerTrace trace;
      const auto res = select_steiners_interval(m, g, terminals, &trace);
      VertexSet all = terminals;
      all.insert(all.end(), res.steiner_vertices.begin(), res.steiner_vertices.end());
      CHECK(is_connected(g, all));
      CHECK(static_cast<int>(res.steiner_vertices.size()) == ref::steiner_size(g, terminals).value());
      // Each step either merges components or pushes the leftmost one further
      // right; the count never grows and the reach always does.
      for (std::size_t i = 1; i < trace.components_before_step.size(); ++i) {
        CHECK(trace.components_before_step[i] <= trace.components_before_step[i - 1]);
        CHECK(trace.anchor_reach_before_step[i] > trace.anchor_reach_before_step[i - 1]);
      }
      if (!trace.components_before_step.empty()) {
        CHECK(static_cast<int>(trace.components_before_step.size()) == static_cast<int>(res.steiner_vertices.size()));
      }
      ++checked;
    }
    CHECK(checked > 100);
  }

  TEST_CASE("permutation steiner") {
    // Tops 1,2,3 with bottoms 2,3,1: segment 2 crosses both others, giving
    // the path 0 - 2 - 1.
    PermutationModel path{{{1, 2, B}, {2, 3, B}, {3, 1, R}}};
    auto g = permutation_graph(path);
    REQUIRE(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(steiner_permutation(path, g, std::vector<Vertex>{0, 2}).steiner_vertices.empty());
    CHECK(steiner_permutation(path, g, std::vector<Vertex>{0, 1}).steiner_vertices == VertexSet{2});
    CHECK(steiner_permutation(path, g, std::vector<Vertex>{1}).steiner_vertices.empty());

    PermutationModel apart{{{1, 1, R}, {2, 2, B}}};
    g = permutation_graph(apart);
    CHECK_THROWS_AS(steiner_permutation(apart, g, std::vector<Vertex>{0, 1}), InputError);
  }

  TEST_CASE("permutation steiner is minimum") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      std::mt19937_64 rng(seed);
      const int n = 2 + static_cast<int>(rng() % 9);
      const auto m = random_permutation_model(n, rng());
      const auto g = permutation_graph(m);
      if (count_components(g) != 1) continue;
      const auto terminals = random_terminals(g, rng, 5);
      const auto res = steiner_permutation(m, g, terminals);
      VertexSet all = terminals;
      all.insert(all.end(), res.steiner_vertices.begin(), res.steiner_vertices.end());
      CHECK(is_connected(g, all));
      CHECK(static_cast<int>(res.steiner_vertices.size()) == ref::steiner_size(g, terminals).value());
      ++checked;
    }
    CHECK(checked > 100);
  }

  TEST_CASE("permutation dynamic program handles disconnected diagrams") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      std::mt19937_64 rng(seed);
      const int n = 2 + static_cast<int>(rng() % 9);
      const auto m = random_permutation_model(n, rng());
      const auto g = permutation_graph(m);
      const auto terminals = random_terminals(g, rng, 4);
      const auto order = top_order(m);
      std::vector<int> bottom;
      std::vector<char> flag;
      for (Vertex v : order) {
        bottom.push_back(m.items[static_cast<std::size_t>(v)].bottom - 1);
        flag.push_back(std::binary_search(terminals.begin(), terminals.end(), v) ? 1 : 0);
      }
      const auto chosen = permutation_steiner_in_top_order(bottom, flag);
      const auto want = ref::steiner_size(g, terminals);
      REQUIRE(chosen.has_value() == want.has_value());
      if (chosen) CHECK(static_cast<int>(chosen->size() - terminals.size()) == *want);
    }
  }

  TEST_CASE("exact oracles") {
    const BicoloredGraph path({R, B, R}, std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(steiner_exact_oracle(path, std::vector<Vertex>{0, 2}).steiner_vertices == VertexSet{1});
    CHECK(steiner_exact_oracle(path, std::vector<Vertex>{0, 1, 2}).steiner_vertices.empty());
    CHECK(steiner_terminal_dp_size(path, std::vector<Vertex>{0, 2}) == 1);

    // 4 x 4 grid, three corners: both exact routes agree with plain enumeration.
    std::vector<Edge> edges;
    for (int y = 0; y < 4; ++y) {
      for (int x = 0; x < 4; ++x) {
        if (x < 3) edges.emplace_back(4 * y + x, 4 * y + x + 1);
        if (y < 3) edges.emplace_back(4 * y + x, 4 * (y + 1) + x);
      }
    }
    const BicoloredGraph grid(std::vector<Color>(16, R), edges);
    const std::vector<Vertex> corners{0, 3, 12};
    const int enumerated = ref::steiner_size(grid, corners).value();
    CHECK(enumerated == 4);
    CHECK(static_cast<int>(steiner_exact_oracle(grid, corners).steiner_vertices.size()) == enumerated);
    CHECK(steiner_terminal_dp_size(grid, corners) == enumerated);

    const BicoloredGraph apart({R, B}, std::vector<Edge>{});
    CHECK_FALSE(steiner_exact_oracle(apart, std::vector<Vertex>{0, 1}).connected);
    CHECK_FALSE(steiner_terminal_dp_size(apart, std::vector<Vertex>{0, 1}).has_value());
    CHECK_THROWS_AS(steiner_exact_oracle(BicoloredGraph(std::vector<Color>(30, R), std::vector<Edge>{}),
                                         std::vector<Vertex>{0}),
                    CapacityError);
  }

  TEST_CASE("the two exact routes agree on random graphs") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      std::mt19937_64 rng(seed);
      const auto g = random_graph(2 + static_cast<int>(rng() % 10), 0.3, rng());
      const auto terminals = random_terminals(g, rng, 5);
      const auto a = steiner_exact_oracle(g, terminals);
      const auto b = steiner_terminal_dp_size(g, terminals);
      REQUIRE(a.connected == b.has_value());
      if (b) CHECK(static_cast<int>(a.steiner_vertices.size()) == *b);
    }
  }
}
