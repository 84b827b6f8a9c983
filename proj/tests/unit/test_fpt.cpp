#include <doctest.h>

#include <random>
#include <set>

#include "bcs/error.hpp"
#include "bcs/fpt.hpp"
#include "bcs/generators.hpp"
#include "bcs/oracle.hpp"
#include "reference.hpp"

using namespace bcs;

namespace {

constexpr Color R = Color::Red;
constexpr Color B = Color::Blue;

LabelFunction random_labels(int n, int k, std::mt19937_64& rng) {
  LabelFunction f;
  for (int i = 0; i < n; ++i) f.label.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(k)));
  return f;
}

LabelFunction identity_labels(int n) {
  LabelFunction f;
  for (int i = 0; i < n; ++i) f.label.push_back(i);
  return f;
}

FptOptions exhaustive_options() {
  FptOptions o;
  o.hash.mode = HashMode::Deterministic;
  return o;
}

}  // namespace

TEST_SUITE("fpt") {
  TEST_CASE("family sizes") {
    CHECK(randomized_family_size(4, 1e-6) == 755);
    CHECK(randomized_family_size(1, 0.5) == 2);
    for (auto mode : {HashMode::Randomized, HashMode::Exhaustive, HashMode::PerSubset, HashMode::Deterministic}) {
      HashFamilyOptions o;
      o.mode = mode;
      CHECK(build_hash_family(5, 1, o).functions.size() >= 1);
    }
    HashFamilyOptions o;
    o.delta = 1e-6;
    CHECK(build_hash_family(10, 4, o).functions.size() == 755);
  }

  TEST_CASE("exhaustive family on three vertices splits every pair") {
    HashFamilyOptions o;
    o.mode = HashMode::Exhaustive;
    const auto fam = build_hash_family(3, 2, o);
    REQUIRE(fam.functions.size() == 8);
    std::set<std::vector<int>> distinct;
    for (const auto& f : fam.functions) distinct.insert(f.label);
    CHECK(distinct.size() == 8);
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        bool split = false;
        for (const auto& f : fam.functions) split = split || f.label[a] != f.label[b];
        CHECK(split);
      }
    }
  }

  TEST_CASE("per-subset family is injective on every k-subset") {
    HashFamilyOptions o;
    o.mode = HashMode::PerSubset;
    const auto fam = build_hash_family(7, 3, o);
    CHECK(fam.functions.size() == 35);
    for (int mask = 0; mask < 128; ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) != 3) continue;
      bool covered = false;
      for (const auto& f : fam.functions) {
        unsigned seen = 0;
        for (int v = 0; v < 7; ++v) {
          if ((mask >> v) & 1) seen |= 1u << f.label[v];
        }
        covered = covered || std::popcount(seen) == 3;
      }
      CHECK(covered);
    }
  }

  TEST_CASE("family construction guards") {
    CHECK_THROWS_AS(build_hash_family(3, 0), InputError);
    CHECK_THROWS_AS(build_hash_family(3, 4), InputError);
    HashFamilyOptions o;
    o.delta = 1.0;
    CHECK_THROWS_AS(build_hash_family(5, 2, o), InputError);
    o.delta = 0.5;
    o.mode = HashMode::Exhaustive;
    CHECK_THROWS_AS(build_hash_family(20, 10, o), CapacityError);
    o.mode = HashMode::Randomized;
    o.seed = 7;
    CHECK(build_hash_family(8, 3, o).functions[0].label == build_hash_family(8, 3, o).functions[0].label);
  }

  TEST_CASE("batch procedure examples") {
    // Red star center 0 with blue leaves 1 and 2.
    const BicoloredGraph star({R, B, B}, std::vector<Edge>{{0, 1}, {0, 2}});
    const auto f = identity_labels(3);
    const auto table = fill_table(star, f, 3);
    CHECK(batch_procedure(star, f, 0, 0b111, 2, table));
    CHECK_FALSE(batch_procedure(star, f, 0, 0b111, 1, table));
    CHECK(batch_procedure(star, f, 0, 0b001, 0, table));
    CHECK_FALSE(batch_procedure(star, f, 0, 0b001, 1, table));
    CHECK(batch_procedure(star, f, 1, 0b010, 1, table));

    const BicoloredGraph edge({R, B}, std::vector<Edge>{{0, 1}});
    const auto fe = identity_labels(2);
    CHECK(batch_procedure(edge, fe, 1, 0b11, 1, fill_table(edge, fe, 2)));
  }

  TEST_CASE("fill examples") {
    const BicoloredGraph edgeless({R, B, R}, std::vector<Edge>{});
    const auto f = identity_labels(3);
    const auto t = fill_table(edgeless, f, 3);
    for (Vertex v = 0; v < 3; ++v) {
      for (LabelSet l = 1; l < 8; ++l) {
        if (std::popcount(l) > 1) CHECK(t.blue_mask(v, l) == 0);
      }
    }
    const BicoloredGraph path({R, B, R, B}, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    const auto tp = fill_table(path, identity_labels(4), 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(tp.get(v, 0b1111, 2));
    CHECK_THROWS_AS(fill_table(path, LabelFunction{{0, 1, 2, 4}}, 4), InputError);
    CHECK_THROWS_AS(fill_table(path, identity_labels(4), kMaxLabels + 1), CapacityError);
  }

  TEST_CASE("both fill strategies agree with the literal table definition") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const int k = 1 + static_cast<int>(rng() % std::min(n, 4));
      const auto g = random_graph(n, 0.45, rng());
      const auto f = random_labels(n, k, rng);
      const auto fast = fill_table(g, f, k, FillStrategy::SubsetConvolution);
      const auto slow = fill_table(g, f, k, FillStrategy::Batch);
      CHECK(fast == slow);
      const int blues = g.count(B);
      for (Vertex v = 0; v < n; ++v) {
        for (LabelSet l = 1; l < (1u << k); ++l) {
          for (int b = 0; b <= std::popcount(l); ++b) {
            const bool bit = fast.get(v, l, b);
            CHECK(bit == ref::table_bit(g, f, v, l, b));
            if (b > blues) CHECK_FALSE(bit);
          }
        }
      }
    }
  }

  TEST_CASE("witness recovery realizes every set entry") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 6);
      const int k = std::min(n, 4);
      const auto g = random_graph(n, 0.5, rng());
      const auto f = random_labels(n, k, rng);
      const auto t = fill_table(g, f, k);
      for (Vertex v = 0; v < n; ++v) {
        for (LabelSet l = 1; l < (1u << k); ++l) {
          for (int b = 0; b <= std::popcount(l); ++b) {
            if (!t.get(v, l, b)) {
              if (b == 0 && l == 1 && f.label[v] != 0) {
                CHECK_THROWS_AS(recover_witness(g, f, t, v, l, b), InputError);
              }
              continue;
            }
            const auto w = recover_witness(g, f, t, v, l, b);
            CHECK(is_connected(g, w));
            CHECK(std::find(w.begin(), w.end(), v) != w.end());
            LabelSet seen = 0;
            int blue = 0;
            for (Vertex u : w) {
              seen |= LabelSet{1} << f.label[u];
              blue += g.color(u) == B ? 1 : 0;
            }
            CHECK(seen == l);
            CHECK(static_cast<int>(w.size()) == std::popcount(l));
            CHECK(blue == b);
          }
        }
      }
    }
  }

  TEST_CASE("decision examples") {
    const BicoloredGraph edge({R, B}, std::vector<Edge>{{0, 1}});
    auto res = k_bcs(edge, 2, exhaustive_options());
    REQUIRE(res.found);
    CHECK(res.witness->vertices == VertexSet{0, 1});
    CHECK_FALSE(k_bcs(edge, 1).found);
    CHECK_FALSE(k_bcs(edge, 4).found);

    const BicoloredGraph reds({R, R, R}, std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(max_bcs_fpt(reds, 3).empty());
    const BicoloredGraph k4({R, B, R, B}, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(max_bcs_fpt(k4, 4, exhaustive_options()).size() == 4);
  }

  TEST_CASE("deterministic decisions match the oracle for every even k") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto g = random_graph(9, 0.3, seed);
      for (int k = 2; k <= 8; k += 2) {
        const auto res = k_bcs(g, k, exhaustive_options());
        CHECK(res.found == k_bcs_oracle(g, k));
        if (res.found) {
          CHECK(validate_solution(g, *res.witness));
          CHECK(res.witness->size() == k);
        }
      }
      CHECK(max_bcs_fpt(g, 9, exhaustive_options()).size() == bcs_oracle(g).size());
    }
  }

  TEST_CASE("randomized yes answers always carry a witness") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      const auto g = random_graph(8, 0.4, rng());
      FptOptions o;
      o.hash.seed = rng();
      o.hash.delta = 0.2;
      o.workers = 2;
      const auto res = k_bcs(g, 4, o);
      if (res.found) {
        CHECK(validate_solution(g, *res.witness));
        CHECK(k_bcs_oracle(g, 4));
      }
    }
  }
}
