#include "bcs/fpt.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <exception>
#include <thread>

#include "bcs/error.hpp"

namespace bcs {
namespace {

constexpr std::size_t kMaxTableWords = std::size_t{1} << 28;

std::uint64_t checked_power(int base, int exponent, std::uint64_t cap) {
  std::uint64_t value = 1;
  for (int i = 0; i < exponent; ++i) {
    value *= static_cast<std::uint64_t>(base);
    if (value > cap) return cap + 1;
  }
  return value;
}

std::uint64_t checked_binomial(int n, int k, std::uint64_t cap) {
  std::uint64_t value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (value > cap) return cap + 1;
  }
  return value;
}

// OR over b1 in `left` of (right << b1).
std::uint32_t add_counts(std::uint32_t left, std::uint32_t right) {
  std::uint32_t out = 0;
  while (left != 0) {
    const int b = std::countr_zero(left);
    out |= right << b;
    left &= left - 1;
  }
  return out;
}

void check_labels(const BicoloredGraph& g, const LabelFunction& f, int k) {
  if (k < 1 || k > kMaxLabels) {
    throw CapacityError("label count k=" + std::to_string(k) + " outside 1.." +
                        std::to_string(kMaxLabels));
  }
  if (static_cast<int>(f.label.size()) != g.size()) {
    throw InputError("label function does not cover every vertex");
  }
  for (int l : f.label) {
    if (l < 0 || l >= k) throw InputError("label outside 0..k-1");
  }
  if (static_cast<std::size_t>(std::max(g.size(), 1)) << k > kMaxTableWords) {
    throw CapacityError("table for n=" + std::to_string(g.size()) + ", k=" + std::to_string(k) +
                        " exceeds the memory guard");
  }
}

int blue_of(const BicoloredGraph& g, Vertex v) { return g.color(v) == Color::Blue ? 1 : 0; }

// Neighbor reach N[Y] and pairwise closure P[X] for one vertex v, over
// subsets of `scope`. N[Y] holds blue counts of a connected labeled set
// hanging off one neighbor; P[X] holds blue counts of disjoint unions of such
// sets covering exactly X.
struct Closure {
  std::vector<std::uint32_t> reach;
  std::vector<std::uint32_t> merged;
};

void close_subset(const BicoloredGraph& g, const DPTable& table, Vertex v, LabelSet x,
                  Closure& c) {
  std::uint32_t n_mask = 0;
  for (Vertex u : g.neighbors(v)) n_mask |= table.blue_mask(u, x);
  c.reach[x] = n_mask;
  const LabelSet low = x & (~x + 1);
  const LabelSet rest = x ^ low;
  std::uint32_t p = 0;
  for (LabelSet sub = rest;; sub = (sub - 1) & rest) {
    const LabelSet y = low | sub;
    if (c.reach[y] != 0) p |= add_counts(c.reach[y], c.merged[x ^ y]);
    if (sub == 0) break;
  }
  c.merged[x] = p;
}

Closure closure_over(const BicoloredGraph& g, const DPTable& table, Vertex v, LabelSet scope) {
  Closure c;
  c.reach.assign(std::size_t{1} << table.k(), 0);
  c.merged.assign(std::size_t{1} << table.k(), 0);
  c.merged[0] = 1;
  // Increasing numeric order visits every subset after its own subsets.
  for (LabelSet sub = 1; sub <= scope; ++sub) {
    if ((sub & ~scope) != 0) continue;
    close_subset(g, table, v, sub, c);
  }
  return c;
}

void fill_fast(const BicoloredGraph& g, const LabelFunction& f, int k, DPTable& table) {
  const int n = g.size();
  const LabelSet full = (LabelSet{1} << k) - 1;
  std::vector<Closure> per_vertex(static_cast<std::size_t>(n));
  for (auto& c : per_vertex) {
    c.reach.assign(std::size_t{1} << k, 0);
    c.merged.assign(std::size_t{1} << k, 0);
    c.merged[0] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    const LabelSet own = LabelSet{1} << f.label[static_cast<std::size_t>(v)];
    table.set_blue_mask(v, own, std::uint32_t{1} << blue_of(g, v));
  }
  // Level s fills label sets of size s + 1 from residual sets of size s.
  for (int s = 1; s < k; ++s) {
    for (Vertex v = 0; v < n; ++v) {
      const LabelSet own = LabelSet{1} << f.label[static_cast<std::size_t>(v)];
      auto& c = per_vertex[static_cast<std::size_t>(v)];
      for (LabelSet x = 1; x <= full; ++x) {
        if ((x & own) != 0 || std::popcount(x) != s) continue;
        close_subset(g, table, v, x, c);
        table.set_blue_mask(v, x | own, c.merged[x] << blue_of(g, v));
      }
    }
  }
}

void fill_batch(const BicoloredGraph& g, const LabelFunction& f, int k, DPTable& table) {
  const int n = g.size();
  const LabelSet full = (LabelSet{1} << k) - 1;
  for (Vertex v = 0; v < n; ++v) {
    const LabelSet own = LabelSet{1} << f.label[static_cast<std::size_t>(v)];
    table.set_blue_mask(v, own, std::uint32_t{1} << blue_of(g, v));
  }
  for (int size = 2; size <= k; ++size) {
    for (LabelSet labels = 1; labels <= full; ++labels) {
      if (std::popcount(labels) != size) continue;
      for (Vertex v = 0; v < n; ++v) {
        if ((labels >> f.label[static_cast<std::size_t>(v)] & 1) == 0) continue;
        std::uint32_t mask = 0;
        for (int b = 0; b <= size; ++b) {
          if (batch_procedure(g, f, v, labels, b, table)) mask |= std::uint32_t{1} << b;
        }
        table.set_blue_mask(v, labels, mask);
      }
    }
  }
}

void decompose(const BicoloredGraph& g, const LabelFunction& f, const DPTable& table, Vertex v,
               const Closure& c, LabelSet x, int blue, VertexSet& out);

void expand(const BicoloredGraph& g, const LabelFunction& f, const DPTable& table, Vertex v,
            LabelSet labels, int blue, VertexSet& out) {
  out.push_back(v);
  const LabelSet x = labels & ~(LabelSet{1} << f.label[static_cast<std::size_t>(v)]);
  const int rest = blue - blue_of(g, v);
  if (x == 0) return;
  const Closure c = closure_over(g, table, v, x);
  decompose(g, f, table, v, c, x, rest, out);
}

void decompose(const BicoloredGraph& g, const LabelFunction& f, const DPTable& table, Vertex v,
               const Closure& c, LabelSet x, int blue, VertexSet& out) {
  if (x == 0) return;
  const LabelSet low = x & (~x + 1);
  const LabelSet rest = x ^ low;
  for (LabelSet sub = rest;; sub = (sub - 1) & rest) {
    const LabelSet y = low | sub;
    for (int b1 = 0; b1 <= blue; ++b1) {
      if ((c.reach[y] >> b1 & 1) == 0 || (c.merged[x ^ y] >> (blue - b1) & 1) == 0) continue;
      for (Vertex u : g.neighbors(v)) {
        if (!table.get(u, y, b1)) continue;
        expand(g, f, table, u, y, b1, out);
        decompose(g, f, table, v, c, x ^ y, blue - b1, out);
        return;
      }
    }
    if (sub == 0) break;
  }
  throw InvariantError("table entry has no derivation");
}

KbcsResult run_function(const BicoloredGraph& g, const LabelFunction& f, int k,
                        FillStrategy strategy) {
  KbcsResult result;
  const DPTable table = fill_table(g, f, k, strategy);
  const LabelSet full = (LabelSet{1} << k) - 1;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!table.get(v, full, k / 2)) continue;
    auto witness = recover_witness(g, f, table, v, full, k / 2);
    auto sol = make_solution(g, std::move(witness), kFptTag);
    if (!validate_solution(g, sol) || sol.size() != k) {
      throw InvariantError("recovered witness is not a balanced connected subgraph of size k");
    }
    result.found = true;
    result.witness = std::move(sol);
    return result;
  }
  return result;
}

}  // namespace

std::uint64_t randomized_family_size(int k, double delta) {
  return static_cast<std::uint64_t>(std::ceil(std::exp(static_cast<double>(k)) * std::log(1.0 / delta)));
}

HashFamily build_hash_family(int n, int k, HashFamilyOptions options) {
  if (k < 1 || k > n) throw InputError("hash family needs 1 <= k <= n");
  if (!(options.delta > 0.0 && options.delta < 1.0)) throw InputError("delta must lie in (0, 1)");
  HashFamily family;
  family.n = n;
  family.k = k;
  family.delta = options.delta;
  HashMode mode = options.mode;
  if (mode == HashMode::Deterministic) {
    mode = checked_power(k, n, options.exhaustive_cap) <= options.exhaustive_cap
               ? HashMode::Exhaustive
               : HashMode::PerSubset;
  }
  family.mode = mode;
  const auto un = static_cast<std::size_t>(n);

  switch (mode) {
    case HashMode::Randomized: {
      const std::uint64_t count = randomized_family_size(k, options.delta);
      if (count > options.subset_cap) throw CapacityError("randomized hash family too large");
      std::mt19937_64 rng(options.seed);
      std::uniform_int_distribution<int> pick(0, k - 1);
      family.functions.resize(count);
      for (auto& f : family.functions) {
        f.label.resize(un);
        for (auto& l : f.label) l = pick(rng);
      }
      break;
    }
    case HashMode::Exhaustive: {
      const std::uint64_t count = checked_power(k, n, options.exhaustive_cap);
      if (count > options.exhaustive_cap) {
        throw CapacityError("k^n = " + std::to_string(k) + "^" + std::to_string(n) +
                            " exceeds the exhaustive cap");
      }
      std::vector<int> digits(un, 0);
      for (std::uint64_t i = 0; i < count; ++i) {
        family.functions.push_back({digits});
        for (std::size_t d = 0; d < un; ++d) {
          if (++digits[d] < k) break;
          digits[d] = 0;
        }
      }
      break;
    }
    case HashMode::PerSubset:
    case HashMode::Deterministic: {
      if (checked_binomial(n, k, options.subset_cap) > options.subset_cap) {
        throw CapacityError("C(n, k) exceeds the per-subset cap");
      }
      std::vector<int> pick(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
      while (true) {
        LabelFunction f;
        f.label.resize(un);
        for (int v = 0; v < n; ++v) f.label[static_cast<std::size_t>(v)] = v % k;
        for (int i = 0; i < k; ++i) f.label[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])] = i;
        family.functions.push_back(std::move(f));
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
          pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
      }
      break;
    }
  }
  return family;
}

DPTable::DPTable(int n, int k)
    : n_(n), k_(k), bits_(static_cast<std::size_t>(n) << k, 0) {}

bool DPTable::get(Vertex v, LabelSet labels, int blue) const {
  if (blue < 0 || blue > k_) return false;
  return (bits_[index(v, labels)] >> blue & 1) != 0;
}

bool batch_procedure(const BicoloredGraph& g, const LabelFunction& f, Vertex v, LabelSet labels,
                     int blue, const DPTable& table) {
  const LabelSet own = LabelSet{1} << f.label[static_cast<std::size_t>(v)];
  if ((labels & own) == 0) throw InputError("batch procedure requires f(v) in L");
  const int size = std::popcount(labels);
  if (blue < 0 || blue > size) return false;
  const LabelSet residual = labels & ~own;
  const int res_blue = blue - blue_of(g, v);
  const int res_red = (size - blue) - (1 - blue_of(g, v));
  if (res_blue < 0 || res_red < 0) return false;

  // S as a membership grid over (label subset of the residual, blue count).
  const int k = table.k();
  const std::size_t width = static_cast<std::size_t>(k) + 1;
  std::vector<char> in_s((std::size_t{1} << k) * width, 0);
  auto slot = [&](LabelSet l, int b) { return static_cast<std::size_t>(l) * width + static_cast<std::size_t>(b); };
  auto fits = [&](LabelSet l, int b) {
    const int r = std::popcount(l) - b;
    return b >= 0 && r >= 0 && b <= res_blue && r <= res_red;
  };

  // Initialize.
  in_s[slot(0, 0)] = 1;
  for (LabelSet sub = residual; sub != 0; sub = (sub - 1) & residual) {
    for (int b = 0; b <= std::popcount(sub); ++b) {
      if (!fits(sub, b)) continue;
      for (Vertex u : g.neighbors(v)) {
        if (table.get(u, sub, b)) {
          in_s[slot(sub, b)] = 1;
          break;
        }
      }
    }
  }

  // Update: close under unions of label-disjoint pairs, scanning pairs in
  // (label set, blue count) order until nothing new appears.
  std::vector<std::pair<LabelSet, int>> members;
  for (LabelSet l = 0; l <= residual; ++l) {
    if ((l & ~residual) != 0) continue;
    for (int b = 0; b <= std::popcount(l); ++b) {
      if (in_s[slot(l, b)]) members.emplace_back(l, b);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto [l1, b1] = members[i];
        const auto [l2, b2] = members[j];
        if ((l1 & l2) != 0) continue;
        const LabelSet l = l1 | l2;
        const int b = b1 + b2;
        if (!fits(l, b) || in_s[slot(l, b)]) continue;
        in_s[slot(l, b)] = 1;
        members.emplace_back(l, b);
        changed = true;
      }
    }
    std::sort(members.begin(), members.end());
  }

  // Decide.
  return in_s[slot(residual, res_blue)] != 0;
}

DPTable fill_table(const BicoloredGraph& g, const LabelFunction& f, int k, FillStrategy strategy) {
  check_labels(g, f, k);
  DPTable table(g.size(), k);
  if (strategy == FillStrategy::Batch) {
    fill_batch(g, f, k, table);
  } else {
    fill_fast(g, f, k, table);
  }
  return table;
}

VertexSet recover_witness(const BicoloredGraph& g, const LabelFunction& f, const DPTable& table,
                          Vertex v, LabelSet labels, int blue) {
  if (!g.contains(v) || !table.get(v, labels, blue)) {
    throw InputError("witness requested for an unset table entry");
  }
  VertexSet out;
  expand(g, f, table, v, labels, blue, out);
  std::sort(out.begin(), out.end());
  return out;
}

KbcsResult k_bcs(const BicoloredGraph& g, int k, const FptOptions& options) {
  if (k < 1) throw InputError("k must be positive");
  KbcsResult result;
  if (k % 2 != 0 || k > g.size() || k / 2 > std::min(g.count(Color::Red), g.count(Color::Blue))) {
    return result;
  }
  const HashFamily family = build_hash_family(g.size(), k, options.hash);
  const std::size_t total = family.functions.size();
  const std::size_t workers =
      static_cast<std::size_t>(std::max(1, std::min<int>(options.workers, static_cast<int>(total))));

  // Batches of `workers` functions; within a batch the lowest index wins so
  // the answer does not depend on the worker count.
  for (std::size_t start = 0; start < total; start += workers) {
    const std::size_t end = std::min(total, start + workers);
    std::vector<KbcsResult> outcomes(end - start);
    if (end - start == 1) {
      outcomes[0] = run_function(g, family.functions[start], k, options.strategy);
    } else {
      std::vector<std::thread> threads;
      std::vector<std::exception_ptr> errors(end - start);
      for (std::size_t i = start; i < end; ++i) {
        threads.emplace_back([&, i] {
          try {
            outcomes[i - start] = run_function(g, family.functions[i], k, options.strategy);
          } catch (...) {
            errors[i - start] = std::current_exception();
          }
        });
      }
      for (auto& t : threads) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (std::size_t i = start; i < end; ++i) {
      if (outcomes[i - start].found) {
        auto found = std::move(outcomes[i - start]);
        found.functions_tried = i + 1;
        return found;
      }
    }
  }
  result.functions_tried = total;
  return result;
}

Solution max_bcs_fpt(const BicoloredGraph& g, int k_max, const FptOptions& options) {
  int k = std::min({k_max, g.size(), balance_upper_bound(g)});
  if (k % 2 != 0) --k;
  for (; k >= 2; k -= 2) {
    auto result = k_bcs(g, k, options);
    if (result.found) return *result.witness;
  }
  return make_solution(g, {}, kFptTag);
}

}  // namespace bcs
