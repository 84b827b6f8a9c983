#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bcs/graph.hpp"

namespace bcs {

/// Labels are 0..k-1 internally; label i is printed as i + 1.
struct LabelFunction {
  std::vector<int> label;  // per vertex
};

/// Subset of {0..k-1} as a bitmask.
using LabelSet = std::uint32_t;

inline constexpr int kMaxLabels = 20;

enum class HashMode {
  Randomized,  // independent uniform labelings, ceil(e^k ln(1/delta)) of them
  Exhaustive,  // all k^n labelings; refused above the exhaustive cap
  PerSubset,   // one labeling per k-subset, injective on that subset
  Deterministic,  // Exhaustive when k^n fits the cap, else PerSubset
};

struct HashFamilyOptions {
  HashMode mode = HashMode::Randomized;
  double delta = 0.01;
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 16;
  std::uint64_t subset_cap = std::uint64_t{1} << 20;
};

struct HashFamily {
  HashMode mode = HashMode::Randomized;
  int n = 0;
  int k = 0;
  double delta = 0.0;
  std::vector<LabelFunction> functions;
};

/// Number of labelings the randomized mode draws: ceil(e^k * ln(1/delta)).
std::uint64_t randomized_family_size(int k, double delta);

/// Throws InputError unless 1 <= k <= n and 0 < delta < 1; CapacityError
/// when the requested family would exceed its cap.
HashFamily build_hash_family(int n, int k, HashFamilyOptions options = {});

/// Bit table M[v; L; (b, r)] with r = |L| - b. For each (v, L) one word
/// holds bit b set iff some connected U containing v has exactly the labels
/// L, one vertex per label, and b blue vertices.
class DPTable {
 public:
  DPTable() = default;
  DPTable(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  bool get(Vertex v, LabelSet labels, int blue) const;
  std::uint32_t blue_mask(Vertex v, LabelSet labels) const {
    return bits_[index(v, labels)];
  }
  void set_blue_mask(Vertex v, LabelSet labels, std::uint32_t mask) { bits_[index(v, labels)] = mask; }

  friend bool operator==(const DPTable&, const DPTable&) = default;

 private:
  std::size_t index(Vertex v, LabelSet labels) const {
    return (static_cast<std::size_t>(v) << k_) | labels;
  }
  int n_ = 0;
  int k_ = 0;
  std::vector<std::uint32_t> bits_;
};

enum class FillStrategy {
  SubsetConvolution,  // closure of the batch procedure computed as a subset convolution
  Batch,              // literal Initialize / Update / Decide per entry
};

/// One entry by the batch procedure. Requires f(v) in L, b <= |L|, and every
/// entry for label sets smaller than L already present in `table`.
bool batch_procedure(const BicoloredGraph& g, const LabelFunction& f, Vertex v, LabelSet labels,
                     int blue, const DPTable& table);

/// Throws CapacityError when k exceeds kMaxLabels or the table would exceed
/// 2^28 words; InputError when a label lies outside 0..k-1.
DPTable fill_table(const BicoloredGraph& g, const LabelFunction& f, int k,
                   FillStrategy strategy = FillStrategy::SubsetConvolution);

/// Recovers a vertex set realizing a set entry; throws InputError if the
/// entry is not set.
VertexSet recover_witness(const BicoloredGraph& g, const LabelFunction& f, const DPTable& table,
                          Vertex v, LabelSet labels, int blue);

struct FptOptions {
  HashFamilyOptions hash;
  FillStrategy strategy = FillStrategy::SubsetConvolution;
  int workers = 1;
};

struct KbcsResult {
  bool found = false;
  std::optional<Solution> witness;
  std::size_t functions_tried = 0;
};

/// Decides whether a balanced connected subgraph on exactly k vertices
/// exists. Odd k and k > n answer "no" at once. A "yes" always carries a
/// validated witness; in randomized mode a "no" may be wrong with
/// probability at most delta.
KbcsResult k_bcs(const BicoloredGraph& g, int k, const FptOptions& options = {});

/// Largest even k <= k_max with a "yes" answer, searched from the top.
Solution max_bcs_fpt(const BicoloredGraph& g, int k_max, const FptOptions& options = {});

inline constexpr const char* kFptTag = "fpt";

}  // namespace bcs
