#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossratio/drawing.hpp"

namespace crossratio {

enum class SearchMode {
  /// Grow schemes only by pairs that can break the current Kuratowski subgraph.
  kBranching,
  /// Test every scheme of every size; the independent reference.
  kExhaustive,
};

[[nodiscard]] std::string_view to_string(SearchMode m);

struct SearchOptions {
  SearchMode mode = SearchMode::kBranching;
  /// Ceiling on planarity tests. Exhaustive runs whose precomputed estimate
  /// exceeds it are refused; branching runs stop with BudgetExceeded.
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  /// Prune branching states by packing edge-disjoint Kuratowski subgraphs.
  bool lower_bound_pruning = true;
  /// A known drawing; once all smaller schemes are exhausted it closes the
  /// search at its crossing count instead of searching for a witness.
  std::optional<TopologicalDrawing> witness_hint;
};

class BudgetExceeded : public GraphError {
 public:
  using GraphError::GraphError;
};

struct ExhaustionLog {
  /// Planarity tests per scheme size (index = number of crossing pairs).
  std::vector<std::uint64_t> tests_per_size;
  std::uint64_t planarity_tests = 0;
  std::uint64_t search_nodes = 0;
  /// Every scheme containing the forced pairs with fewer pairs than this is
  /// non-planar.
  std::size_t exhausted_below = 0;
  /// Precomputed scheme count (exhaustive mode only).
  std::uint64_t estimate = 0;
};

enum class Claim {
  kCrEquals,      ///< cr = value (under the forced pairs, if any)
  kCrExceeds,     ///< cr > value
  kCrAtLeast,     ///< cr >= value
  kParallelLemma  ///< forced crossing implies >= value crossings
};

[[nodiscard]] std::string_view to_string(Claim c);

struct Certificate {
  Claim claim = Claim::kCrAtLeast;
  bool holds = false;
  std::size_t value = 0;
  std::vector<EdgePair> forced;
  std::optional<CrossingScheme> witness_scheme;
  std::optional<TopologicalDrawing> witness;
  /// Crossings of the witness after smoothing; below the scheme size only
  /// when forced pairs touch instead of cross.
  std::size_t witness_crossings = 0;
  ExhaustionLog log;
  SearchMode mode = SearchMode::kBranching;
  unsigned threads = 1;
  /// Not part of the certificate proper; excluded from serialized output.
  double wall_seconds = 0;

  [[nodiscard]] std::string summary() const;
};

/// Smallest k in [|forced|, k_max] such that some crossing scheme of k
/// independent pairs containing `forced` has a planar planarization. Returns
/// kCrEquals with a witness, or kCrExceeds when none exists up to k_max.
/// Throws GraphError for forced pairs that are adjacent or unknown, and
/// BudgetExceeded past the planarity-test ceiling.
[[nodiscard]] Certificate exact_cr(const Graph& g, std::size_t k_max, const std::vector<EdgePair>& forced = {},
                                   const SearchOptions& options = {});

/// Exhausts scheme sizes |forced| .. k-1. holds is false when a planar scheme
/// turns up; the certificate then carries it as a counterexample witness.
[[nodiscard]] Certificate certify_lower(const Graph& g, std::size_t k, const std::vector<EdgePair>& forced = {},
                                        const SearchOptions& options = {});

/// Checks that e1, e2 are independent and each pair of endpoints is joined by
/// at least ell-1 paths of length two, then certify_lower(g, ell, {(e1, e2)}).
/// Throws GraphError when the structure is missing.
[[nodiscard]] Certificate verify_parallel_lemma(const Graph& g, EdgeId e1, EdgeId e2, std::size_t ell,
                                                const SearchOptions& options = {});

/// Number of schemes the exhaustive mode tests for sizes |forced| .. k.
[[nodiscard]] std::uint64_t exhaustive_estimate(const Graph& g, std::size_t k,
                                                const std::vector<EdgePair>& forced = {});

}  // namespace crossratio
