#pragma once
// Exact minimum geodetic / hull set computation by pruned exhaustive
// search, and parameter-space sweeps that confront each closed-form claim
// with its brute-force oracle. Searches fix the vertex {1,...,n} in every
// candidate (vertex-transitivity) and report the lexicographically
// smallest minimum-cardinality witness, independent of thread count.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kneser/core.hpp"

namespace kneser {

struct SearchBudget {
  std::uint64_t max_subset_size = 8;
  std::uint64_t max_candidates = 100'000'000;  // cap on examined subsets
  double time_limit_s = 300.0;
};

/// What a report is about: a searched parameter or a named formula check.
enum class Quantity {
  Gn,
  Ghn,
  Theorem1,
  Theorem3,
  Theorem5,
  Theorem7,
  Corollary2,
  Corollary4,
  Corollary8,
};
const char* to_string(Quantity q);
std::optional<Quantity> quantity_from_string(std::string_view s);

/// Outcome of one search or one sweep instance.
struct Report {
  GraphParams params;
  Quantity quantity = Quantity::Gn;
  std::optional<std::uint64_t> value;
  std::optional<std::vector<KVertex>> witness;  // re-verified before reporting
  bool agrees_with_claim = true;
  std::optional<std::string> discrepancy_note;
  bool budget_exceeded = false;
  std::optional<std::uint64_t> lower_bound;  // best bounds when inexact
  std::optional<std::uint64_t> upper_bound;
  double elapsed_s = 0.0;
};

/// Smallest c such that some c-subset is a geodetic set, with the
/// lexicographically smallest witness. Budget exhaustion is reported in the
/// Report (bounds, note), never thrown.
Report min_geodetic_set(const GraphParams& p, const SearchBudget& budget = {},
                        int threads = 0);

/// Same search for hull sets; additionally prunes candidates contained in a
/// proper convex subset discovered earlier.
Report min_hull_set(const GraphParams& p, const SearchBudget& budget = {},
                    int threads = 0);

/// All (n, k) with vertex_count <= max_vertices, n ascending then k
/// ascending; the canonical instance order used by sweeps and reports.
std::vector<GraphParams> enumerate_instances(std::uint64_t max_vertices);

/// Runs the target's brute-force check on every enumerated instance and
/// returns one report each. Per-instance failures are recorded in the
/// reports, never thrown. n = 1 instances are marked outside hypotheses.
std::vector<Report> sweep_verify(Quantity target, std::uint64_t max_vertices,
                                 int threads = 0);

bool all_agree(const std::vector<Report>& reports);

}  // namespace kneser
