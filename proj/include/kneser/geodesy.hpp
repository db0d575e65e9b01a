#pragma once
// Geodetic machinery over one Kneser graph: intervals I[u,v] and I[W],
// iterated intervals, hull closures, and the geodetic/convex/hull-set
// predicates. Distances come from a DistanceOracle, which either evaluates
// the closed form on bitmasks or answers from an all-pairs BFS table; the
// two modes must agree and the tests confront them.

#include <cstdint>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/vertex_set.hpp"

namespace kneser {

enum class OracleMode { Formula, Bfs };

/// All-pairs tables are materialized only up to this many vertices; larger
/// BFS oracles recompute per-source rows on demand and discard them.
inline constexpr std::uint64_t kMaxTableVertices = 1ull << 13;

/// Per-source BFS distances over the disjointness adjacency, indexed by
/// vertex rank. Independent of the closed-form distance.
std::vector<int> bfs_distances(const GraphParams& p, VertexId source);

class DistanceOracle {
 public:
  static DistanceOracle formula(const GraphParams& p);
  static DistanceOracle bfs(const GraphParams& p, int threads = 0);

  int distance(VertexId u, VertexId v) const {
    if (!table_.empty())
      return table_[u * count_ + v];
    if (mode_ == OracleMode::Formula)
      return kneser::distance(params_, KVertex{masks_[u]}, KVertex{masks_[v]});
    return bfs_distances(params_, u)[v];  // tableless: row built and discarded
  }

  /// Byte row of the all-pairs table, or nullptr when no table is held.
  const std::uint8_t* row(VertexId u) const {
    return table_.empty() ? nullptr : table_.data() + u * count_;
  }

  std::uint64_t mask_of(VertexId v) const { return masks_[v]; }
  std::uint64_t size() const { return count_; }
  OracleMode mode() const { return mode_; }
  const GraphParams& params() const { return params_; }

 private:
  DistanceOracle(const GraphParams& p, OracleMode m);

  GraphParams params_;
  OracleMode mode_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> masks_;  // rank -> subset mask, colex order
  std::vector<std::uint8_t> table_;   // count_ x count_ when materialized
};

/// I[u,v] = { w : dist(u,w) + dist(w,v) = dist(u,v) }; contains u and v.
VertexSet interval(const GraphParams& p, const DistanceOracle& oracle,
                   VertexId u, VertexId v);

/// I[W]: union of I[u,v] over unordered pairs of W; pairs (u,u) contribute
/// {u}, so the result always contains W.
VertexSet interval_of_set(const GraphParams& p, const DistanceOracle& oracle,
                          const VertexSet& w);

/// t-fold application of interval_of_set; t = 0 returns W.
VertexSet iterated_interval(const GraphParams& p, const DistanceOracle& oracle,
                            const VertexSet& w, int t);

struct HullResult {
  VertexSet closure;  // least fixpoint of interval_of_set containing W
  int steps = 0;      // minimal t with I^t[W] = I^{t+1}[W]
};
HullResult hull_closure(const GraphParams& p, const DistanceOracle& oracle,
                        const VertexSet& w);

bool is_convex(const GraphParams& p, const DistanceOracle& oracle,
               const VertexSet& w);
bool is_geodetic_set(const GraphParams& p, const DistanceOracle& oracle,
                     const VertexSet& w);
bool is_hull_set(const GraphParams& p, const DistanceOracle& oracle,
                 const VertexSet& w);

}  // namespace kneser
