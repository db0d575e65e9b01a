#pragma once
// Explicit geodetic and hull set constructions with closed-form sizes:
// the opposed-set geodetic construction valid at every diameter (with its
// deeper-neighbor witness), the pivot-star minimum geodetic set for
// diameter-two graphs, and the hull triple / hull pair for diameter two.

#include <array>
#include <cstdint>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/geodesy.hpp"
#include "kneser/vertex_set.hpp"

namespace kneser {

/// BFS layering from a root: level[v] = dist(root, v), layers[i] = level set i.
struct LevelStructure {
  VertexId root = 0;
  std::vector<int> level;
  std::vector<VertexSet> layers;
};
LevelStructure build_level_structure(const GraphParams& p,
                                     const DistanceOracle& oracle, VertexId root);

/// D = { v : dist(r, v) = diameter }, the vertices diametrically opposed to r.
VertexSet diametrically_opposed_set(const GraphParams& p,
                                    const DistanceOracle& oracle, VertexId r);

/// D ∪ {r}: a geodetic set at every diameter.
VertexSet root_geodetic_set(const GraphParams& p, const DistanceOracle& oracle,
                            VertexId r);

/// For x one level below the deepest and y a neighbor of x one level closer
/// to the root, builds a neighbor z of x one level deeper. Free element
/// choices always take the smallest available elements, so the witness is
/// deterministic. Throws PreconditionViolated on bad (r, x, y).
KVertex deeper_neighbor(const GraphParams& p, VertexId r, VertexId x, VertexId y);

/// 1 + sum over the diametral window [lo, hi] of C(n,i) * C(n+k, n-i);
/// equals |D ∪ {r}| for every root r, hence an upper bound on gn.
std::uint64_t gn_upper_bound(const GraphParams& p);

/// All n-subsets containing `pivot` (1-based). For diameter-two graphs this
/// is a minimum geodetic set of size C(2n+k-1, n-1), and an independent set.
VertexSet pivot_geodetic_set(const GraphParams& p, int pivot);

/// Exact geodetic number C(2n+k-1, n-1) for diameter-two graphs.
std::uint64_t gn_diameter_two(const GraphParams& p);

/// Canonical hull triple for diameter two: {1..n-1} core plus n, n+1, n+2.
std::array<KVertex, 3> hull_triple(const GraphParams& p);

/// Canonical hull pair {1..n}, {1..n-1, n+1} for diameter two with k > 2;
/// throws HullPairUnavailable when k <= 2 (no 2-element hull set exists).
std::array<KVertex, 2> hull_pair(const GraphParams& p);

/// Exact geodetic hull number for diameter-two graphs: 2 if k > 2, else 3.
int ghn_diameter_two(const GraphParams& p);

}  // namespace kneser
