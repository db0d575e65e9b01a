#include "kneser/constructions.hpp"

namespace kneser {
namespace {

std::uint64_t ground_mask(const GraphParams& p) {
  return p.ground == 64 ? ~0ull : (1ull << p.ground) - 1;
}

// The `count` lowest set bits of `mask`.
std::uint64_t lowest_bits(std::uint64_t mask, int count) {
  std::uint64_t out = 0;
  for (int i = 0; i < count; ++i) {
    if (mask == 0) throw Error("element pool exhausted while building a vertex");
    const std::uint64_t bit = mask & (~mask + 1);
    out |= bit;
    mask ^= bit;
  }
  return out;
}

void require_diameter_two(const GraphParams& p) {
  if (p.n < 2 || p.k < p.n - 1)
    throw DiameterNotTwo("requires a diameter-two graph, i.e. n >= 2 and k >= n-1 "
                         "(got n = " + std::to_string(p.n) +
                         ", k = " + std::to_string(p.k) + ")");
}

}  // namespace

LevelStructure build_level_structure(const GraphParams& p,
                                     const DistanceOracle& oracle, VertexId root) {
  LevelStructure ls;
  ls.root = root;
  const std::uint64_t count = oracle.size();
  ls.level.resize(count);
  ls.layers.assign(static_cast<std::size_t>(diameter(p)) + 1, VertexSet(count));
  for (VertexId v = 0; v < count; ++v) {
    const int d = oracle.distance(root, v);
    ls.level[v] = d;
    ls.layers[static_cast<std::size_t>(d)].set(v);
  }
  return ls;
}

VertexSet diametrically_opposed_set(const GraphParams& p,
                                    const DistanceOracle& oracle, VertexId r) {
  const int diam = diameter(p);
  VertexSet d(oracle.size());
  for (VertexId v = 0; v < oracle.size(); ++v)
    if (oracle.distance(r, v) == diam) d.set(v);
  return d;
}

VertexSet root_geodetic_set(const GraphParams& p, const DistanceOracle& oracle,
                            VertexId r) {
  VertexSet s = diametrically_opposed_set(p, oracle, r);
  s.set(r);
  return s;
}

KVertex deeper_neighbor(const GraphParams& p, VertexId r_id, VertexId x_id,
                        VertexId y_id) {
  const KVertex r = unrank(p, r_id);
  const KVertex x = unrank(p, x_id);
  const KVertex y = unrank(p, y_id);
  const int diam = diameter(p);
  const int i = distance(p, r, x);
  if (i < 1 || i >= diam)
    throw PreconditionViolated("x must lie strictly between the root and the last level");
  if (!is_adjacent(x, y))
    throw PreconditionViolated("y must be a neighbor of x");
  if (distance(p, r, y) != i - 1)
    throw PreconditionViolated("y must be one level closer to the root than x");

  const auto [lo, hi] = diametral_bounds(p);
  const std::uint64_t ry = r.mask & y.mask;
  const int sry = std::popcount(ry);
  std::uint64_t z = 0;
  if (i % 2 == 0) {
    // Even level: |r ∩ y| sits below the diametral window. Raise the
    // intersection with r by k' elements while staying disjoint from x.
    const int kp = std::min(p.k, lo - sry);
    const std::uint64_t grow = lowest_bits(r.mask & ~(x.mask | y.mask), kp);
    const std::uint64_t keep = lowest_bits(y.mask & ~r.mask, p.n - kp - sry);
    z = ry | grow | keep;
  } else {
    // Odd level: |r ∩ y| sits above the window. Shed k'' shared elements
    // and refill from outside r ∪ x ∪ y.
    const int kpp = std::min(p.k, sry - hi);
    const std::uint64_t shed = lowest_bits(ry, kpp);
    const std::uint64_t fill =
        lowest_bits(ground_mask(p) & ~(r.mask | x.mask | y.mask), kpp);
    z = (y.mask & ~shed) | fill;
  }

  const KVertex zv{z};
  if (std::popcount(z) != p.n || !is_adjacent(zv, x) || distance(p, r, zv) != i + 1)
    throw Error("deeper-neighbor construction failed to land one level deeper");
  return zv;
}

std::uint64_t gn_upper_bound(const GraphParams& p) {
  const auto [lo, hi] = diametral_bounds(p);
  std::uint64_t sum = 1;
  for (int i = std::max(lo, 0); i <= hi; ++i)
    sum += binomial(p.n, i) * binomial(p.n + p.k, p.n - i);
  return sum;
}

VertexSet pivot_geodetic_set(const GraphParams& p, int pivot) {
  require_diameter_two(p);
  if (pivot < 1 || pivot > p.ground)
    throw PivotOutOfRange("pivot " + std::to_string(pivot) + " outside [1, " +
                          std::to_string(p.ground) + "]");
  const std::uint64_t bit = 1ull << (pivot - 1);
  VertexSet s(vertex_count(p));
  VertexId id = 0;
  for (KVertex v : all_vertices(p)) {
    if (v.mask & bit) s.set(id);
    ++id;
  }
  return s;
}

std::uint64_t gn_diameter_two(const GraphParams& p) {
  require_diameter_two(p);
  return binomial(p.ground - 1, p.n - 1);
}

std::array<KVertex, 3> hull_triple(const GraphParams& p) {
  require_diameter_two(p);
  const std::uint64_t core = (1ull << (p.n - 1)) - 1;  // {1, ..., n-1}
  return {KVertex{core | (1ull << (p.n - 1))},
          KVertex{core | (1ull << p.n)},
          KVertex{core | (1ull << (p.n + 1))}};
}

std::array<KVertex, 2> hull_pair(const GraphParams& p) {
  require_diameter_two(p);
  if (p.k <= 2)
    throw HullPairUnavailable("no 2-element hull set exists for k <= 2 "
                              "(got k = " + std::to_string(p.k) + ")");
  const std::uint64_t core = (1ull << (p.n - 1)) - 1;
  return {KVertex{core | (1ull << (p.n - 1))}, KVertex{core | (1ull << p.n)}};
}

int ghn_diameter_two(const GraphParams& p) {
  require_diameter_two(p);
  return p.k > 2 ? 2 : 3;
}

}  // namespace kneser
