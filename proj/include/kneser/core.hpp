#pragma once
// Subset-bitmask encoding of Kneser graph vertices and the closed-form
// metric on K(2n+k, n): adjacency, intersection size, distance, diameter,
// and the intersection-window classification of diametral pairs.
//
// Ground-set elements {1, ..., 2n+k} are 1-based in every user-facing
// format; internally bit i-1 of a vertex mask encodes element i.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kneser {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidParams : Error { using Error::Error; };
struct WrongSize : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct Duplicate : Error { using Error::Error; };
struct RankOutOfBounds : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct DiameterNotTwo : Error { using Error::Error; };
struct PivotOutOfRange : Error { using Error::Error; };
struct HullPairUnavailable : Error { using Error::Error; };

/// Dense vertex index: the colexicographic rank of an n-subset.
using VertexId = std::uint64_t;

/// Parameters (n, k) of the Kneser graph K(2n+k, n).
struct GraphParams {
  int n = 0;       // subset size
  int k = 0;       // ground-set slack
  int ground = 0;  // 2n + k
  friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

/// Validates n >= 1, k >= 1 and the one-machine-word cap 2n + k <= 64.
GraphParams make_params(int n, int k);

/// Exact C(m, j); requires m <= 64, where every value fits in 64 bits.
std::uint64_t binomial(int m, int j);

std::uint64_t vertex_count(const GraphParams& p);  // C(2n+k, n)
std::uint64_t degree(const GraphParams& p);        // C(n+k, n)

/// An n-subset of the ground set, stored as a bitmask. Numeric mask order
/// coincides with colexicographic (rank) order.
struct KVertex {
  std::uint64_t mask = 0;
  friend bool operator==(const KVertex&, const KVertex&) = default;
  friend auto operator<=>(const KVertex&, const KVertex&) = default;
};

/// Builds a vertex from 1-based elements (any order). Throws WrongSize,
/// OutOfRange or Duplicate.
KVertex make_vertex(const GraphParams& p, const std::vector<int>& elements);

/// 1-based elements of a vertex, ascending.
std::vector<int> elements(KVertex v);

/// Colexicographic rank (combinatorial number system). rank and unrank are
/// mutually inverse bijections onto [0, C(2n+k, n)).
VertexId rank(const GraphParams& p, KVertex v);
KVertex unrank(const GraphParams& p, VertexId id);

/// All vertices in colexicographic order. Guarded by kMaxEnumerableVertices.
inline constexpr std::uint64_t kMaxEnumerableVertices = 1ull << 22;
std::vector<KVertex> all_vertices(const GraphParams& p);

namespace detail {
inline int ceil_div(int a, int b) { return (a + b - 1) / b; }
}  // namespace detail

inline int intersection_size(KVertex u, KVertex v) {
  return std::popcount(u.mask & v.mask);
}

/// Edges join disjoint subsets; a vertex is never adjacent to itself.
inline bool is_adjacent(KVertex u, KVertex v) {
  return (u.mask & v.mask) == 0;
}

/// Shortest-path distance. u == v and disjoint pairs short-circuit ahead of
/// the closed form; the k >= n-1 branch applies to intersecting distinct
/// vertices only (disjoint vertices are adjacent by definition).
inline int distance(const GraphParams& p, KVertex u, KVertex v) {
  if (u.mask == v.mask) return 0;
  const int s = intersection_size(u, v);
  if (s == 0) return 1;
  if (p.k >= p.n - 1) return 2;
  return std::min(2 * detail::ceil_div(p.n - s, p.k),
                  2 * detail::ceil_div(s, p.k) + 1);
}

inline int diameter(const GraphParams& p) {
  return detail::ceil_div(p.n - 1, p.k) + 1;
}

/// Width of the diametral intersection window.
int h_function(const GraphParams& p);

/// Inclusive window [lo, hi] of intersection sizes realizing the diameter:
/// lo = (ceil((n-1)/2k) - 1)k + 1, hi = lo + h_function.
struct DiametralBounds {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const DiametralBounds&, const DiametralBounds&) = default;
};
DiametralBounds diametral_bounds(const GraphParams& p);

/// True iff distinct u, v are endpoints of a diametral path, decided purely
/// from |u ∩ v|. Returns false for u == v.
bool is_diametral_pair(const GraphParams& p, KVertex u, KVertex v);

/// Parity forced by an intersection size outside the diametral window.
enum class IntersectionClass { ForcedOdd, ForcedEven, Diametral };
IntersectionClass classify_intersection(const GraphParams& p, int s);
const char* to_string(IntersectionClass c);

/// Text format used by the CLI and JSON output: comma-separated 1-based
/// elements in increasing order, no whitespace, e.g. "1,2,3".
std::string to_text(KVertex v);
KVertex parse_vertex(const GraphParams& p, std::string_view text);

}  // namespace kneser
