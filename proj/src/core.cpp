#include "kneser/core.hpp"

#include <array>
#include <charconv>

namespace kneser {
namespace {

// Pascal triangle up to row 64; the largest entry C(64,32) ~ 1.83e18 fits
// in 64 bits, so every addition below is overflow-free.
struct BinomialTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  BinomialTable() {
    for (int m = 0; m <= 64; ++m) {
      c[m][0] = 1;
      for (int j = 1; j <= m; ++j)
        c[m][j] = c[m - 1][j - 1] + (j <= m - 1 ? c[m - 1][j] : 0);
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

std::uint64_t ground_mask(const GraphParams& p) {
  return p.ground == 64 ? ~0ull : (1ull << p.ground) - 1;
}

}  // namespace

GraphParams make_params(int n, int k) {
  if (n < 1) throw InvalidParams("n must be a positive integer");
  if (k < 1) throw InvalidParams("k must be a positive integer");
  if (2 * n + k > 64)
    throw InvalidParams("2n + k must be at most 64 so a vertex fits one machine word");
  return GraphParams{n, k, 2 * n + k};
}

std::uint64_t binomial(int m, int j) {
  if (m < 0 || m > 64) throw OutOfRange("binomial: m must be in [0, 64]");
  if (j < 0 || j > m) return 0;
  return table().c[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
}

std::uint64_t vertex_count(const GraphParams& p) { return binomial(p.ground, p.n); }

std::uint64_t degree(const GraphParams& p) { return binomial(p.n + p.k, p.n); }

KVertex make_vertex(const GraphParams& p, const std::vector<int>& elems) {
  if (static_cast<int>(elems.size()) != p.n)
    throw WrongSize("expected " + std::to_string(p.n) + " elements, got " +
                    std::to_string(elems.size()));
  std::uint64_t mask = 0;
  for (int e : elems) {
    if (e < 1 || e > p.ground)
      throw OutOfRange("element " + std::to_string(e) + " outside [1, " +
                       std::to_string(p.ground) + "]");
    const std::uint64_t bit = 1ull << (e - 1);
    if (mask & bit) throw Duplicate("element " + std::to_string(e) + " repeats");
    mask |= bit;
  }
  return KVertex{mask};
}

std::vector<int> elements(KVertex v) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(v.mask)));
  for (std::uint64_t m = v.mask; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

VertexId rank(const GraphParams& p, KVertex v) {
  if (std::popcount(v.mask) != p.n || (v.mask & ~ground_mask(p)) != 0)
    throw OutOfRange("vertex mask does not encode an n-subset of the ground set");
  std::uint64_t r = 0;
  int i = 0;
  for (std::uint64_t m = v.mask; m != 0; m &= m - 1)
    r += binomial(std::countr_zero(m), ++i);
  return r;
}

KVertex unrank(const GraphParams& p, VertexId id) {
  if (id >= vertex_count(p))
    throw RankOutOfBounds("rank " + std::to_string(id) + " >= vertex count " +
                          std::to_string(vertex_count(p)));
  std::uint64_t mask = 0;
  std::uint64_t rem = id;
  int a = p.ground - 1;
  for (int i = p.n; i >= 1; --i) {
    while (binomial(a, i) > rem) --a;
    mask |= 1ull << a;
    rem -= binomial(a, i);
    --a;
  }
  return KVertex{mask};
}

std::vector<KVertex> all_vertices(const GraphParams& p) {
  const std::uint64_t count = vertex_count(p);
  if (count > kMaxEnumerableVertices)
    throw Error("vertex count " + std::to_string(count) +
                " exceeds the in-memory enumeration cap");
  std::vector<KVertex> out;
  out.reserve(count);
  std::uint64_t v = (1ull << p.n) - 1;  // n <= 31 under the 2n+k <= 64 cap
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(KVertex{v});
    if (i + 1 == count) break;
    // Gosper's hack: next subset mask in increasing numeric (= colex) order
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((v ^ r) >> 2) / c) | r;
  }
  return out;
}

int h_function(const GraphParams& p) {
  const int m = p.n % p.k;
  return m <= 1 ? std::max(m + p.k - 2, 0) : m - 2;
}

DiametralBounds diametral_bounds(const GraphParams& p) {
  const int lo = (detail::ceil_div(p.n - 1, 2 * p.k) - 1) * p.k + 1;
  return DiametralBounds{lo, lo + h_function(p)};
}

bool is_diametral_pair(const GraphParams& p, KVertex u, KVertex v) {
  if (u == v) return false;
  const auto [lo, hi] = diametral_bounds(p);
  const int s = intersection_size(u, v);
  return lo <= s && s <= hi;
}

IntersectionClass classify_intersection(const GraphParams& p, int s) {
  const auto [lo, hi] = diametral_bounds(p);
  if (s < lo) return IntersectionClass::ForcedOdd;
  if (s > hi) return IntersectionClass::ForcedEven;
  return IntersectionClass::Diametral;
}

const char* to_string(IntersectionClass c) {
  switch (c) {
    case IntersectionClass::ForcedOdd: return "forced_odd";
    case IntersectionClass::ForcedEven: return "forced_even";
    case IntersectionClass::Diametral: return "diametral";
  }
  return "unknown";
}

std::string to_text(KVertex v) {
  std::string out;
  for (int e : elements(v)) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(e);
  }
  return out;
}

KVertex parse_vertex(const GraphParams& p, std::string_view text) {
  std::vector<int> elems;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view tok = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("malformed vertex text '" + std::string(text) +
                       "': expected comma-separated integers");
    elems.push_back(value);
    pos = comma + 1;
  }
  return make_vertex(p, elems);
}

}  // namespace kneser
