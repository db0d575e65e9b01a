#include "kneser/geodesy.hpp"

#include <cstring>

#include "kneser/parallel.hpp"

namespace kneser {
namespace {

// Word-level scaffolding for BFS over the implicit adjacency: covers[e] is
// the bitset of vertices containing ground element e+1, so the neighborhood
// of u is the complement of the union of covers over u's elements.
struct CoverIndex {
  std::uint64_t count = 0;
  std::size_t words = 0;
  std::uint64_t tail = 0;  // valid bits of the last word
  std::vector<std::uint64_t> masks;
  std::vector<std::uint64_t> covers;  // ground rows of `words` words each

  explicit CoverIndex(const GraphParams& p) {
    const auto verts = all_vertices(p);
    count = verts.size();
    words = static_cast<std::size_t>((count + 63) / 64);
    tail = (count % 64 == 0) ? ~0ull : (1ull << (count % 64)) - 1;
    masks.resize(count);
    covers.assign(static_cast<std::size_t>(p.ground) * words, 0);
    for (std::uint64_t id = 0; id < count; ++id) {
      masks[id] = verts[id].mask;
      for (std::uint64_t m = verts[id].mask; m != 0; m &= m - 1) {
        const int e = std::countr_zero(m);
        covers[static_cast<std::size_t>(e) * words + id / 64] |= 1ull << (id % 64);
      }
    }
  }

  // OR of cover rows for the elements of `mask` into `blocked`.
  void block_neighbors(std::uint64_t mask, std::uint64_t* blocked) const {
    std::memset(blocked, 0, words * sizeof(std::uint64_t));
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const std::uint64_t* row =
          covers.data() + static_cast<std::size_t>(std::countr_zero(m)) * words;
      for (std::size_t w = 0; w < words; ++w) blocked[w] |= row[w];
    }
  }
};

void bfs_row(const CoverIndex& ci, VertexId source, std::uint8_t* out) {
  const std::size_t words = ci.words;
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0),
      reach(words, 0), blocked(words, 0);
  std::memset(out, 0xff, ci.count);
  out[source] = 0;
  visited[source / 64] = frontier[source / 64] = 1ull << (source % 64);
  std::uint8_t depth = 0;
  for (;;) {
    std::memset(reach.data(), 0, words * sizeof(std::uint64_t));
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = frontier[w]; bits != 0; bits &= bits - 1) {
        const VertexId u = w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
        ci.block_neighbors(ci.masks[u], blocked.data());
        for (std::size_t x = 0; x < words; ++x) reach[x] |= ~blocked[x];
      }
    }
    reach[words - 1] &= ci.tail;
    ++depth;
    bool advanced = false;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t fresh = reach[w] & ~visited[w];
      frontier[w] = fresh;
      if (fresh == 0) continue;
      advanced = true;
      visited[w] |= fresh;
      for (std::uint64_t bits = fresh; bits != 0; bits &= bits - 1)
        out[w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits))] = depth;
    }
    if (!advanced) break;
  }
  for (std::uint64_t v = 0; v < ci.count; ++v)
    if (out[v] == 0xff) throw Error("BFS did not reach every vertex");
}

// Accumulates I[u,v] into acc without clearing previous contents.
void interval_into(const DistanceOracle& o, VertexId u, VertexId v, VertexSet& acc) {
  const std::uint64_t count = o.size();
  const int duv = o.distance(u, v);
  if (const std::uint8_t* ru = o.row(u)) {
    const std::uint8_t* rv = o.row(v);
    for (VertexId w = 0; w < count; ++w)
      if (ru[w] + rv[w] == duv) acc.set(w);
  } else {
    for (VertexId w = 0; w < count; ++w)
      if (o.distance(u, w) + o.distance(w, v) == duv) acc.set(w);
  }
}

}  // namespace

std::vector<int> bfs_distances(const GraphParams& p, VertexId source) {
  const CoverIndex ci(p);
  if (source >= ci.count) throw RankOutOfBounds("bfs source out of range");
  std::vector<std::uint8_t> row(ci.count);
  bfs_row(ci, source, row.data());
  return std::vector<int>(row.begin(), row.end());
}

DistanceOracle::DistanceOracle(const GraphParams& p, OracleMode m)
    : params_(p), mode_(m) {}

DistanceOracle DistanceOracle::formula(const GraphParams& p) {
  DistanceOracle o(p, OracleMode::Formula);
  const auto verts = all_vertices(p);
  o.count_ = verts.size();
  o.masks_.resize(o.count_);
  for (std::uint64_t id = 0; id < o.count_; ++id) o.masks_[id] = verts[id].mask;
  return o;
}

DistanceOracle DistanceOracle::bfs(const GraphParams& p, int threads) {
  DistanceOracle o(p, OracleMode::Bfs);
  const CoverIndex ci(p);
  o.count_ = ci.count;
  o.masks_ = ci.masks;
  if (o.count_ > kMaxTableVertices) return o;  // rows computed on demand
  o.table_.resize(o.count_ * o.count_);
  parallel_chunks(o.count_, threads, [&](std::uint64_t b, std::uint64_t e) {
    for (VertexId src = b; src < e; ++src)
      bfs_row(ci, src, o.table_.data() + src * o.count_);
  });
  return o;
}

VertexSet interval(const GraphParams& p, const DistanceOracle& oracle,
                   VertexId u, VertexId v) {
  VertexSet out(vertex_count(p));
  interval_into(oracle, u, v, out);
  return out;
}

VertexSet interval_of_set(const GraphParams& p, const DistanceOracle& oracle,
                          const VertexSet& w) {
  VertexSet out = w;
  out.resize(vertex_count(p));
  const auto ids = members(w);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      interval_into(oracle, ids[i], ids[j], out);
  return out;
}

VertexSet iterated_interval(const GraphParams& p, const DistanceOracle& oracle,
                            const VertexSet& w, int t) {
  VertexSet out = w;
  for (int i = 0; i < t; ++i) {
    VertexSet next = interval_of_set(p, oracle, out);
    if (next == out) break;  // fixpoint; further applications are the identity
    out = std::move(next);
  }
  return out;
}

HullResult hull_closure(const GraphParams& p, const DistanceOracle& oracle,
                        const VertexSet& w) {
  HullResult res{w, 0};
  res.closure.resize(vertex_count(p));
  std::vector<VertexId> settled;  // members present before the last round
  std::vector<VertexId> frontier = members(res.closure);
  while (!frontier.empty()) {
    VertexSet next = res.closure;
    // Only pairs touching the frontier can contribute anything new:
    // pairs inside the settled part already produced the current closure.
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (VertexId u : settled) interval_into(oracle, frontier[i], u, next);
      for (std::size_t j = i + 1; j < frontier.size(); ++j)
        interval_into(oracle, frontier[i], frontier[j], next);
    }
    if (next == res.closure) break;
    const VertexSet added = next - res.closure;
    settled.insert(settled.end(), frontier.begin(), frontier.end());
    frontier = members(added);
    res.closure = std::move(next);
    ++res.steps;
  }
  return res;
}

bool is_convex(const GraphParams& p, const DistanceOracle& oracle,
               const VertexSet& w) {
  VertexSet acc = w;
  acc.resize(vertex_count(p));
  const auto ids = members(w);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      interval_into(oracle, ids[i], ids[j], acc);
      if (!acc.is_subset_of(w)) return false;
    }
  return true;
}

bool is_geodetic_set(const GraphParams& p, const DistanceOracle& oracle,
                     const VertexSet& w) {
  VertexSet acc = w;
  acc.resize(vertex_count(p));
  if (acc.all()) return true;
  const auto ids = members(w);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      interval_into(oracle, ids[i], ids[j], acc);
      if (acc.all()) return true;  // early exit, same verdict
    }
  return false;
}

bool is_hull_set(const GraphParams& p, const DistanceOracle& oracle,
                 const VertexSet& w) {
  return hull_closure(p, oracle, w).closure.all();
}

}  // namespace kneser
