#pragma once
// VertexSet: a bitset over the whole vertex set of one graph, indexed by
// colexicographic rank. boost::dynamic_bitset provides the required
// O(vertex_count / word) union, intersection, membership and cardinality.

#include <boost/dynamic_bitset.hpp>

#include <vector>

#include "kneser/core.hpp"

namespace kneser {

using VertexSet = boost::dynamic_bitset<>;

inline VertexSet empty_set(const GraphParams& p) {
  return VertexSet(vertex_count(p));
}

inline VertexSet full_set(const GraphParams& p) {
  VertexSet s(vertex_count(p));
  s.set();
  return s;
}

/// Member ids in ascending (rank) order.
inline std::vector<VertexId> members(const VertexSet& s) {
  std::vector<VertexId> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
    out.push_back(i);
  return out;
}

inline VertexSet to_set(const GraphParams& p, const std::vector<KVertex>& vs) {
  VertexSet s(vertex_count(p));
  for (KVertex v : vs) s.set(rank(p, v));
  return s;
}

inline std::vector<KVertex> to_vertices(const GraphParams& p, const VertexSet& s) {
  std::vector<KVertex> out;
  out.reserve(s.count());
  for (VertexId id : members(s)) out.push_back(unrank(p, id));
  return out;
}

}  // namespace kneser
