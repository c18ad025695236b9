#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "embedding.hpp"
#include "error.hpp"

namespace cyclepack {

// A simple cycle of an embedded graph: the closed walk (verts[i] --edges[i]-->
// verts[i+1 mod k]), its sorted edge set, and its interior signature.
struct Cycle {
  std::vector<int> verts;
  std::vector<int> edges;
  std::vector<int> eset;  // sorted
  FaceSet sig;

  int length() const { return static_cast<int>(edges.size()); }

  bool operator==(const Cycle& o) const { return eset == o.eset; }
  bool operator<(const Cycle& o) const { return eset < o.eset; }

  bool contains_vertex(int v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
  }
  bool contains_edge(int e) const { return std::binary_search(eset.begin(), eset.end(), e); }

  bool shares_vertex(const Cycle& o) const {
    for (int v : verts)
      if (o.contains_vertex(v)) return true;
    return false;
  }
  bool shares_edge(const Cycle& o) const {
    for (int e : eset)
      if (o.contains_edge(e)) return true;
    return false;
  }
};

namespace detail {

// Rotates/reflects the walk into a canonical form: start at the smallest
// vertex; for undirected graphs the direction with the lexicographically
// smaller edge-id sequence wins.
inline void canonicalize_walk(std::vector<int>& verts, std::vector<int>& edges, bool directed) {
  const int k = static_cast<int>(verts.size());
  int start = static_cast<int>(std::min_element(verts.begin(), verts.end()) - verts.begin());
  std::rotate(verts.begin(), verts.begin() + start, verts.end());
  std::rotate(edges.begin(), edges.begin() + start, edges.end());
  if (!directed) {
    // Reversed walk: v0, v_{k-1}, ..., v1 with edges e_{k-1}, e_{k-2}, ..., e0.
    std::vector<int> rv(k), re(k);
    rv[0] = verts[0];
    for (int i = 1; i < k; ++i) rv[i] = verts[k - i];
    for (int i = 0; i < k; ++i) re[i] = edges[(k - 1 - i + k) % k];
    if (re < edges) {
      verts = std::move(rv);
      edges = std::move(re);
    }
  }
}

}  // namespace detail

// Assembles a Cycle from an edge set. Validates simplicity; for directed
// graphs also checks the walk respects every edge's orientation.
inline Cycle make_cycle(const EmbeddedGraph& g, std::vector<int> edge_set, bool with_signature = true) {
  std::sort(edge_set.begin(), edge_set.end());
  require(std::adjacent_find(edge_set.begin(), edge_set.end()) == edge_set.end(), ErrorKind::NotACycle,
          "repeated edge");
  detail::check_simple_cycle(g, edge_set);

  std::map<int, std::vector<int>> inc;
  for (int e : edge_set) {
    inc[g.edges[e].u].push_back(e);
    inc[g.edges[e].v].push_back(e);
  }
  Cycle c;
  c.eset = edge_set;
  int v0 = inc.begin()->first;
  int v = v0;
  int prev_edge = -1;
  do {
    c.verts.push_back(v);
    int e = inc[v][0] == prev_edge ? inc[v][1] : inc[v][0];
    c.edges.push_back(e);
    v = g.other_end(e, v);
    prev_edge = e;
  } while (v != v0);

  if (g.directed) {
    bool fwd = true, bwd = true;
    for (size_t i = 0; i < c.edges.size(); ++i) {
      int e = c.edges[i];
      if (g.edges[e].u == c.verts[i])
        bwd = false;
      else
        fwd = false;
    }
    require(fwd || bwd, ErrorKind::NotACycle, "edge set is not a consistently directed cycle");
    if (bwd && !fwd) {
      // Flip the walk so it follows the orientations.
      std::reverse(c.verts.begin() + 1, c.verts.end());
      std::reverse(c.edges.begin(), c.edges.end());
    }
  }
  detail::canonicalize_walk(c.verts, c.edges, g.directed);
  if (with_signature) c.sig = interior_signature(g, c.eset);
  return c;
}

// True if the edge set is a consistently oriented cycle (directed graphs).
inline bool is_directed_cycle_set(const EmbeddedGraph& g, const std::vector<int>& edge_set) {
  std::map<int, int> out_deg, in_deg;
  for (int e : edge_set) {
    out_deg[g.edges[e].u]++;
    in_deg[g.edges[e].v]++;
  }
  for (auto [v, d] : out_deg)
    if (d != 1 || in_deg[v] != 1) return false;
  for (auto [v, d] : in_deg)
    if (d != 1) return false;
  return true;
}

// Whether packed cycles must be vertex-disjoint or merely edge-disjoint.
enum class DisjointMode { Vertex, Edge };

inline const char* mode_name(DisjointMode m) { return m == DisjointMode::Vertex ? "vertex" : "edge"; }

inline bool cycles_conflict(const Cycle& a, const Cycle& b, DisjointMode mode) {
  return mode == DisjointMode::Vertex ? a.shares_vertex(b) : a.shares_edge(b);
}

inline std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace cyclepack
