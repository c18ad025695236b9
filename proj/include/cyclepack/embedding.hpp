#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>
#include <boost/property_map/property_map.hpp>

#include "error.hpp"

namespace cyclepack {

// Set of finite faces; the bit of the infinite face is always clear.
using FaceSet = boost::dynamic_bitset<>;

struct EdgeRec {
  int u = -1;
  int v = -1;  // when the graph is directed, the edge points u -> v
};

// Darts (edge-ends): dart 2e points u->v of edge e, dart 2e+1 points v->u.
inline int dart_of(int e, int side) { return 2 * e + side; }
inline int dart_edge(int d) { return d >> 1; }
inline int dart_reverse(int d) { return d ^ 1; }

// A planar multigraph together with a genus-0 combinatorial embedding
// (rotation system), its face structure and a designated infinite face.
// Self-loops are rejected; parallel edges are fine. Vertices never get
// renumbered by restriction: restricted copies keep all vertex slots and
// only drop edges, so vertex ids are stable across a recursion.
struct EmbeddedGraph {
  int n = 0;
  std::vector<EdgeRec> edges;
  bool directed = false;

  // rot[v]: the darts with tail v in cyclic order around v.
  std::vector<std::vector<int>> rot;

  // Derived data.
  std::vector<int> dart_pos;              // index of each dart inside rot[tail]
  std::vector<int> face_of_dart;          // final face ids
  std::vector<std::vector<int>> faces;    // face id -> boundary darts in walk order
  int infinite_face = -1;                 // always == faces.size()-1 when faces exist
  int num_components = 0;                 // includes isolated vertices
  std::vector<int> comp_of_vertex;

  // One-level provenance into the graph this one was restricted from.
  // Identity on freshly built graphs.
  std::vector<int> parent_edge;

  int m() const { return static_cast<int>(edges.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  int num_finite_faces() const { return num_faces() - 1; }

  int dart_tail(int d) const {
    const auto& e = edges[dart_edge(d)];
    return (d & 1) ? e.v : e.u;
  }
  int dart_head(int d) const {
    const auto& e = edges[dart_edge(d)];
    return (d & 1) ? e.u : e.v;
  }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }

  // Next dart along the face lying to the left of d.
  int next_in_face(int d) const {
    int r = dart_reverse(d);
    int v = dart_tail(r);
    int pos = dart_pos[r];
    const auto& rv = rot[v];
    return rv[(pos + 1) % rv.size()];
  }

  int other_end(int e, int x) const {
    return edges[e].u == x ? edges[e].v : edges[e].u;
  }

  std::vector<int> face_vertices(int f) const {
    std::vector<int> out;
    out.reserve(faces[f].size());
    for (int d : faces[f]) out.push_back(dart_tail(d));
    return out;
  }

  FaceSet empty_face_set() const { return FaceSet(num_faces()); }

  FaceSet finite_face_mask() const {
    FaceSet s(num_faces());
    s.set();
    s.reset(infinite_face);
    return s;
  }

  std::vector<int> cycle_edges_to_parent(const std::vector<int>& es) const {
    std::vector<int> out;
    out.reserve(es.size());
    for (int e : es) out.push_back(parent_edge[e]);
    return out;
  }
};

namespace detail {

// Boyer-Myrvold needs a simple graph; 2nd and later parallel copies get a
// subdivision vertex that is spliced out of the resulting rotation.
inline std::vector<std::vector<int>> rotation_via_planarity_test(int n, const std::vector<EdgeRec>& edges) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                            boost::property<boost::edge_index_t, int>>;
  const int m = static_cast<int>(edges.size());
  std::map<std::pair<int, int>, int> seen;
  int helpers = 0;
  std::vector<int> helper_of(m, -1);
  for (int e = 0; e < m; ++e) {
    auto key = std::minmax(edges[e].u, edges[e].v);
    auto [it, fresh] = seen.emplace(std::make_pair(key.first, key.second), e);
    if (!fresh) helper_of[e] = n + helpers++;
  }

  BoostGraph bg(n + helpers);
  // boost edge index -> (original edge, dart side at the *source* endpoint we list)
  struct Part {
    int edge;
    int end_u;  // endpoint of the original edge this boost-edge touches (-1: both)
  };
  std::vector<Part> parts;
  int bidx = 0;
  for (int e = 0; e < m; ++e) {
    if (helper_of[e] < 0) {
      boost::add_edge(edges[e].u, edges[e].v, bidx++, bg);
      parts.push_back({e, -1});
    } else {
      boost::add_edge(edges[e].u, helper_of[e], bidx++, bg);
      parts.push_back({e, edges[e].u});
      boost::add_edge(helper_of[e], edges[e].v, bidx++, bg);
      parts.push_back({e, edges[e].v});
    }
  }

  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding(boost::num_vertices(bg));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
  require(planar, ErrorKind::NonPlanar, "graph admits no planar embedding");

  auto eidx = boost::get(boost::edge_index, bg);
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    rot[v].reserve(embedding[v].size());
    for (const auto& ed : embedding[v]) {
      const Part& p = parts[eidx[ed]];
      int e = p.edge;
      int side = (edges[e].u == v) ? 0 : 1;
      if (p.end_u != -1 && p.end_u != v) fail(ErrorKind::Internal, "split edge listed at wrong endpoint");
      // A parallel edge's part at u must emit the dart at u, at v the dart at v.
      if (p.end_u != -1) side = (p.end_u == edges[e].u) ? 0 : 1;
      rot[v].push_back(dart_of(e, side));
    }
  }
  return rot;
}

}  // namespace detail

// Builds the embedded graph. When `rotation` is absent a planar embedding is
// computed; when present it is validated (well-formed + genus 0).
// `infinite_face_orbit` indexes the face orbits of the rotation system,
// ordered by their smallest dart; by default every component exposes its
// longest boundary walk and the global infinite face is the longest overall.
inline EmbeddedGraph build_embedding(int n, std::vector<EdgeRec> edge_list, bool directed = false,
                                     std::optional<std::vector<std::vector<int>>> rotation = std::nullopt,
                                     std::optional<int> infinite_face_orbit = std::nullopt) {
  require(n >= 0, ErrorKind::BadInstance, "negative vertex count");
  const int m = static_cast<int>(edge_list.size());
  for (const auto& e : edge_list) {
    require(0 <= e.u && e.u < n && 0 <= e.v && e.v < n, ErrorKind::BadInstance, "edge endpoint out of range");
    require(e.u != e.v, ErrorKind::BadInstance, "self-loops are not supported");
  }

  EmbeddedGraph g;
  g.n = n;
  g.edges = std::move(edge_list);
  g.directed = directed;

  if (rotation) {
    require(static_cast<int>(rotation->size()) == n, ErrorKind::InvalidRotation, "rotation size != vertex count");
    std::vector<char> used(2 * m, 0);
    for (int v = 0; v < n; ++v) {
      for (int d : (*rotation)[v]) {
        require(0 <= d && d < 2 * m, ErrorKind::InvalidRotation, "dart id out of range");
        require(!used[d], ErrorKind::InvalidRotation, "dart listed twice");
        used[d] = 1;
        const auto& e = g.edges[dart_edge(d)];
        int tail = (d & 1) ? e.v : e.u;
        require(tail == v, ErrorKind::InvalidRotation, "dart listed at a vertex that is not its tail");
      }
    }
    for (int d = 0; d < 2 * m; ++d)
      require(used[d], ErrorKind::InvalidRotation, "dart missing from rotation");
    g.rot = std::move(*rotation);
  } else {
    g.rot = detail::rotation_via_planarity_test(n, g.edges);
  }

  g.dart_pos.assign(2 * m, -1);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(g.rot[v].size()); ++i) g.dart_pos[g.rot[v][i]] = i;

  // Connected components (edges + isolated vertices).
  g.comp_of_vertex.assign(n, -1);
  g.num_components = 0;
  for (int s = 0; s < n; ++s) {
    if (g.comp_of_vertex[s] != -1) continue;
    int c = g.num_components++;
    std::vector<int> stack{s};
    g.comp_of_vertex[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : g.rot[v]) {
        int w = g.dart_head(d);
        if (g.comp_of_vertex[w] == -1) {
          g.comp_of_vertex[w] = c;
          stack.push_back(w);
        }
      }
    }
  }

  // Face orbits of the rotation system, ordered by smallest dart.
  std::vector<int> orbit_of_dart(2 * m, -1);
  std::vector<std::vector<int>> orbits;
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (orbit_of_dart[d0] != -1) continue;
    int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    int d = d0;
    do {
      orbit_of_dart[d] = id;
      orbits[id].push_back(d);
      d = g.next_in_face(d);
    } while (d != d0);
  }

  // Euler check per component that has edges: |V| - |E| + |orbits| == 2.
  {
    std::vector<int> vc(g.num_components, 0), ec(g.num_components, 0), fc(g.num_components, 0);
    for (int v = 0; v < n; ++v) vc[g.comp_of_vertex[v]]++;
    for (int e = 0; e < m; ++e) ec[g.comp_of_vertex[g.edges[e].u]]++;
    for (const auto& orb : orbits) fc[g.comp_of_vertex[g.dart_tail(orb[0])]]++;
    for (int c = 0; c < g.num_components; ++c) {
      if (ec[c] == 0) continue;
      require(vc[c] - ec[c] + fc[c] == 2, ErrorKind::NonPlanar,
              "rotation system describes a surface of genus > 0");
    }
  }

  // Pick one outward orbit per edge-bearing component and merge them into the
  // single infinite face (components sit next to each other in the plane).
  std::vector<int> outer_orbit;  // per component, -1 if no edges
  outer_orbit.assign(g.num_components, -1);
  if (infinite_face_orbit) {
    require(0 <= *infinite_face_orbit && *infinite_face_orbit < static_cast<int>(orbits.size()),
            ErrorKind::BadInstance, "infinite_face index out of range");
  }
  for (int id = 0; id < static_cast<int>(orbits.size()); ++id) {
    int c = g.comp_of_vertex[g.dart_tail(orbits[id][0])];
    if (infinite_face_orbit && g.comp_of_vertex[g.dart_tail(orbits[*infinite_face_orbit][0])] == c) {
      outer_orbit[c] = *infinite_face_orbit;
      continue;
    }
    if (outer_orbit[c] == -1 || orbits[id].size() > orbits[outer_orbit[c]].size()) outer_orbit[c] = id;
  }

  g.faces.clear();
  g.face_of_dart.assign(2 * m, -1);
  std::vector<int> face_id_of_orbit(orbits.size(), -1);
  for (int id = 0; id < static_cast<int>(orbits.size()); ++id) {
    int c = g.comp_of_vertex[g.dart_tail(orbits[id][0])];
    if (outer_orbit[c] == id) continue;
    face_id_of_orbit[id] = static_cast<int>(g.faces.size());
    g.faces.push_back(orbits[id]);
  }
  g.infinite_face = static_cast<int>(g.faces.size());
  g.faces.emplace_back();
  for (int id = 0; id < static_cast<int>(orbits.size()); ++id) {
    int c = g.comp_of_vertex[g.dart_tail(orbits[id][0])];
    if (outer_orbit[c] != id) continue;
    face_id_of_orbit[id] = g.infinite_face;
    for (int d : orbits[id]) g.faces[g.infinite_face].push_back(d);
  }
  for (int d = 0; d < 2 * m; ++d) g.face_of_dart[d] = face_id_of_orbit[orbit_of_dart[d]];

  g.parent_edge.resize(m);
  std::iota(g.parent_edge.begin(), g.parent_edge.end(), 0);
  return g;
}

// Drops edges (and every edge touching a dropped vertex) while inheriting the
// rotation; vertex ids stay, edge ids compact with a parent map.
inline EmbeddedGraph restrict_graph(const EmbeddedGraph& g, const std::vector<char>& edge_keep,
                                    const std::vector<char>& vertex_keep = {}) {
  require(static_cast<int>(edge_keep.size()) == g.m(), ErrorKind::BadParams, "edge mask size mismatch");
  require(vertex_keep.empty() || static_cast<int>(vertex_keep.size()) == g.n, ErrorKind::BadParams,
          "vertex mask size mismatch");
  auto vertex_alive = [&](int v) { return vertex_keep.empty() || vertex_keep[v]; };

  std::vector<int> new_id(g.m(), -1);
  std::vector<EdgeRec> edges;
  std::vector<int> parent;
  for (int e = 0; e < g.m(); ++e) {
    if (!edge_keep[e] || !vertex_alive(g.edges[e].u) || !vertex_alive(g.edges[e].v)) continue;
    new_id[e] = static_cast<int>(edges.size());
    edges.push_back(g.edges[e]);
    parent.push_back(g.parent_edge[e]);
  }
  std::vector<std::vector<int>> rot(g.n);
  for (int v = 0; v < g.n; ++v) {
    for (int d : g.rot[v]) {
      int e = dart_edge(d);
      if (new_id[e] < 0) continue;
      rot[v].push_back(dart_of(new_id[e], d & 1));
    }
  }
  EmbeddedGraph out = build_embedding(g.n, std::move(edges), g.directed, std::move(rot));
  out.parent_edge = std::move(parent);
  return out;
}

// ---- Interior signatures and the crossing relation ----------------------

namespace detail {
// Checks the edge set forms a simple cycle; returns per-vertex incident cycle
// edges for walk reconstruction.
inline void check_simple_cycle(const EmbeddedGraph& g, const std::vector<int>& cyc_edges) {
  require(cyc_edges.size() >= 2, ErrorKind::NotACycle, "a cycle needs at least two edges");
  std::map<int, int> deg;
  for (size_t i = 0; i < cyc_edges.size(); ++i) {
    int e = cyc_edges[i];
    require(0 <= e && e < g.m(), ErrorKind::NotACycle, "edge id out of range");
    require(i == 0 || cyc_edges[i] != cyc_edges[i - 1], ErrorKind::NotACycle, "repeated edge");
    deg[g.edges[e].u]++;
    deg[g.edges[e].v]++;
  }
  for (auto [v, d] : deg)
    require(d == 2, ErrorKind::NotACycle, "edge set is not a disjoint union at vertex degree 2");
  // Connectivity over the cycle edges.
  std::map<int, std::vector<int>> inc;
  for (int e : cyc_edges) {
    inc[g.edges[e].u].push_back(e);
    inc[g.edges[e].v].push_back(e);
  }
  std::map<int, char> seen;
  std::vector<int> stack{g.edges[cyc_edges[0]].u};
  seen[stack[0]] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : inc[v]) {
      int w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  require(seen.size() == deg.size(), ErrorKind::NotACycle, "edge set is a union of several cycles");
}
}  // namespace detail

// The set of finite faces on the side of the cycle not containing the
// infinite face (flood fill in the dual blocked by the cycle's edges).
// `cyc_edges` must be sorted.
inline FaceSet interior_signature(const EmbeddedGraph& g, const std::vector<int>& cyc_edges) {
  detail::check_simple_cycle(g, cyc_edges);
  std::vector<char> blocked(g.m(), 0);
  for (int e : cyc_edges) {
    require(!blocked[e], ErrorKind::NotACycle, "repeated edge in cycle");
    blocked[e] = 1;
  }
  FaceSet reached(g.num_faces());
  std::vector<int> stack{g.infinite_face};
  reached.set(g.infinite_face);
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int d : g.faces[f]) {
      int e = dart_edge(d);
      if (blocked[e]) continue;
      int f2 = g.face_of_dart[dart_reverse(d)];
      if (!reached.test(f2)) {
        reached.set(f2);
        stack.push_back(f2);
      }
    }
  }
  FaceSet sig = ~reached;
  return sig;
}

enum class CycleRelation { Equal, DisjointInteriors, C1InsideC2, C2InsideC1, Crossing };

inline const char* relation_name(CycleRelation r) {
  switch (r) {
    case CycleRelation::Equal: return "equal";
    case CycleRelation::DisjointInteriors: return "disjoint_interiors";
    case CycleRelation::C1InsideC2: return "c1_inside_c2";
    case CycleRelation::C2InsideC1: return "c2_inside_c1";
    case CycleRelation::Crossing: return "crossing";
  }
  return "?";
}

inline CycleRelation crossing_relation(const FaceSet& s1, const FaceSet& s2) {
  if (s1 == s2) return CycleRelation::Equal;
  if (s1.is_subset_of(s2)) return CycleRelation::C1InsideC2;
  if (s2.is_subset_of(s1)) return CycleRelation::C2InsideC1;
  if (!s1.intersects(s2)) return CycleRelation::DisjointInteriors;
  return CycleRelation::Crossing;
}

inline bool signatures_cross(const FaceSet& s1, const FaceSet& s2) {
  return crossing_relation(s1, s2) == CycleRelation::Crossing;
}

// ---- Outerplanarity levels ----------------------------------------------

// Level 1 = vertices on the infinite face; deleting all vertices of level <= i
// exposes level i+1. Computed as alternating BFS in the vertex/face incidence
// structure. Vertices with no incident edges get level 1.
inline std::vector<int> outerplanarity_levels(const EmbeddedGraph& g) {
  std::vector<int> vlevel(g.n, -1);
  std::vector<int> fdepth(g.num_faces(), -1);
  if (g.num_faces() == 0) return std::vector<int>(g.n, 1);
  fdepth[g.infinite_face] = 0;
  std::vector<int> frontier{g.infinite_face};
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<int> verts;
    for (int f : frontier)
      for (int d : g.faces[f]) {
        int v = g.dart_tail(d);
        if (vlevel[v] == -1) {
          vlevel[v] = depth;
          verts.push_back(v);
        }
      }
    std::vector<int> next;
    for (int v : verts)
      for (int d : g.rot[v]) {
        for (int f : {g.face_of_dart[d], g.face_of_dart[dart_reverse(d)]}) {
          if (fdepth[f] == -1) {
            fdepth[f] = depth;
            next.push_back(f);
          }
        }
      }
    frontier = std::move(next);
  }
  for (int v = 0; v < g.n; ++v)
    if (vlevel[v] == -1) vlevel[v] = 1;  // isolated vertices
  return vlevel;
}

// ---- Laminar forest ------------------------------------------------------

struct LaminarForest {
  std::vector<int> parent;                 // -1 for roots
  std::vector<std::vector<int>> children;  // sorted
  std::vector<int> roots;                  // sorted
};

// Parent = unique minimal strict superset by interior signature. Throws
// NotLaminar when two signatures cross. Duplicate signatures are chained
// (the later index hangs below the earlier one).
inline LaminarForest laminar_forest(const std::vector<FaceSet>& sigs) {
  const int k = static_cast<int>(sigs.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      require(!signatures_cross(sigs[i], sigs[j]), ErrorKind::NotLaminar,
              "cycles " + std::to_string(i) + " and " + std::to_string(j) + " cross");
  LaminarForest f;
  f.parent.assign(k, -1);
  f.children.assign(k, {});
  for (int i = 0; i < k; ++i) {
    int best = -1;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      bool contains = sigs[i].is_subset_of(sigs[j]) && (sigs[i] != sigs[j] || j < i);
      if (!contains) continue;
      if (best == -1) {
        best = j;
        continue;
      }
      bool tighter = sigs[j] == sigs[best] ? j > best
                                           : (sigs[j].is_subset_of(sigs[best]) && sigs[j] != sigs[best]);
      if (tighter) best = j;
    }
    f.parent[i] = best;
    if (best >= 0)
      f.children[best].push_back(i);
    else
      f.roots.push_back(i);
  }
  return f;
}

}  // namespace cyclepack
