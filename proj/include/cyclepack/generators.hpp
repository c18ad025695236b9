#pragma once

// Seeded instance generators and classic constructions. Every generator that
// has a meaningful drawing pins an explicit rotation system so instances are
// reproducible bit-for-bit and the intended face structure is guaranteed
// (planarity testing alone may return a different, equally valid embedding).

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclepack/cycle.hpp"
#include "cyclepack/embedding.hpp"
#include "cyclepack/instance.hpp"

namespace cyclepack {

namespace detail {

inline int rng_below(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<unsigned long long>(n));
}

// Dart with tail a on the edge {a,b}, given the id lookup used while a
// generator assembles its edge list.
inline int dart_toward(const std::map<std::pair<int, int>, int>& id, int a, int b) {
  auto it = id.find({a, b});
  if (it != id.end()) return dart_of(it->second, 0);
  return dart_of(id.at({b, a}), 1);
}

}  // namespace detail

// Rectangular grid drawn in the plane: vertex (r,c) has id r*cols+c and its
// darts appear counterclockwise as right, up, left, down.
inline Instance gen_grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, ErrorKind::BadParams, "grid needs positive dimensions");
  Instance ins;
  ins.name = "grid-" + std::to_string(rows) + "x" + std::to_string(cols);
  ins.n = rows * cols;
  auto vid = [&](int r, int c) { return cols * r + c; };
  std::map<std::pair<int, int>, int> id;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        id[{vid(r, c), vid(r, c + 1)}] = static_cast<int>(ins.edges.size());
        ins.edges.emplace_back(vid(r, c), vid(r, c + 1));
      }
      if (r + 1 < rows) {
        id[{vid(r, c), vid(r + 1, c)}] = static_cast<int>(ins.edges.size());
        ins.edges.emplace_back(vid(r, c), vid(r + 1, c));
      }
    }
  std::vector<std::vector<int>> rot(ins.n);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = vid(r, c);
      if (c + 1 < cols) rot[v].push_back(detail::dart_toward(id, v, vid(r, c + 1)));
      if (r > 0) rot[v].push_back(detail::dart_toward(id, v, vid(r - 1, c)));
      if (c > 0) rot[v].push_back(detail::dart_toward(id, v, vid(r, c - 1)));
      if (r + 1 < rows) rot[v].push_back(detail::dart_toward(id, v, vid(r + 1, c)));
    }
  ins.rotation = std::move(rot);
  return ins;
}

// Grid with k columns and 2k rows whose demand edges are the k vertical edges
// between the two middle rows. With the family of cycles through at least one
// demand edge, x_v = 1/4 on the 2k middle-row vertices is a fractional cycle
// transversal of value k/2, while any integral transversal needs k-1 vertices.
inline Instance gen_grid_gap(int k) {
  require(k >= 2, ErrorKind::BadParams, "gap construction needs at least two columns");
  Instance ins = gen_grid(2 * k, k);
  ins.name = "grid-gap-" + std::to_string(k);
  for (int c = 0; c < k; ++c) {
    int top = k * (k - 1) + c, bot = k * k + c;
    for (size_t e = 0; e < ins.edges.size(); ++e)
      if (ins.edges[e] == std::make_pair(top, bot)) ins.demand_edges.push_back(static_cast<int>(e));
  }
  require(static_cast<int>(ins.demand_edges.size()) == k, ErrorKind::Internal,
          "expected one demand edge per column");
  return ins;
}

// Path on n vertices (no cycles at all).
inline Instance gen_path(int n) {
  require(n >= 1, ErrorKind::BadParams, "path needs at least one vertex");
  Instance ins;
  ins.name = "path-" + std::to_string(n);
  ins.n = n;
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i + 1 < n; ++i) {
    ins.edges.emplace_back(i, i + 1);
    rot[i].push_back(dart_of(i, 0));
    rot[i + 1].push_back(dart_of(i, 1));
  }
  ins.rotation = std::move(rot);
  return ins;
}

// Complete graph on four vertices, drawn with vertex 3 inside triangle 0,1,2.
// Edges in lexicographic order, so {2,3} is edge 5.
inline Instance gen_k4() {
  Instance ins;
  ins.name = "k4";
  ins.n = 4;
  ins.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  ins.rotation = {{0, 4, 2}, {6, 8, 1}, {3, 10, 7}, {11, 5, 9}};
  return ins;
}

// Two poles joined by four internally disjoint length-two paths, in rotation
// order p, r, q, s; the middle vertices are 2,3,4,5.
inline Instance gen_banana() {
  Instance ins;
  ins.name = "banana";
  ins.n = 6;
  for (int w = 2; w <= 5; ++w) {
    ins.edges.emplace_back(0, w);
    ins.edges.emplace_back(w, 1);
  }
  ins.rotation = {{0, 4, 8, 12}, {15, 11, 7, 3}, {1, 2}, {5, 6}, {9, 10}, {13, 14}};
  return ins;
}

// Wheel: rim 0..k-1 with hub k.
inline Instance gen_wheel(int k) {
  require(k >= 3, ErrorKind::BadParams, "wheel needs a rim of at least three vertices");
  Instance ins;
  ins.name = "wheel-" + std::to_string(k);
  ins.n = k + 1;
  for (int i = 0; i < k; ++i) ins.edges.emplace_back(i, (i + 1) % k);
  for (int i = 0; i < k; ++i) ins.edges.emplace_back(i, k);
  std::vector<std::vector<int>> rot(k + 1);
  for (int i = 0; i < k; ++i) {
    int prev = (i + k - 1) % k;
    rot[i] = {dart_of(i, 0), dart_of(k + i, 0), dart_of(prev, 1)};
    rot[k].push_back(dart_of(k + i, 1));
  }
  ins.rotation = std::move(rot);
  return ins;
}

// Dodecahedron: pentagonal rings 0-4 and 15-19 joined through the zigzag
// layers 5-9 and 10-14. Three-connected, so its face structure is forced.
inline Instance gen_dodecahedron() {
  Instance ins;
  ins.name = "dodecahedron";
  ins.n = 20;
  for (int i = 0; i < 5; ++i) {
    ins.edges.emplace_back(i, (i + 1) % 5);
    ins.edges.emplace_back(i, 5 + i);
    ins.edges.emplace_back(5 + i, 10 + i);
    ins.edges.emplace_back(5 + i, 10 + (i + 4) % 5);
    ins.edges.emplace_back(10 + i, 15 + i);
    ins.edges.emplace_back(15 + i, 15 + (i + 1) % 5);
  }
  return ins;
}

// Vertex truncation: each dart d becomes a vertex, each edge keeps a shortened
// copy between its two dart vertices, and each original vertex is replaced by
// the polygon of its darts in rotation order. Requires minimum degree three.
inline Instance truncate_graph(const EmbeddedGraph& g, const std::string& name) {
  Instance ins;
  ins.name = name;
  ins.n = 2 * g.m();
  std::vector<std::vector<int>> rot(ins.n);
  for (int e = 0; e < g.m(); ++e) ins.edges.emplace_back(dart_of(e, 0), dart_of(e, 1));
  std::vector<int> to_next(2 * g.m(), -1), to_prev(2 * g.m(), -1);
  for (int v = 0; v < g.n; ++v) {
    int k = static_cast<int>(g.rot[v].size());
    require(k >= 3, ErrorKind::BadParams, "truncation needs minimum degree three");
    for (int i = 0; i < k; ++i) {
      int d = g.rot[v][i], nx = g.rot[v][(i + 1) % k];
      int e = static_cast<int>(ins.edges.size());
      ins.edges.emplace_back(d, nx);
      to_next[d] = dart_of(e, 0);
      to_prev[nx] = dart_of(e, 1);
    }
  }
  for (int d = 0; d < 2 * g.m(); ++d) rot[d] = {dart_of(d >> 1, d & 1), to_next[d], to_prev[d]};
  ins.rotation = std::move(rot);
  return ins;
}

// Truncated dodecahedron together with its twelve decagonal faces as an
// explicit laminar cycle family. Every decagon touches five neighbours in two
// vertices each, and no vertex lies on more than two decagons, so hitting all
// neighbours of any decagon takes five vertices.
inline Instance gen_truncated_dodecahedron() {
  EmbeddedGraph base = gen_dodecahedron().graph();
  require(base.num_faces() == 12, ErrorKind::Internal, "dodecahedron must have twelve faces");
  Instance ins = truncate_graph(base, "truncated-dodecahedron");
  EmbeddedGraph g = ins.graph();
  require(g.n == 60 && g.m() == 90 && g.num_faces() == 32, ErrorKind::Internal,
          "truncated dodecahedron must have 60 vertices, 90 edges, 32 faces");
  for (const auto& walk : g.faces) {
    if (walk.size() != 10) continue;
    std::set<int> es;
    for (int d : walk) es.insert(dart_edge(d));
    ins.cycles.emplace_back(es.begin(), es.end());
  }
  require(ins.cycles.size() == 12, ErrorKind::Internal, "expected twelve decagonal faces");
  return ins;
}

// Cube surface subdivided into an s-by-s grid per face, with one cycle drawn
// around every subdivision vertex so that cycles of adjacent vertices meet in
// exactly one point. Each of the eight degree-three corner cycles additionally
// receives one two-sided cycle per incident face, looping around the two-by-two
// block of cycles diagonal to the corner and meeting the corner cycle in a
// private vertex. The resulting family is laminar, and hitting every cycle
// that shares a vertex with a given member always takes at least four
// vertices.
inline Instance gen_cube_grids(int s = 7) {
  require(s >= 7, ErrorKind::BadParams, "cube construction needs side at least seven");
  const int L = s - 1;
  using P3 = std::array<int, 3>;
  struct Frame {
    P3 o, b1, b2;
  };
  const std::array<Frame, 6> frames = {{
      {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}},  // bottom
      {{0, 0, L}, {1, 0, 0}, {0, 1, 0}},  // top
      {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}},  // front
      {{0, L, 0}, {0, 0, 1}, {1, 0, 0}},  // back
      {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}},  // left
      {{L, 0, 0}, {0, 1, 0}, {0, 0, 1}},  // right
  }};
  auto cross3 = [](P3 a, P3 b) {
    return P3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };

  // Surface lattice.
  std::map<P3, int> vid;
  std::vector<P3> coord;
  std::vector<std::vector<std::vector<int>>> chart(
      6, std::vector<std::vector<int>>(s, std::vector<int>(s, -1)));
  for (int f = 0; f < 6; ++f)
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        P3 p;
        for (int a = 0; a < 3; ++a) p[a] = frames[f].o[a] + i * frames[f].b1[a] + j * frames[f].b2[a];
        auto it = vid.find(p);
        int id;
        if (it != vid.end()) {
          id = it->second;
        } else {
          id = static_cast<int>(coord.size());
          vid[p] = id;
          coord.push_back(p);
        }
        chart[f][i][j] = id;
      }
  const int n1 = static_cast<int>(coord.size());
  std::map<std::pair<int, int>, int> eid;
  std::vector<EdgeRec> edges1;
  auto edge_at = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = eid.find(key);
    if (it != eid.end()) return it->second;
    int id = static_cast<int>(edges1.size());
    eid[key] = id;
    edges1.push_back({a, b});
    return id;
  };
  for (int f = 0; f < 6; ++f)
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        if (i + 1 < s) edge_at(chart[f][i][j], chart[f][i + 1][j]);
        if (j + 1 < s) edge_at(chart[f][i][j], chart[f][i][j + 1]);
      }
  const int m1 = static_cast<int>(edges1.size());

  // Rotation of the surface lattice, counterclockwise as seen from outside:
  // the next tangent direction after t at a point with outward normal n is
  // n x t.
  auto dart1_toward = [&](int a, P3 q) {
    int b = vid.at(q);
    auto key = std::minmax(a, b);
    int e = eid.at(key);
    return edges1[e].u == a ? dart_of(e, 0) : dart_of(e, 1);
  };
  auto shift = [](P3 p, P3 d) { return P3{p[0] + d[0], p[1] + d[1], p[2] + d[2]}; };
  std::vector<std::vector<int>> rot1(n1);
  for (int v = 0; v < n1; ++v) {
    P3 p = coord[v];
    std::vector<int> fixed;
    for (int a = 0; a < 3; ++a)
      if (p[a] == 0 || p[a] == L) fixed.push_back(a);
    auto unit = [](int axis, int sgn) {
      P3 d{0, 0, 0};
      d[axis] = sgn;
      return d;
    };
    auto inward = [&](int axis) { return unit(axis, p[axis] == 0 ? 1 : -1); };
    auto outnrm = [&](int axis) { return unit(axis, p[axis] == 0 ? -1 : 1); };
    if (fixed.size() == 1) {
      P3 nr = outnrm(fixed[0]);
      int t1 = (fixed[0] + 1) % 3;
      P3 d = unit(t1, 1);
      for (int step = 0; step < 4; ++step) {
        rot1[v].push_back(dart1_toward(v, shift(p, d)));
        d = cross3(nr, d);
      }
    } else if (fixed.size() == 2) {
      int free_axis = 3 - fixed[0] - fixed[1];
      P3 t = unit(free_axis, 1);
      P3 dA = inward(fixed[0]), dB = inward(fixed[1]);
      P3 nA = outnrm(fixed[1]), nB = outnrm(fixed[0]);  // face keeping axis fixed[1] resp. fixed[0]
      // After +t comes the face whose inward direction is n x t.
      P3 after = cross3(nA, t);
      bool a_first = (after == dA);
      if (!a_first)
        require(cross3(nB, t) == dB, ErrorKind::Internal, "inconsistent rotation at a seam vertex");
      P3 d1 = a_first ? dA : dB, d2 = a_first ? dB : dA;
      rot1[v] = {dart1_toward(v, shift(p, t)), dart1_toward(v, shift(p, d1)),
                 dart1_toward(v, shift(p, unit(free_axis, -1))), dart1_toward(v, shift(p, d2))};
    } else {
      P3 t0 = inward(0), t1 = inward(1), t2 = inward(2);
      // Consecutive corner darts span a cube face: the successor of t is
      // n x t for the face normal n orthogonal to both.
      auto succ = [&](P3 t, P3 other1, P3 other2) {
        for (P3 cand : {other1, other2}) {
          // The face containing directions t and cand is the one whose fixed
          // axis is the remaining coordinate.
          int axis_t = t[0] ? 0 : (t[1] ? 1 : 2);
          int axis_c = cand[0] ? 0 : (cand[1] ? 1 : 2);
          int axis_n = 3 - axis_t - axis_c;
          if (cross3(outnrm(axis_n), t) == cand) return cand;
        }
        throw Error(ErrorKind::Internal, "no successor direction at a corner");
      };
      P3 a = t0;
      P3 b = succ(a, t1, t2);
      P3 c = (b == t1) ? t2 : t1;
      require(succ(b, c, a) == c && succ(c, a, b) == a, ErrorKind::Internal, "corner order check");
      rot1[v] = {dart1_toward(v, shift(p, a)), dart1_toward(v, shift(p, b)),
                 dart1_toward(v, shift(p, c))};
    }
  }
  EmbeddedGraph g1 = build_embedding(n1, edges1, false, rot1);
  require(g1.num_faces() == 6 * L * L, ErrorKind::Internal, "cube surface face count is off");

  // Kissing graph: one vertex per lattice edge, one closed curve per lattice
  // vertex through the midpoints of its edges in rotation order. Corner
  // curves get one extra vertex per arc to host the tangency of a red cycle.
  std::vector<std::vector<int>> touches(n1);
  for (int v = 0; v < n1; ++v)
    for (int d : rot1[v]) touches[v].push_back(dart_edge(d));
  auto deg1 = [&](int v) { return static_cast<int>(rot1[v].size()); };
  int n2 = m1;
  std::vector<std::pair<int, int>> edges2;
  auto add_edge2 = [&](int a, int b) {
    edges2.emplace_back(a, b);
    return static_cast<int>(edges2.size()) - 1;
  };
  std::vector<std::vector<int>> arcs(n1), half1(n1), half2(n1), pvert(n1);
  for (int v = 0; v < n1; ++v) {
    int k = deg1(v);
    if (k == 3) {
      for (int i = 0; i < k; ++i) {
        int pv = n2++;
        pvert[v].push_back(pv);
        half1[v].push_back(add_edge2(touches[v][i], pv));
        half2[v].push_back(add_edge2(pv, touches[v][(i + 1) % k]));
      }
    } else {
      for (int i = 0; i < k; ++i) arcs[v].push_back(add_edge2(touches[v][i], touches[v][(i + 1) % k]));
    }
  }

  // Circle darts at the midpoint of lattice edge e: the leaving dart follows
  // the curve counterclockwise around v, the arriving dart points back.
  auto pos_in = [&](int v, int e) {
    for (int i = 0; i < deg1(v); ++i)
      if (touches[v][i] == e) return i;
    throw Error(ErrorKind::Internal, "edge not incident to its endpoint");
  };
  auto leave_dart = [&](int v, int e) {
    int i = pos_in(v, e);
    return deg1(v) == 3 ? dart_of(half1[v][i], 0) : dart_of(arcs[v][i], 0);
  };
  auto arrive_dart = [&](int v, int e) {
    int i = (pos_in(v, e) + deg1(v) - 1) % deg1(v);
    return deg1(v) == 3 ? dart_of(half2[v][i], 1) : dart_of(arcs[v][i], 1);
  };

  // Red cycles: one per face corner, looping counterclockwise (in chart
  // coordinates before reflection) around the block diagonal to the corner.
  // Route waypoints are midpoints of face-interior lattice edges; the travel
  // direction and the circles left and right of the lane decide how the red
  // darts interleave with the circle darts.
  using P2 = std::array<int, 2>;
  auto rot90 = [](P2 d) { return P2{-d[1], d[0]}; };
  struct RedVisit {
    int in_dart, out_dart;
    P2 tdir;        // travel direction in chart coordinates
    int cl, cr;     // lattice vertices of the circles left/right of the lane
    P2 pl, pr;      // their doubled chart positions
    P2 kiss;        // doubled midpoint position
  };
  std::map<int, RedVisit> red_at;
  struct RedTangent {
    int in_dart, out_dart, ccw_dart, cw_dart;
    long long align, side;  // sign data for slotting the tangency
  };
  std::map<int, RedTangent> red_p;
  std::vector<std::vector<int>> members;
  const std::array<std::array<int, 4>, 8> KE = {{{1, 0, 1, 1},
                                                 {2, 0, 2, 1},
                                                 {2, 1, 3, 1},
                                                 {2, 2, 3, 2},
                                                 {2, 2, 2, 3},
                                                 {1, 2, 1, 3},
                                                 {0, 2, 1, 2},
                                                 {0, 1, 1, 1}}};
  const std::array<P2, 8> KT = {{{1, 0}, {1, 0}, {0, 1}, {0, 1}, {-1, 0}, {-1, 0}, {0, -1}, {0, -1}}};
  for (int f = 0; f < 6; ++f)
    for (int ci = 0; ci < 2; ++ci)
      for (int cj = 0; cj < 2; ++cj) {
        auto tloc = [&](int i, int j) { return P2{ci ? L - i : i, cj ? L - j : j}; };
        auto lvert = [&](int i, int j) {
          P2 t = tloc(i, j);
          return chart[f][t[0]][t[1]];
        };
        int c = lvert(0, 0);
        require(deg1(c) == 3, ErrorKind::Internal, "face corner is not a cube corner");
        int ea = eid.at(std::minmax(c, lvert(1, 0))), eb = eid.at(std::minmax(c, lvert(0, 1)));
        int pa = pos_in(c, ea), pb = pos_in(c, eb);
        int arc = (pa + 1) % 3 == pb ? pa : pb;
        require((arc + 1) % 3 == (arc == pa ? pb : pa), ErrorKind::Internal, "arc endpoints not consecutive");
        int pv = pvert[c][arc];
        std::vector<int> route{pv};
        for (const auto& ke : KE) route.push_back(eid.at(std::minmax(lvert(ke[0], ke[1]), lvert(ke[2], ke[3]))));
        std::vector<int> redges;
        for (int t = 0; t < 9; ++t) redges.push_back(add_edge2(route[t], route[(t + 1) % 9]));
        members.push_back(redges);
        for (int t = 1; t <= 8; ++t) {
          RedVisit rv;
          rv.in_dart = dart_of(redges[t - 1], 1);
          rv.out_dart = dart_of(redges[t], 0);
          P2 raw = KT[t - 1];
          rv.tdir = {ci ? -raw[0] : raw[0], cj ? -raw[1] : raw[1]};
          const auto& ke = KE[t - 1];
          P2 q1 = tloc(ke[0], ke[1]), q2 = tloc(ke[2], ke[3]);
          int v1 = lvert(ke[0], ke[1]), v2 = lvert(ke[2], ke[3]);
          rv.kiss = {q1[0] + q2[0], q1[1] + q2[1]};
          P2 lpos{rv.kiss[0] + rot90(rv.tdir)[0], rv.kiss[1] + rot90(rv.tdir)[1]};
          if (lpos == P2{2 * q1[0], 2 * q1[1]}) {
            rv.cl = v1, rv.cr = v2;
            rv.pl = {2 * q1[0], 2 * q1[1]}, rv.pr = {2 * q2[0], 2 * q2[1]};
          } else {
            require(lpos == (P2{2 * q2[0], 2 * q2[1]}), ErrorKind::Internal, "lane circle mismatch");
            rv.cl = v2, rv.cr = v1;
            rv.pl = {2 * q2[0], 2 * q2[1]}, rv.pr = {2 * q1[0], 2 * q1[1]};
          }
          red_at[route[t]] = rv;
        }
        RedTangent rt;
        rt.in_dart = dart_of(redges[8], 1);
        rt.out_dart = dart_of(redges[0], 0);
        rt.ccw_dart = dart_of(half2[c][arc], 0);
        rt.cw_dart = dart_of(half1[c][arc], 1);
        P2 delta{ci ? -1 : 1, cj ? -1 : 1};
        P2 corner20{20 * tloc(0, 0)[0], 20 * tloc(0, 0)[1]};
        P2 p20{corner20[0] + 7 * delta[0], corner20[1] + 7 * delta[1]};
        P2 k1a = tloc(1, 0), k1b = tloc(1, 1);
        P2 k20{10 * (k1a[0] + k1b[0]), 10 * (k1a[1] + k1b[1])};
        P2 outdir{k20[0] - p20[0], k20[1] - p20[1]};
        P2 tang = rot90(delta);
        rt.align = 1LL * outdir[0] * tang[0] + 1LL * outdir[1] * tang[1];
        P2 nr = rot90(outdir);
        rt.side = -7LL * delta[0] * nr[0] - 7LL * delta[1] * nr[1];
        require(rt.align != 0 && rt.side != 0, ErrorKind::Internal, "degenerate tangency geometry");
        red_p[pv] = rt;
      }

  // Assemble rotations: a plain midpoint interleaves the two circles as two
  // tangent curves; a midpoint on a red route seats the red darts between
  // them; a tangency vertex seats the red next to the corner curve.
  std::vector<std::vector<int>> rot2(n2);
  for (int e = 0; e < m1; ++e) {
    int u = edges1[e].u, w = edges1[e].v;
    auto it = red_at.find(e);
    if (it == red_at.end()) {
      rot2[e] = {arrive_dart(u, e), leave_dart(w, e), arrive_dart(w, e), leave_dart(u, e)};
      continue;
    }
    const RedVisit& rv = it->second;
    auto fwd_bwd = [&](int cv, P2 cpos) {
      P2 tang{-(rv.kiss[1] - cpos[1]), rv.kiss[0] - cpos[0]};
      if (tang == rv.tdir) return std::pair{leave_dart(cv, e), arrive_dart(cv, e)};
      require(tang == (P2{-rv.tdir[0], -rv.tdir[1]}), ErrorKind::Internal, "lane tangent mismatch");
      return std::pair{arrive_dart(cv, e), leave_dart(cv, e)};
    };
    auto [lf, lb] = fwd_bwd(rv.cl, rv.pl);
    auto [rf, rb] = fwd_bwd(rv.cr, rv.pr);
    rot2[e] = {rf, rv.out_dart, lf, lb, rv.in_dart, rb};
  }
  for (const auto& [pv, rt] : red_p) {
    int cfwd = rt.align > 0 ? rt.ccw_dart : rt.cw_dart;
    int cbwd = rt.align > 0 ? rt.cw_dart : rt.ccw_dart;
    if (rt.side < 0)
      rot2[pv] = {cfwd, rt.out_dart, rt.in_dart, cbwd};
    else
      rot2[pv] = {rt.out_dart, cfwd, cbwd, rt.in_dart};
  }
  for (int v = 0; v < n1; ++v) {
    if (deg1(v) != 3) continue;
    for (int i = 0; i < 3; ++i)
      if (!red_p.count(pvert[v][i]))
        rot2[pvert[v][i]] = {dart_of(half1[v][i], 1), dart_of(half2[v][i], 0)};
  }

  // Members: one circle per lattice vertex plus the red cycles.
  std::vector<std::vector<int>> circles;
  for (int v = 0; v < n1; ++v) {
    if (deg1(v) == 3) {
      std::vector<int> es;
      for (int i = 0; i < 3; ++i) {
        es.push_back(half1[v][i]);
        es.push_back(half2[v][i]);
      }
      circles.push_back(es);
    } else {
      circles.push_back(arcs[v]);
    }
  }

  Instance ins;
  ins.name = "cube-grids-" + std::to_string(s);
  ins.n = n2;
  ins.edges = edges2;
  ins.rotation = rot2;
  for (auto& es : circles) {
    std::sort(es.begin(), es.end());
    ins.cycles.push_back(es);
  }
  for (auto es : members) {
    std::sort(es.begin(), es.end());
    ins.cycles.push_back(es);
  }
  EmbeddedGraph g2 = ins.graph();
  require(g2.num_faces() == m1 + 24 * 9 + 2, ErrorKind::Internal, "kissing graph face count is off");
  return ins;
}

// Random planar graph: a seeded stacked triangulation on n vertices followed
// by edge thinning that keeps every degree at two or more. Directed instances
// orient each surviving edge by a coin flip.
inline Instance gen_random_planar(int n, unsigned long long seed, bool directed = false) {
  require(n >= 1, ErrorKind::BadParams, "need at least one vertex");
  Instance ins;
  ins.name = (directed ? "random-dir-" : "random-") + std::to_string(n) + "-" + std::to_string(seed);
  ins.n = n;
  ins.directed = directed;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  if (n == 2) ins.edges.emplace_back(0, 1);
  if (n < 3) return ins;
  std::vector<std::pair<int, int>> all = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    int fi = detail::rng_below(rng, static_cast<int>(faces.size()));
    auto [a, b, c] = faces[fi];
    faces[fi] = {a, b, v};
    faces.push_back({a, v, c});
    faces.push_back({v, b, c});
    all.emplace_back(a, v);
    all.emplace_back(b, v);
    all.emplace_back(c, v);
  }
  std::vector<char> alive(all.size(), 1);
  std::vector<int> deg(n, 0);
  for (auto [u, v] : all) ++deg[u], ++deg[v];
  int attempts = static_cast<int>(all.size()) / 3;
  for (int t = 0; t < attempts; ++t) {
    int e = detail::rng_below(rng, static_cast<int>(all.size()));
    auto [u, v] = all[e];
    if (alive[e] && deg[u] > 2 && deg[v] > 2) {
      alive[e] = 0;
      --deg[u], --deg[v];
    }
  }
  for (size_t e = 0; e < all.size(); ++e) {
    if (!alive[e]) continue;
    auto [u, v] = all[e];
    if (directed && (rng() & 1)) std::swap(u, v);
    ins.edges.emplace_back(u, v);
  }
  return ins;
}

// Marks a seeded selection of existing edges as demand edges, optionally with
// small random weights.
inline void add_random_demands(Instance& ins, int count, unsigned long long seed, bool weighted) {
  require(count <= static_cast<int>(ins.edges.size()), ErrorKind::BadParams,
          "more demand edges requested than edges present");
  std::mt19937_64 rng(seed * 0xbf58476d1ce4e5b9ULL + 7);
  std::vector<int> ids(ins.edges.size());
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  for (int i = 0; i < count; ++i) {
    int j = i + detail::rng_below(rng, static_cast<int>(ids.size()) - i);
    std::swap(ids[i], ids[j]);
  }
  ids.resize(count);
  std::sort(ids.begin(), ids.end());
  ins.demand_edges = ids;
  if (weighted)
    for (int i = 0; i < count; ++i) ins.demand_weights.emplace_back(1 + detail::rng_below(rng, 9));
}

}  // namespace cyclepack
