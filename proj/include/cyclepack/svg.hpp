#pragma once

// Static SVG renderings of embedded instances: the infinite-face boundary is
// pinned to a circle and interior vertices go to the barycenter of their
// neighbours, which for a 3-connected planar graph is a planar drawing.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cyclepack/cycle.hpp"
#include "cyclepack/embedding.hpp"

namespace cyclepack {

struct Layout {
  std::vector<double> x, y;
};

inline Layout tutte_layout(const EmbeddedGraph& g) {
  Layout L;
  L.x.assign(g.n, 0.0);
  L.y.assign(g.n, 0.0);
  if (g.n == 0) return L;

  std::vector<char> pinned(g.n, 0);
  std::vector<int> outer;
  if (g.num_faces() > 0)
    for (int d : g.faces[g.infinite_face]) {
      int v = g.dart_tail(d);
      if (!pinned[v]) {
        pinned[v] = 1;
        outer.push_back(v);
      }
    }
  std::vector<int> degree(g.n, 0);
  for (const auto& e : g.edges) ++degree[e.u], ++degree[e.v];
  for (int v = 0; v < g.n; ++v)
    if (degree[v] == 0 && !pinned[v]) {
      pinned[v] = 1;
      outer.push_back(v);
    }
  if (outer.empty())
    for (int v = 0; v < g.n; ++v) {
      pinned[v] = 1;
      outer.push_back(v);
    }
  const double pi = 3.14159265358979323846;
  for (size_t i = 0; i < outer.size(); ++i) {
    double a = 2 * pi * static_cast<double>(i) / static_cast<double>(outer.size());
    L.x[outer[i]] = std::cos(a);
    L.y[outer[i]] = std::sin(a);
  }

  std::vector<int> unknown;  // interior vertices
  std::vector<int> slot(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (!pinned[v]) {
      slot[v] = static_cast<int>(unknown.size());
      unknown.push_back(v);
    }
  int k = static_cast<int>(unknown.size());
  if (k == 0) return L;

  // Dense Laplacian solve, one right-hand side per coordinate.
  std::vector<std::vector<double>> A(k, std::vector<double>(k + 2, 0.0));
  for (int i = 0; i < k; ++i) A[i][i] = static_cast<double>(degree[unknown[i]]);
  for (const auto& e : g.edges) {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (pinned[a]) continue;
      int i = slot[a];
      if (pinned[b]) {
        A[i][k] += L.x[b];
        A[i][k + 1] += L.y[b];
      } else {
        A[i][slot[b]] -= 1.0;
      }
    }
  }
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
    std::swap(A[piv], A[col]);
    double d = A[col][col];
    if (std::fabs(d) < 1e-12) continue;  // disconnected leftovers stay at origin
    for (int c = col; c < k + 2; ++c) A[col][c] /= d;
    for (int r = 0; r < k; ++r) {
      if (r == col || A[r][col] == 0.0) continue;
      double m = A[r][col];
      for (int c = col; c < k + 2; ++c) A[r][c] -= m * A[col][c];
    }
  }
  for (int i = 0; i < k; ++i) {
    L.x[unknown[i]] = A[i][k];
    L.y[unknown[i]] = A[i][k + 1];
  }
  return L;
}

// Renders the instance; demand edges are dashed, and each highlighted cycle
// gets its own stroke color.
inline std::string svg_drawing(const EmbeddedGraph& g, const std::vector<char>& demand = {},
                               const std::vector<Cycle>& highlight = {}) {
  Layout L = tutte_layout(g);
  const double S = 360.0, C = 400.0;
  auto px = [&](int v) { return C + S * L.x[v]; };
  auto py = [&](int v) { return C - S * L.y[v]; };
  static const char* palette[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                                  "#d35400", "#16a085", "#7f8c8d", "#2c3e50"};
  std::vector<int> color_of(g.m(), -1);
  for (size_t i = 0; i < highlight.size(); ++i)
    for (int e : highlight[i].eset) color_of[e] = static_cast<int>(i % 8);

  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='800' height='800' viewBox='0 0 800 800'>\n";
  if (g.directed)
    out << "<defs><marker id='arr' viewBox='0 0 10 10' refX='9' refY='5' markerWidth='5' "
           "markerHeight='5' orient='auto-start-reverse'><path d='M 0 0 L 10 5 L 0 10 z' "
           "fill='#777'/></marker></defs>\n";
  for (int e = 0; e < g.m(); ++e) {
    double x1 = px(g.edges[e].u), y1 = py(g.edges[e].u), x2 = px(g.edges[e].v), y2 = py(g.edges[e].v);
    bool dem = e < static_cast<int>(demand.size()) && demand[e];
    out << "<line x1='" << x1 << "' y1='" << y1 << "' x2='" << x2 << "' y2='" << y2 << "' stroke='"
        << (color_of[e] >= 0 ? palette[color_of[e]] : (dem ? "#e74c3c" : "#999"))
        << "' stroke-width='" << (color_of[e] >= 0 ? 4 : 2) << "'";
    if (dem) out << " stroke-dasharray='6,4'";
    if (g.directed) out << " marker-end='url(#arr)'";
    out << "/>\n";
  }
  for (int v = 0; v < g.n; ++v)
    out << "<circle cx='" << px(v) << "' cy='" << py(v) << "' r='4' fill='#333'/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace cyclepack
