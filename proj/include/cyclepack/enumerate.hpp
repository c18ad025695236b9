#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "cycle.hpp"
#include "embedding.hpp"
#include "family.hpp"

namespace cyclepack {

constexpr long kDefaultCycleCap = 10000;

// Enumeration budget, overridable through CYCLEPACK_CYCLE_CAP.
inline long cycle_cap_from_env() {
  const char* s = std::getenv("CYCLEPACK_CYCLE_CAP");
  if (!s || !*s) return kDefaultCycleCap;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  require(end && *end == '\0' && v > 0, ErrorKind::BadParams, "CYCLEPACK_CYCLE_CAP must be a positive integer");
  return v;
}

struct CycleCatalog {
  std::vector<Cycle> cycles;  // family members, discovery order
  long raw_count = 0;         // simple cycles inspected before the cap hit
  bool truncated = false;     // enumeration stopped at the cap
};

namespace detail {

struct CycleSearch {
  const EmbeddedGraph& g;
  const FamilySpec& f;
  long cap;
  bool with_sig;
  CycleCatalog out;
  std::vector<char> on_path;
  std::vector<int> path_edges;
  int start = 0;

  bool keep(const std::vector<int>& edges) const {
    switch (f.kind) {
      case FamilyKind::AllUndirected:
      case FamilyKind::AllDirected:
        return true;
      case FamilyKind::GirthUndirected:
      case FamilyKind::GirthDirected:
        return static_cast<long>(edges.size()) == f.girth_len;
      case FamilyKind::Odd:
        return edges.size() % 2 == 1;
      case FamilyKind::ExactlyOneD: {
        int d = 0;
        for (int e : edges) d += f.demand[e];
        return d == 1;
      }
      case FamilyKind::AtLeastOneD: {
        for (int e : edges)
          if (f.demand[e]) return true;
        return false;
      }
    }
    return false;
  }

  // Counts one raw simple cycle; returns false once the cap is exhausted.
  bool record() {
    if (out.raw_count >= cap) {
      out.truncated = true;
      return false;
    }
    out.raw_count++;
    if (keep(path_edges)) {
      std::vector<int> eset = path_edges;
      std::sort(eset.begin(), eset.end());
      out.cycles.push_back(make_cycle(g, eset, with_sig));
    }
    return true;
  }

  // Undirected: closed walks rooted at their minimum vertex, visiting larger
  // vertices once each; the two traversal directions are deduplicated by
  // requiring first edge id < closing edge id.
  bool walk_undirected(int v) {
    for (int d : g.rot[v]) {
      int e = dart_edge(d);
      int w = g.dart_head(d);
      if (w == start) {
        if (path_edges.size() >= 1 && path_edges.front() < e) {
          path_edges.push_back(e);
          bool go = record();
          path_edges.pop_back();
          if (!go) return false;
        }
        continue;
      }
      if (w < start || on_path[w]) continue;
      on_path[w] = 1;
      path_edges.push_back(e);
      bool go = walk_undirected(w);
      path_edges.pop_back();
      on_path[w] = 0;
      if (!go) return false;
    }
    return true;
  }

  // Directed: follow edges forward only; orientation makes each cycle unique.
  bool walk_directed(int v) {
    for (int d : g.rot[v]) {
      if (d & 1) continue;
      int e = dart_edge(d);
      int w = g.edges[e].v;
      if (w == start) {
        path_edges.push_back(e);
        bool go = record();
        path_edges.pop_back();
        if (!go) return false;
        continue;
      }
      if (w < start || on_path[w]) continue;
      on_path[w] = 1;
      path_edges.push_back(e);
      bool go = walk_directed(w);
      path_edges.pop_back();
      on_path[w] = 0;
      if (!go) return false;
    }
    return true;
  }

  void run() {
    on_path.assign(g.n, 0);
    for (start = 0; start < g.n; ++start) {
      on_path[start] = 1;
      bool go = g.directed ? walk_directed(start) : walk_undirected(start);
      on_path[start] = 0;
      if (!go) return;
    }
  }
};

}  // namespace detail

// Every family member as an explicit cycle, up to `cap` raw simple cycles
// (cap < 0 reads the environment override). Check `truncated` before trusting
// the catalog to be complete.
inline CycleCatalog enumerate_cycles(const EmbeddedGraph& g, const FamilySpec& f, long cap = -1,
                                     bool with_sig = true) {
  require(family_is_directed(f.kind) == g.directed, ErrorKind::BadParams, "family/graph direction mismatch");
  if (cap < 0) cap = cycle_cap_from_env();
  detail::CycleSearch s{g, f, cap, with_sig, {}, {}, {}, 0};
  s.run();
  return std::move(s.out);
}

}  // namespace cyclepack
