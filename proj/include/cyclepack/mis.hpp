#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "error.hpp"
#include "rational.hpp"

namespace cyclepack {

// Conflict graph over candidate cycles; packings are its independent sets.
struct ConflictGraph {
  int n = 0;
  std::vector<boost::dynamic_bitset<>> adj;

  explicit ConflictGraph(int n_ = 0) { reset(n_); }
  void reset(int n_) {
    n = n_;
    adj.assign(n, boost::dynamic_bitset<>(n));
  }
  void add_conflict(int i, int j) {
    if (i == j) return;
    adj[i].set(j);
    adj[j].set(i);
  }
  bool conflict(int i, int j) const { return adj[i].test(j); }
};

namespace detail {

// Greedy clique cover of the candidate set: each clique contributes its
// heaviest member to the bound on any independent set inside `cand`.
inline Rat clique_cover_bound(const ConflictGraph& cg, const boost::dynamic_bitset<>& cand,
                              const std::vector<Rat>& weight) {
  std::vector<boost::dynamic_bitset<>> cliques;  // intersection of adj over members
  std::vector<Rat> top;
  Rat bound = 0;
  for (auto v = cand.find_first(); v != boost::dynamic_bitset<>::npos; v = cand.find_next(v)) {
    bool placed = false;
    for (size_t c = 0; c < cliques.size(); ++c) {
      if (cliques[c].test(v)) {
        cliques[c] &= cg.adj[v];
        if (weight[v] > top[c]) {
          bound += weight[v] - top[c];
          top[c] = weight[v];
        }
        placed = true;
        break;
      }
    }
    if (!placed) {
      cliques.push_back(cg.adj[v]);
      top.push_back(weight[v]);
      bound += weight[v];
    }
  }
  return bound;
}

struct MisSearch {
  const ConflictGraph& cg;
  const std::vector<Rat>& weight;
  bool lex_smallest;
  std::vector<int> best, cur;
  Rat best_w = -1;

  void run(boost::dynamic_bitset<> cand, Rat cur_w) {
    size_t entry_mark = cur.size();
    // Vertices with no remaining conflicts are always taken.
    for (auto v = cand.find_first(); v != boost::dynamic_bitset<>::npos;) {
      auto nxt = cand.find_next(v);
      if (!(cg.adj[v] & cand).any()) {
        cur.push_back(static_cast<int>(v));
        cur_w += weight[v];
        cand.reset(v);
      }
      v = nxt;
    }
    if (!cand.any()) {
      if (cur_w > best_w) {
        best_w = cur_w;
        best = cur;
      }
      cur.resize(entry_mark);
      return;
    }
    if (cur_w + clique_cover_bound(cg, cand, weight) <= best_w) {
      cur.resize(entry_mark);
      return;
    }

    size_t pick = cand.find_first();
    if (!lex_smallest) {
      size_t best_deg = 0;
      for (auto v = cand.find_first(); v != boost::dynamic_bitset<>::npos; v = cand.find_next(v)) {
        size_t deg = (cg.adj[v] & cand).count();
        if (deg > best_deg) {
          best_deg = deg;
          pick = v;
        }
      }
    }
    auto with = cand;
    with.reset(pick);
    with -= cg.adj[pick];
    cur.push_back(static_cast<int>(pick));
    run(with, cur_w + weight[pick]);
    cur.pop_back();
    auto without = cand;
    without.reset(pick);
    run(without, cur_w);
    cur.resize(entry_mark);
  }
};

}  // namespace detail

// Exact maximum-weight independent set (branch and bound with greedy
// clique-cover bounds). With `lex_smallest`, branching follows ascending ids so
// the first optimum found — and hence the result — is the lexicographically
// smallest optimum.
inline std::vector<int> max_weight_independent_set(const ConflictGraph& cg, const std::vector<Rat>& weight,
                                                   bool lex_smallest = false) {
  require(static_cast<int>(weight.size()) == cg.n, ErrorKind::BadParams, "one weight per candidate expected");
  detail::MisSearch s{cg, weight, lex_smallest, {}, {}, Rat(-1)};
  boost::dynamic_bitset<> all(cg.n);
  all.set();
  s.run(all, Rat(0));
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

inline std::vector<int> max_independent_set(const ConflictGraph& cg, bool lex_smallest = false) {
  return max_weight_independent_set(cg, std::vector<Rat>(cg.n, Rat(1)), lex_smallest);
}

namespace detail {

struct HitSearch {
  const std::vector<std::vector<int>>& sets;
  std::vector<int> best, cur;
  std::vector<int> hit_count;  // per set: how many chosen elements hit it

  int disjoint_lower_bound() const {
    // Pairwise-disjoint unhit sets each force one more element.
    std::vector<char> used;
    int lb = 0;
    for (size_t s = 0; s < sets.size(); ++s) {
      if (hit_count[s]) continue;
      bool clash = false;
      for (int e : sets[s])
        if (static_cast<size_t>(e) < used.size() && used[e]) clash = true;
      if (clash) continue;
      for (int e : sets[s]) {
        if (static_cast<size_t>(e) >= used.size()) used.resize(e + 1, 0);
        used[e] = 1;
      }
      lb++;
    }
    return lb;
  }

  void run() {
    if (!best.empty() && static_cast<int>(cur.size()) + disjoint_lower_bound() >= static_cast<int>(best.size()))
      return;
    int branch = -1;
    for (size_t s = 0; s < sets.size(); ++s)
      if (!hit_count[s] && (branch == -1 || sets[s].size() < sets[branch].size())) branch = static_cast<int>(s);
    if (branch == -1) {
      if (best.empty() || cur.size() < best.size()) best = cur;
      return;
    }
    for (int e : sets[branch]) {
      cur.push_back(e);
      for (size_t s = 0; s < sets.size(); ++s)
        if (std::binary_search(sets[s].begin(), sets[s].end(), e)) hit_count[s]++;
      run();
      for (size_t s = 0; s < sets.size(); ++s)
        if (std::binary_search(sets[s].begin(), sets[s].end(), e)) hit_count[s]--;
      cur.pop_back();
    }
  }
};

}  // namespace detail

// Exact minimum hitting set over the given element sets (each must be
// nonempty and sorted ascending).
inline std::vector<int> min_hitting_set(const std::vector<std::vector<int>>& sets) {
  for (const auto& s : sets) {
    require(!s.empty(), ErrorKind::BadParams, "cannot hit an empty set");
    require(std::is_sorted(s.begin(), s.end()), ErrorKind::BadParams, "hitting sets must be sorted");
  }
  detail::HitSearch h{sets, {}, {}, std::vector<int>(sets.size(), 0)};
  h.run();
  std::sort(h.best.begin(), h.best.end());
  return h.best;
}

// Greedy hitting set (most-frequent element first), pruned to inclusion-minimal.
inline std::vector<int> greedy_hitting_set(const std::vector<std::vector<int>>& sets) {
  std::vector<char> hit(sets.size(), 0);
  std::vector<int> chosen;
  for (;;) {
    std::map<int, int> freq;
    for (size_t s = 0; s < sets.size(); ++s)
      if (!hit[s])
        for (int e : sets[s]) freq[e]++;
    if (freq.empty()) break;
    int pick = freq.begin()->first, cnt = freq.begin()->second;
    for (auto [e, c] : freq)
      if (c > cnt) {
        pick = e;
        cnt = c;
      }
    chosen.push_back(pick);
    for (size_t s = 0; s < sets.size(); ++s)
      if (!hit[s] && std::binary_search(sets[s].begin(), sets[s].end(), pick)) hit[s] = 1;
  }
  // Prune to inclusion-minimal, dropping earliest-added redundant first.
  for (size_t i = 0; i < chosen.size();) {
    std::vector<int> trial;
    for (size_t j = 0; j < chosen.size(); ++j)
      if (j != i) trial.push_back(chosen[j]);
    bool covers = true;
    for (const auto& s : sets) {
      bool h = false;
      for (int e : trial) h |= std::binary_search(s.begin(), s.end(), e);
      if (!h) {
        covers = false;
        break;
      }
    }
    if (covers)
      chosen = trial;
    else
      ++i;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace cyclepack
