#pragma once

// End-to-end drivers: run the combinatorial and/or LP pipelines on an
// instance, attach exact baselines when the member catalog is enumerable,
// verify the advertised guarantees, and emit report rows as JSON or CSV.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "cyclepack/combinatorial.hpp"
#include "cyclepack/exact.hpp"
#include "cyclepack/instance.hpp"
#include "cyclepack/lp.hpp"
#include "cyclepack/rounding.hpp"
#include "cyclepack/uncross.hpp"

namespace cyclepack {

enum class PipelineChoice { Combinatorial, LpRound, Both };

inline std::optional<PipelineChoice> pipeline_from_name(const std::string& s) {
  if (s == "combinatorial") return PipelineChoice::Combinatorial;
  if (s == "lp-round") return PipelineChoice::LpRound;
  if (s == "both") return PipelineChoice::Both;
  return std::nullopt;
}

struct BenchRow {
  std::string instance;
  std::string family;
  std::string mode;
  std::optional<Rat> opt;          // exact packing optimum, absent when truncated
  std::optional<Rat> lp_value;     // fractional packing optimum
  std::optional<Rat> comb_value;   // combinatorial pipeline packing weight
  std::optional<Rat> round_value;  // LP rounding packing weight
  bool five_color_fallback = false;
  long long ms_exact = 0, ms_lp = 0, ms_comb = 0, ms_round = 0;
  std::string error;  // first stage failure, empty when clean

  std::optional<Rat> comb_ratio() const {
    if (!opt || !comb_value || *opt == 0) return std::nullopt;
    return *comb_value / *opt;
  }
  std::optional<Rat> round_ratio() const {
    if (!lp_value || !round_value || *lp_value == 0) return std::nullopt;
    return *round_value / *lp_value;
  }
};

namespace detail {

inline long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace detail

// Runs the requested pipelines and enforces their guarantees: the
// combinatorial packing is at least (1/3 - eps) of the exact optimum (when
// the optimum is enumerable and the family unweighted), vertex-mode rounding
// keeps at least a fifth of the LP value, and edge-mode rounding keeps a
// quarter (a fifth if the four-coloring budget was exceeded and the
// five-color fallback ran).
inline BenchRow run_pipeline(const EmbeddedGraph& g, const FamilySpec& f, const std::string& instance_name,
                             DisjointMode mode, const Rat& eps, PipelineChoice choice,
                             long catalog_cap = -1) {
  BenchRow row;
  row.instance = instance_name;
  row.family = family_name(f.kind);
  row.mode = mode == DisjointMode::Vertex ? "vertex" : "edge";

  {
    auto t0 = std::chrono::steady_clock::now();
    try {
      row.opt = exact_max_packing(g, f, mode, catalog_cap).weight;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Truncated) throw;
    }
    row.ms_exact = detail::ms_since(t0);
  }

  if (choice != PipelineChoice::LpRound) {
    auto t0 = std::chrono::steady_clock::now();
    Packing p = approx_pack(g, f, eps, mode);
    verify_packing(g, f, p);
    row.comb_value = packing_weight(f, p);
    row.ms_comb = detail::ms_since(t0);
    // The layered packing maximizes cardinality, so its ratio holds against
    // the unweighted optimum only; weighted instances just report the numbers.
    if (row.opt && !f.weighted()) {
      Rat bound = (Rat(1, 3) - eps) * *row.opt;
      require(*row.comb_value >= bound, ErrorKind::BoundViolated,
              "combinatorial packing fell below (1/3 - eps) of optimum on " + instance_name);
    }
  }

  if (choice != PipelineChoice::Combinatorial) {
    auto t0 = std::chrono::steady_clock::now();
    FractionalPacking lp = solve_packing_lp(g, f, mode);
    row.lp_value = lp.value;
    row.ms_lp = detail::ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    if (lp.value > 0) {
      FractionalPacking refined = refine_min_length(g, f, mode, lp);
      LaminarizeResult lam = laminarize_lp(g, f, refined);
      Packing rounded;
      rounded.mode = mode;
      if (mode == DisjointMode::Vertex) {
        rounded.cycles =
            f.weighted() ? round_weighted_vertex(g, f, lam.packing) : round_vertex(g, lam.packing);
      } else {
        EdgeRoundReport er = round_edge(g, f, lam.packing);
        rounded.cycles = er.packing;
        row.five_color_fallback = er.five_color_fallback;
      }
      verify_packing(g, f, rounded);
      row.round_value = packing_weight(f, rounded);
      int denom = (mode == DisjointMode::Edge && !row.five_color_fallback) ? 4 : 5;
      require(*row.round_value >= lp.value / denom, ErrorKind::BoundViolated,
              "rounding fell below the guaranteed fraction of the LP value on " + instance_name);
    } else {
      row.round_value = Rat(0);
    }
    row.ms_round = detail::ms_since(t0);
  }
  return row;
}

inline BenchRow run_pipeline(const Instance& ins, FamilyKind kind, DisjointMode mode, const Rat& eps,
                             PipelineChoice choice, long catalog_cap = -1) {
  EmbeddedGraph g = ins.graph();
  FamilySpec f = ins.family(g, kind);
  return run_pipeline(g, f, ins.name, mode, eps, choice, catalog_cap);
}

// ---- report serialization ----

inline std::string rat_or_dash(const std::optional<Rat>& r) { return r ? rat_str(*r) : "—"; }

inline nlohmann::json bench_row_to_json(const BenchRow& row) {
  nlohmann::json j;
  j["instance"] = row.instance;
  j["family"] = row.family;
  j["mode"] = row.mode;
  j["opt"] = rat_or_dash(row.opt);
  j["lp_value"] = rat_or_dash(row.lp_value);
  j["combinatorial"] = rat_or_dash(row.comb_value);
  j["rounded"] = rat_or_dash(row.round_value);
  j["combinatorial_ratio"] = rat_or_dash(row.comb_ratio());
  j["rounded_ratio"] = rat_or_dash(row.round_ratio());
  j["five_color_fallback"] = row.five_color_fallback;
  j["ms"] = {{"exact", row.ms_exact}, {"lp", row.ms_lp}, {"combinatorial", row.ms_comb}, {"rounding", row.ms_round}};
  if (!row.error.empty()) j["error"] = row.error;
  return j;
}

inline nlohmann::json bench_report_to_json(const std::vector<BenchRow>& rows) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) j["rows"].push_back(bench_row_to_json(r));
  return j;
}

inline std::string bench_csv_header() {
  return "instance,family,mode,opt,lp_value,combinatorial,rounded,combinatorial_ratio,rounded_ratio,"
         "five_color_fallback,ms_exact,ms_lp,ms_combinatorial,ms_rounding,error";
}

inline std::string bench_row_to_csv(const BenchRow& row) {
  std::string s;
  auto add = [&](const std::string& field) {
    if (!s.empty()) s += ',';
    s += field;
  };
  add(row.instance);
  add(row.family);
  add(row.mode);
  add(rat_or_dash(row.opt));
  add(rat_or_dash(row.lp_value));
  add(rat_or_dash(row.comb_value));
  add(rat_or_dash(row.round_value));
  add(rat_or_dash(row.comb_ratio()));
  add(rat_or_dash(row.round_ratio()));
  add(row.five_color_fallback ? "1" : "0");
  add(std::to_string(row.ms_exact));
  add(std::to_string(row.ms_lp));
  add(std::to_string(row.ms_comb));
  add(std::to_string(row.ms_round));
  add(row.error);
  return s;
}

}  // namespace cyclepack
