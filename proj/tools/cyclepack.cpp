// Command-line driver: generate instances, run the packing pipelines, and
// emit machine-readable reports.

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "../vendor/CLI11.hpp"
#include "cyclepack/generators.hpp"
#include "cyclepack/pipeline.hpp"
#include "cyclepack/svg.hpp"

using namespace cyclepack;
using nlohmann::json;

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BadInstance:
    case ErrorKind::BadParams:
    case ErrorKind::NonPlanar:
    case ErrorKind::InvalidRotation:
    case ErrorKind::NegativeWeight:
    case ErrorKind::Truncated:
      return 3;
    default:
      return 2;  // violated guarantee or internal inconsistency
  }
}

json columns_json(const FractionalPacking& p) {
  json cols = json::array();
  for (size_t i = 0; i < p.columns.size(); ++i)
    cols.push_back({{"x", rat_str(p.x[i])}, {"edges", p.columns[i].eset}});
  return cols;
}

json packing_json(const std::vector<Cycle>& cycles) {
  json out = json::array();
  for (const auto& c : cycles) out.push_back(c.eset);
  return out;
}

void write_output(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  require(out.good(), ErrorKind::BadInstance, "cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

void maybe_draw(const std::string& path, const EmbeddedGraph& g, const FamilySpec& f,
                const std::vector<Cycle>& highlight) {
  if (path.empty()) return;
  std::ofstream out(path);
  require(out.good(), ErrorKind::BadInstance, "cannot open drawing file: " + path);
  out << svg_drawing(g, f.demand, highlight);
}

struct FamilyModeArgs {
  std::string family = "all";
  std::string mode = "vertex";
  FamilyKind kind() const {
    auto k = family_from_name(family);
    require(k.has_value(), ErrorKind::BadParams, "unknown family: " + family);
    return *k;
  }
  DisjointMode dmode() const {
    require(mode == "vertex" || mode == "edge", ErrorKind::BadParams, "mode must be vertex or edge");
    return mode == "vertex" ? DisjointMode::Vertex : DisjointMode::Edge;
  }
  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "cycle family: all, all-directed, girth, girth-directed, odd, d-cycle, hit-d");
    cmd->add_option("--mode", mode, "disjointness mode: vertex or edge");
  }
};

Rat parse_eps(const std::string& s) {
  Rat e = parse_rat(s);
  require(e > 0 && e < Rat(1, 3), ErrorKind::BadParams, "eps must lie in (0, 1/3)");
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"packing disjoint cycles from uncrossable families in planar graphs"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string g_kind, g_out, g_draw;
  int g_rows = 4, g_cols = 4, g_k = 4, g_n = 10, g_m = 2, g_side = 7;
  unsigned long long g_seed = 1;
  bool g_directed = false, g_weighted = false;
  gen->add_option("--kind", g_kind,
                  "grid, grid_gap, truncated_dodecahedron, cube_7x7_ecl, random_planar, random_demands")
      ->required();
  gen->add_option("--rows", g_rows, "grid rows");
  gen->add_option("--cols", g_cols, "grid columns");
  gen->add_option("--k", g_k, "gap construction columns");
  gen->add_option("--n", g_n, "random instance vertex count");
  gen->add_option("--m", g_m, "random demand edge count");
  gen->add_option("--side", g_side, "cube construction grid side");
  gen->add_option("--seed", g_seed, "generator seed");
  gen->add_flag("--directed", g_directed, "orient edges randomly");
  gen->add_flag("--weighted", g_weighted, "attach random demand weights");
  gen->add_option("--out", g_out, "instance file to write");
  gen->add_option("--draw", g_draw, "also write an SVG drawing");

  // ---- pack ----
  auto* pack = app.add_subcommand("pack", "combinatorial approximate packing");
  std::string p_in, p_out, p_draw, p_eps = "1/10";
  FamilyModeArgs p_fm;
  pack->add_option("--in", p_in, "instance file")->required();
  pack->add_option("--eps", p_eps, "approximation slack in (0, 1/3)");
  p_fm.attach(pack);
  pack->add_option("--out", p_out, "report file (stdout when absent)");
  pack->add_option("--draw", p_draw, "SVG of the packing");

  // ---- lp ----
  auto* lp = app.add_subcommand("lp", "fractional packing optimum by column generation");
  std::string l_in, l_out;
  FamilyModeArgs l_fm;
  lp->add_option("--in", l_in, "instance file")->required();
  l_fm.attach(lp);
  lp->add_option("--out", l_out, "report file (stdout when absent)");

  // ---- laminarize ----
  auto* lam = app.add_subcommand("laminarize", "minimum-length LP optimum with laminar support");
  std::string la_in, la_out;
  bool la_trace = false;
  FamilyModeArgs la_fm;
  lam->add_option("--in", la_in, "instance file")->required();
  la_fm.attach(lam);
  lam->add_flag("--trace", la_trace, "include the uncrossing exchange trace");
  lam->add_option("--out", la_out, "report file (stdout when absent)");

  // ---- round ----
  auto* rnd = app.add_subcommand("round", "LP-based packing: solve, laminarize, round");
  std::string r_in, r_out, r_draw;
  FamilyModeArgs r_fm;
  rnd->add_option("--in", r_in, "instance file")->required();
  r_fm.attach(rnd);
  rnd->add_option("--out", r_out, "report file (stdout when absent)");
  rnd->add_option("--draw", r_draw, "SVG of the packing");

  // ---- exact ----
  auto* ex = app.add_subcommand("exact", "exact packing, transversal, and LP baselines");
  std::string e_in, e_out, e_draw;
  FamilyModeArgs e_fm;
  ex->add_option("--in", e_in, "instance file")->required();
  e_fm.attach(ex);
  ex->add_option("--out", e_out, "report file (stdout when absent)");
  ex->add_option("--draw", e_draw, "SVG of the packing");

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "run pipelines over several instances");
  std::vector<std::string> b_in;
  std::string b_out, b_csv, b_pipeline = "both", b_eps = "1/10";
  int b_jobs = 0;
  FamilyModeArgs b_fm;
  bench->add_option("--in", b_in, "instance files")->required()->expected(-1);
  b_fm.attach(bench);
  bench->add_option("--eps", b_eps, "approximation slack in (0, 1/3)");
  bench->add_option("--pipeline", b_pipeline, "combinatorial, lp-round, or both");
  bench->add_option("--jobs", b_jobs, "worker threads (default: hardware)");
  bench->add_option("--out", b_out, "JSON report file (stdout when absent)");
  bench->add_option("--csv", b_csv, "CSV report file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      Instance ins;
      if (g_kind == "grid") {
        ins = gen_grid(g_rows, g_cols);
      } else if (g_kind == "grid_gap") {
        ins = gen_grid_gap(g_k);
      } else if (g_kind == "truncated_dodecahedron") {
        ins = gen_truncated_dodecahedron();
      } else if (g_kind == "cube_7x7_ecl") {
        ins = gen_cube_grids(g_side);
      } else if (g_kind == "random_planar") {
        ins = gen_random_planar(g_n, g_seed, g_directed);
      } else if (g_kind == "random_demands") {
        ins = gen_random_planar(g_n, g_seed, g_directed);
        int avail = static_cast<int>(ins.edges.size());
        add_random_demands(ins, std::min(g_m, avail), g_seed + 1, g_weighted);
        ins.name += g_weighted ? "-wdem" : "-dem";
      } else {
        fail(ErrorKind::BadParams, "unknown generator kind: " + g_kind);
      }
      if (g_out.empty())
        std::cout << instance_to_json(ins).dump(2) << "\n";
      else
        save_instance(ins, g_out);
      if (!g_draw.empty()) {
        EmbeddedGraph g = ins.graph();
        std::vector<char> dem(g.m(), 0);
        for (int e : ins.demand_edges) dem[e] = 1;
        std::ofstream out(g_draw);
        require(out.good(), ErrorKind::BadInstance, "cannot open drawing file: " + g_draw);
        std::vector<Cycle> fam;
        for (const auto& es : ins.cycles) fam.push_back(make_cycle(g, es));
        out << svg_drawing(g, dem, fam);
      }
      return 0;
    }

    if (pack->parsed()) {
      Instance ins = load_instance(p_in);
      EmbeddedGraph g = ins.graph();
      FamilySpec f = ins.family(g, p_fm.kind());
      Packing res = approx_pack(g, f, parse_eps(p_eps), p_fm.dmode());
      verify_packing(g, f, res);
      json j = {{"instance", ins.name},
                {"family", family_name(f.kind)},
                {"mode", p_fm.mode},
                {"eps", p_eps},
                {"value", rat_str(packing_weight(f, res))},
                {"cycles", packing_json(res.cycles)}};
      write_output(j, p_out);
      maybe_draw(p_draw, g, f, res.cycles);
      return 0;
    }

    if (lp->parsed()) {
      Instance ins = load_instance(l_in);
      EmbeddedGraph g = ins.graph();
      FamilySpec f = ins.family(g, l_fm.kind());
      FractionalPacking sol = solve_packing_lp(g, f, l_fm.dmode());
      json dual = json::array();
      for (const Rat& y : sol.dual) dual.push_back(rat_str(y));
      json j = {{"instance", ins.name},
                {"family", family_name(f.kind)},
                {"mode", l_fm.mode},
                {"value", rat_str(sol.value)},
                {"total_length", rat_str(sol.total_length)},
                {"columns", columns_json(sol)},
                {"dual", dual}};
      write_output(j, l_out);
      return 0;
    }

    if (lam->parsed()) {
      Instance ins = load_instance(la_in);
      EmbeddedGraph g = ins.graph();
      FamilySpec f = ins.family(g, la_fm.kind());
      FractionalPacking sol = solve_packing_lp(g, f, la_fm.dmode());
      FractionalPacking refined = refine_min_length(g, f, la_fm.dmode(), sol);
      LaminarizeResult res = laminarize_lp(g, f, refined);
      json j = {{"instance", ins.name},
                {"family", family_name(f.kind)},
                {"mode", la_fm.mode},
                {"value", rat_str(res.packing.value)},
                {"total_length", rat_str(res.packing.total_length)},
                {"before", columns_json(refined)},
                {"after", columns_json(res.packing)},
                {"exchange_steps", res.exchange_steps}};
      if (la_trace) {
        json tr = json::array();
        for (const auto& st : res.trace)
          tr.push_back({{"kind", st.is_shift ? "shift" : "uncross"},
                        {"vertices", {st.v, st.w}},
                        {"replaced", {st.in1, st.in2}},
                        {"by", {st.out1, st.out2}},
                        {"mass", rat_str(st.delta)}});
        j["trace"] = tr;
      }
      write_output(j, la_out);
      return 0;
    }

    if (rnd->parsed()) {
      Instance ins = load_instance(r_in);
      EmbeddedGraph g = ins.graph();
      FamilySpec f = ins.family(g, r_fm.kind());
      DisjointMode mode = r_fm.dmode();
      BenchRow row = run_pipeline(g, f, ins.name, mode, Rat(1, 10), PipelineChoice::LpRound);
      json j = {{"instance", ins.name},
                {"family", family_name(f.kind)},
                {"mode", r_fm.mode},
                {"lp_value", rat_or_dash(row.lp_value)},
                {"value", rat_or_dash(row.round_value)},
                {"ratio", rat_or_dash(row.round_ratio())},
                {"five_color_fallback", row.five_color_fallback}};
      write_output(j, r_out);
      if (!r_draw.empty()) {
        FractionalPacking sol = solve_packing_lp(g, f, mode);
        LaminarizeResult lamr = laminarize_lp(g, f, refine_min_length(g, f, mode, sol));
        std::vector<Cycle> cycles = f.weighted() && mode == DisjointMode::Vertex
                                        ? round_weighted_vertex(g, f, lamr.packing)
                                        : mode == DisjointMode::Vertex
                                              ? round_vertex(g, lamr.packing)
                                              : round_edge(g, f, lamr.packing).packing;
        maybe_draw(r_draw, g, f, cycles);
      }
      return 0;
    }

    if (ex->parsed()) {
      Instance ins = load_instance(e_in);
      EmbeddedGraph g = ins.graph();
      FamilySpec f = ins.family(g, e_fm.kind());
      DisjointMode mode = e_fm.dmode();
      ExactPacking best = exact_max_packing(g, f, mode);
      std::vector<int> trans = exact_min_transversal_lazy(g, f, mode);
      ExactLp elp = exact_lp(g, f, mode);
      json j = {{"instance", ins.name},
                {"family", family_name(f.kind)},
                {"mode", e_fm.mode},
                {"packing_value", rat_str(best.weight)},
                {"packing", packing_json(best.cycles)},
                {"transversal_size", trans.size()},
                {"transversal", trans},
                {"lp_value", rat_str(elp.lp.value)}};
      write_output(j, e_out);
      maybe_draw(e_draw, g, f, best.cycles);
      return 0;
    }

    if (bench->parsed()) {
      auto choice = pipeline_from_name(b_pipeline);
      require(choice.has_value(), ErrorKind::BadParams, "unknown pipeline: " + b_pipeline);
      Rat eps = parse_eps(b_eps);
      std::vector<BenchRow> rows(b_in.size());
      std::vector<std::string> guarantee_failures;
      std::mutex mu;
      std::atomic<size_t> next{0};
      int jobs = b_jobs > 0 ? b_jobs : static_cast<int>(std::thread::hardware_concurrency());
      if (jobs < 1) jobs = 1;
      jobs = std::min<int>(jobs, static_cast<int>(b_in.size()));
      auto worker = [&]() {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= b_in.size()) return;
          try {
            Instance ins = load_instance(b_in[i]);
            rows[i] = run_pipeline(ins, b_fm.kind(), b_fm.dmode(), eps, *choice);
          } catch (const Error& e) {
            std::lock_guard<std::mutex> lk(mu);
            rows[i].instance = b_in[i];
            rows[i].family = b_fm.family;
            rows[i].mode = b_fm.mode;
            rows[i].error = e.what();
            if (exit_code_for(e) == 2) guarantee_failures.push_back(e.what());
          }
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      write_output(bench_report_to_json(rows), b_out);
      if (!b_csv.empty()) {
        std::ofstream out(b_csv);
        require(out.good(), ErrorKind::BadInstance, "cannot open CSV file: " + b_csv);
        out << bench_csv_header() << "\n";
        for (const auto& r : rows) out << bench_row_to_csv(r) << "\n";
      }
      if (!guarantee_failures.empty()) {
        for (const auto& m : guarantee_failures) std::cerr << "guarantee failure: " << m << "\n";
        return 2;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
