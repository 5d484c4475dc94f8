#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "experiments.hpp"
#include "gridlsh/area_summary.hpp"
#include "gridlsh/reference.hpp"
#include "json_io.hpp"

namespace gridlsh::cli {

namespace {

std::vector<u32> parse_ids(const std::string& text) {
  std::vector<u32> ids;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::runtime_error("--ids: empty entry");
    ids.push_back(static_cast<u32>(std::stoul(tok)));
  }
  if (ids.empty()) throw std::runtime_error("--ids: no ids given");
  return ids;
}

GridRect parse_rect(const std::string& text) {
  std::vector<i64> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stoll(tok));
  if (v.size() != 4) throw std::runtime_error("--rect: expected i1,i2,j1,j2");
  return {v[0], v[1], v[2], v[3]};
}

int cmd_sample_interval(u64 seed, bool have_seed, u64 p, const std::string& hash_text,
                        i64 lo, i64 hi, std::optional<u64> k, std::optional<u64> tau,
                        bool oracle) {
  LinearHash1D h;
  if (!hash_text.empty()) {
    h = parse_hash_1d(hash_text);
  } else {
    if (!have_seed) throw std::runtime_error("sample-interval: --seed or --hash required");
    h = LinearHash1D::from_seed(seed, Prime(p));
  }
  IntervalSample s;
  if (k) {
    s = oracle ? reference::bottom_k(h, lo, hi, *k) : bottom_k(h, lo, hi, *k);
  } else {
    s = oracle ? reference::threshold_sample(h, lo, hi, *tau)
               : threshold_sample(h, lo, hi, *tau);
  }
  for (const auto& e : s.entries)
    std::printf("%lld,%llu\n", (long long)e.x, (unsigned long long)e.hash);
  return 0;
}

int cmd_sample_rect(u64 seed, bool have_seed, u64 p, const std::string& hash_text,
                    const std::string& rect_text, bool oracle) {
  LinearHash2D h;
  if (!hash_text.empty()) {
    h = parse_hash_2d(hash_text);
  } else {
    if (!have_seed) throw std::runtime_error("sample-rect: --seed or --hash required");
    h = LinearHash2D::from_seed(seed, Prime(p));
  }
  GridRect r = parse_rect(rect_text);
  RectSample s = oracle ? reference::zero_set(h, r) : zero_set(h, r);
  if (oracle) {
    // Match the sampler's lexicographic order contract.
    std::sort(s.points.begin(), s.points.end());
  }
  for (const auto& q : s.points)
    std::printf("%lld,%lld\n", (long long)q.x, (long long)q.y);
  return 0;
}

int cmd_hash_histogram(u64 seed, double eps, const std::string& input, u64 max_index) {
  Histogram h = load_histogram(input);
  u64 n = max_index > 0 ? max_index : h.weights.size();
  LshFunction F = LshFunction::for_histograms(seed, eps, n, h.total());
  std::printf("hash=%llu\n", (unsigned long long)histogram_hash(h, F));
  return 0;
}

int cmd_hash_polygon(u64 seed, double eps, double phi, double alpha, i64 grid_side,
                     const std::string& input) {
  GridPolygon poly = load_polygon(input);
  GridSpec grid{grid_side};
  LshFunction F = LshFunction::for_polygons(seed, eps, alpha, phi, grid);
  std::printf("hash=%llu\n", (unsigned long long)polygon_hash(poly, F, grid));
  return 0;
}

int cmd_build_summary(double phi, double eps, double delta, u64 seed, i64 grid_side,
                      const std::string& out_path, const std::vector<std::string>& inputs) {
  std::vector<GridPolygon> polys;
  polys.reserve(inputs.size());
  for (const auto& path : inputs) polys.push_back(load_polygon(path));
  if (grid_side <= 0) {
    // Tight square containing every dilation P+(w/2).
    i64 side = 2;
    for (const auto& poly : polys) {
      double w = phi * poly.diameter();
      GridRect box = poly.bounding_box();
      i64 extent = std::max(box.x_hi, box.y_hi) + static_cast<i64>(std::ceil(w / 2.0)) + 2;
      side = std::max(side, extent);
    }
    grid_side = side;
  }
  AreaSummary summary = build_summary(std::move(polys), {phi, eps, delta, seed},
                                      GridSpec{grid_side});
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  summary.write(out);
  u64 total = 0;
  for (const auto& e : summary.polygons())
    for (const auto& level : e.samples) total += level.size();
  std::printf("polygons=%zu levels=%u..%u samples=%llu out=%s\n",
              summary.polygons().size(), summary.level_min(), summary.level_max(),
              (unsigned long long)total, out_path.c_str());
  return 0;
}

int cmd_query(const std::string& summary_path, const std::string& ids_text, bool intersection) {
  std::ifstream in(summary_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + summary_path);
  AreaSummary summary = AreaSummary::read(in);
  auto ids = parse_ids(ids_text);
  AreaSummary::QueryResult r = intersection ? summary.query_intersection(ids)
                                            : summary.query_union(ids);
  std::printf("estimate=%llu level=%u prime=%llu samples=%llu\n",
              (unsigned long long)r.estimate, r.level, (unsigned long long)r.prime,
              (unsigned long long)r.sample_count);
  return 0;
}

int cmd_experiment_collision(const std::string& type, u64 trials, u64 seed, double eps,
                             double alpha, double phi, i64 grid_side,
                             const std::string& input_a, const std::string& input_b,
                             bool quiet_csv) {
  std::ostream* csv = quiet_csv ? nullptr : &std::cout;
  CollisionResult r;
  if (type == "histogram") {
    r = run_histogram_collision(load_histogram(input_a), load_histogram(input_b), seed,
                                eps, trials, csv);
  } else if (type == "set") {
    r = run_set_collision(load_points(input_a), load_points(input_b), seed, eps, alpha,
                          GridSpec{grid_side}, trials, csv);
  } else if (type == "polygon") {
    r = run_polygon_collision(load_polygon(input_a), load_polygon(input_b), seed, eps,
                              alpha, phi, GridSpec{grid_side}, trials, csv);
  } else {
    throw std::runtime_error("--type must be histogram, polygon or set");
  }
  std::printf("rate=%.6f j=%.6f band=[%.6f,%.6f] verdict=%s\n", r.rate, r.exact_j,
              r.band_lo, r.band_hi, r.pass ? "PASS" : "FAIL");
  return 0;
}

int cmd_experiment_estimator(u64 trials, u64 seed, u64 p, u64 mu, double eps,
                             bool quiet_csv) {
  std::ostream* csv = quiet_csv ? nullptr : &std::cout;
  EstimatorResult r = run_estimator_experiment(trials, seed, p, mu, eps, csv);
  std::printf("failure_rate=%.6f bound=%.6f limit=%.6f verdict=%s\n", r.failure_rate,
              r.bound, r.limit, r.pass ? "PASS" : "FAIL");
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"gridlsh: range-efficient consistent sampling and LSH on grids"};
  app.require_subcommand(1);

  u64 seed = 0;
  auto add_seed = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--seed", seed, "64-bit seed determining all hash parameters");
    if (required) opt->required();
    return opt;
  };

  // sample-interval
  auto* si = app.add_subcommand("sample-interval", "bottom-k or threshold sample of [lo, hi]");
  u64 si_p = 0;
  i64 si_lo = 0, si_hi = 0;
  u64 si_k_val = 0, si_tau_val = 0;
  std::string si_hash;
  bool si_oracle = false;
  add_seed(si, false);
  si->add_option("--p", si_p, "field prime");
  si->add_option("--lo", si_lo, "interval lower bound")->required();
  si->add_option("--hi", si_hi, "interval upper bound")->required();
  auto* si_kopt = si->add_option("--k", si_k_val, "bottom-k sample size");
  auto* si_topt = si->add_option("--tau", si_tau_val, "exclusive hash threshold");
  si_kopt->excludes(si_topt);
  si->add_flag("--oracle", si_oracle, "use the exhaustive-scan reference sampler");
  si->add_option("--hash", si_hash, "override hash parameters, form a,b@p");
  si->callback([&] {
    std::optional<u64> k, tau;
    if (si_kopt->count()) k = si_k_val;
    if (si_topt->count()) tau = si_tau_val;
    if (!k && !tau) throw CLI::ValidationError("sample-interval", "need --k or --tau");
    cmd_sample_interval(seed, si->count("--seed") > 0, si_p, si_hash, si_lo, si_hi, k,
                        tau, si_oracle);
  });

  // sample-rect
  auto* sr = app.add_subcommand("sample-rect", "zero-set sample of a rectangle");
  u64 sr_p = 0;
  std::string sr_rect, sr_hash;
  bool sr_oracle = false;
  add_seed(sr, false);
  sr->add_option("--p", sr_p, "field prime");
  sr->add_option("--rect", sr_rect, "rectangle i1,i2,j1,j2")->required();
  sr->add_option("--hash", sr_hash, "override hash parameters, form a,b,c@p");
  sr->add_flag("--oracle", sr_oracle, "use the exhaustive-scan reference sampler");
  sr->callback([&] {
    cmd_sample_rect(seed, sr->count("--seed") > 0, sr_p, sr_hash, sr_rect, sr_oracle);
  });

  // hash-histogram
  auto* hh = app.add_subcommand("hash-histogram", "LSH value of a histogram");
  double hh_eps = 0.1;
  std::string hh_input;
  u64 hh_max_index = 0;
  add_seed(hh, true);
  hh->add_option("--eps", hh_eps, "additive collision error")->required();
  hh->add_option("--input", hh_input, "histogram JSON {\"weights\": [...]}")->required();
  hh->add_option("--max-index", hh_max_index, "index range bound (default: length)");
  hh->callback([&] { cmd_hash_histogram(seed, hh_eps, hh_input, hh_max_index); });

  // hash-polygon
  auto* hp = app.add_subcommand("hash-polygon", "LSH value of a lattice polygon");
  double hp_eps = 0.35, hp_phi = 0.1, hp_alpha = 0.25;
  i64 hp_grid = 0;
  std::string hp_input;
  add_seed(hp, true);
  hp->add_option("--eps", hp_eps, "additive collision error")->required();
  hp->add_option("--phi", hp_phi, "fuzzy-model parameter")->required();
  hp->add_option("--grid", hp_grid, "grid side (points per axis)")->required();
  hp->add_option("--alpha", hp_alpha, "density lower bound (default 0.25)");
  hp->add_option("--input", hp_input, "polygon JSON {\"vertices\": [[x,y],...]}")->required();
  hp->callback([&] { cmd_hash_polygon(seed, hp_eps, hp_phi, hp_alpha, hp_grid, hp_input); });

  // build-summary
  auto* bs = app.add_subcommand("build-summary", "multi-rate sample summary of polygons");
  double bs_phi = 0.25, bs_eps = 0.2, bs_delta = 0.2;
  i64 bs_grid = 0;
  std::string bs_out;
  std::vector<std::string> bs_inputs;
  add_seed(bs, true);
  bs->add_option("--phi", bs_phi, "fuzzy-model parameter")->required();
  bs->add_option("--eps", bs_eps, "relative error")->required();
  bs->add_option("--delta", bs_delta, "failure probability")->required();
  bs->add_option("--grid", bs_grid, "grid side (default: tight bound over the dilations)");
  bs->add_option("--out", bs_out, "output summary file")->required();
  bs->add_option("polygons", bs_inputs, "polygon JSON files")->required();
  bs->callback([&] {
    cmd_build_summary(bs_phi, bs_eps, bs_delta, seed, bs_grid, bs_out, bs_inputs);
  });

  // query-union / query-intersection
  for (bool intersection : {false, true}) {
    auto* q = app.add_subcommand(intersection ? "query-intersection" : "query-union",
                                 intersection ? "estimate |∩ Q+(w/2)| from a summary"
                                              : "estimate |∪ Q+(w/2)| from a summary");
    auto path = std::make_shared<std::string>();
    auto ids = std::make_shared<std::string>();
    q->add_option("--summary", *path, "summary file from build-summary")->required();
    q->add_option("--ids", *ids, "comma-separated polygon ids")->required();
    q->callback([path, ids, intersection] { cmd_query(*path, *ids, intersection); });
  }

  // experiment
  auto* ex = app.add_subcommand("experiment", "Monte-Carlo reproductions");
  ex->require_subcommand(1);
  auto* col = ex->add_subcommand("collision", "empirical collision rate vs. exact Jaccard");
  std::string col_type, col_a, col_b;
  u64 col_trials = 10000;
  double col_eps = 0.1, col_alpha = 0.25, col_phi = 0.1;
  i64 col_grid = 200;
  bool col_quiet = false;
  add_seed(col, true);
  col->add_option("--type", col_type, "histogram | polygon | set")->required();
  col->add_option("--trials", col_trials, "number of independent seeds")->required();
  col->add_option("--eps", col_eps, "additive collision error")->required();
  col->add_option("--alpha", col_alpha, "density parameter (set/polygon)");
  col->add_option("--phi", col_phi, "fuzzy parameter (polygon)");
  col->add_option("--grid", col_grid, "grid side (set/polygon)");
  col->add_option("--input-a", col_a, "first object JSON")->required();
  col->add_option("--input-b", col_b, "second object JSON")->required();
  col->add_flag("--no-csv", col_quiet, "suppress per-trial CSV rows");
  col->callback([&] {
    cmd_experiment_collision(col_type, col_trials, seed, col_eps, col_alpha, col_phi,
                             col_grid, col_a, col_b, col_quiet);
  });

  auto* est = ex->add_subcommand("estimator", "zero-set count estimator concentration");
  u64 est_trials = 10000, est_p = 101, est_mu = 10000;
  double est_eps = 0.5;
  bool est_quiet = false;
  add_seed(est, true);
  est->add_option("--trials", est_trials, "number of independent seeds")->required();
  est->add_option("--p", est_p, "sampling prime")->required();
  est->add_option("--mu", est_mu, "true count |S|")->required();
  est->add_option("--eps", est_eps, "relative error")->required();
  est->add_flag("--no-csv", est_quiet, "suppress per-trial CSV rows");
  est->callback([&] { cmd_experiment_estimator(est_trials, seed, est_p, est_mu, est_eps, est_quiet); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace
}  // namespace gridlsh::cli

int main(int argc, char** argv) { return gridlsh::cli::run(argc, argv); }
