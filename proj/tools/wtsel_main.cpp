// wtsel — weather-type trajectory evaluation CLI.
//
// Exit codes: 0 success, 1 validation error (bad flags or inputs),
// 2 pipeline error (a stage failed after inputs validated).

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "wtsel/pipeline.hpp"

namespace fs = std::filesystem;
using namespace wtsel;

namespace {

std::set<int> parse_months(const std::string& text) {
  std::set<int> months;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    months.insert(std::stoi(tok));
  }
  return months;
}

std::pair<int, int> parse_years(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("--years expects A:B, got '" + text + "'");
  return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

std::vector<WeatherType> parse_wt_list(const std::string& text) {
  std::vector<WeatherType> wts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) wts.push_back(wt_from_code(tok));
  }
  if (wts.empty()) throw DomainError("empty weather-type list '" + text + "'");
  return wts;
}

// A --models argument may be a CSV file or a directory of CSV files.
std::vector<std::string> expand_models(const std::vector<std::string>& args) {
  std::vector<std::string> paths;
  for (const auto& arg : args) {
    if (fs::is_directory(arg)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(arg)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") {
          found.push_back(entry.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      paths.insert(paths.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(arg)) {
      paths.push_back(arg);
    } else {
      throw DomainError("model path not found: " + arg);
    }
  }
  if (paths.empty()) throw DomainError("no trajectories found");
  return paths;
}

struct CommonFlags {
  std::string ref;
  std::vector<std::string> models;
  std::string out;
  std::string months = "6,7,8,9";
  std::string years = "1979:2005";
  double tsim = 0.8;
  int limit = 0;
  std::string condition = "PA,PC,PDNE,U";
  std::string metric = "overlap";
  std::string subset = "all";
  std::string wt_star = "PA,PDNE,PC,U";
  int min_support = 30;
  std::string corr_method = "pearson";
  std::string key_points;  // "lon:lat,lon:lat,..."; empty = shipped defaults
};

void add_window_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--months", f.months, "Season months, comma-separated (default 6,7,8,9)");
  cmd->add_option("--years", f.years, "Year range A:B (default 1979:2005)");
}

void add_common_flags(CLI::App* cmd, CommonFlags& f, bool with_filter_flags) {
  cmd->add_option("--ref", f.ref, "Reference trajectory CSV")->required();
  cmd->add_option("--models", f.models, "Candidate CSVs or directories")->required();
  cmd->add_option("--out", f.out, "Output directory")->required();
  add_window_flags(cmd, f);
  cmd->add_option("--metric", f.metric, "overlap|dissimilarity|bhattacharyya|hellinger");
  cmd->add_option("--subset", f.subset, "all|top9|top12|cum70|cum90|minrf:T");
  cmd->add_option("--min-support", f.min_support, "Min absolute count for conditionals");
  cmd->add_option("--condition", f.condition, "Conditioning weather types");
  if (with_filter_flags) {
    cmd->add_option("--tsim", f.tsim, "Similarity threshold (default 0.8)");
    cmd->add_option("--limit", f.limit, "Stage elimination limit (default ceil(N_S/3))");
    cmd->add_option("--wt-star", f.wt_star, "Weather types for starred scores");
    cmd->add_option("--corr-method", f.corr_method, "pearson|spearman");
    cmd->add_option("--key-points", f.key_points, "lon:lat pairs, comma-separated");
  }
}

std::vector<LonLat> parse_key_points(const std::string& text) {
  std::vector<LonLat> pts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto colon = tok.find(':');
    if (colon == std::string::npos) {
      throw DomainError("--key-points expects lon:lat pairs, got '" + tok + "'");
    }
    pts.push_back({std::stod(tok.substr(0, colon)), std::stod(tok.substr(colon + 1))});
  }
  return pts;
}

RunConfig make_run_config(const CommonFlags& f) {
  RunConfig cfg;
  cfg.ref_path = f.ref;
  cfg.model_paths = expand_models(f.models);
  cfg.out_dir = f.out;
  const auto [y0, y1] = parse_years(f.years);
  cfg.window = SeasonWindow::create(parse_months(f.months), y0, y1);
  cfg.t_sim = f.tsim;
  cfg.stage_limit = f.limit;
  cfg.conditioning_set = parse_wt_list(f.condition);
  cfg.metric = metric_from_name(f.metric);
  cfg.strategy = SubsetStrategy::parse(f.subset);
  cfg.wt_star = parse_wt_list(f.wt_star);
  cfg.min_support = f.min_support;
  if (f.corr_method == "pearson") {
    cfg.corr_method = CorrelationMethod::Pearson;
  } else if (f.corr_method == "spearman") {
    cfg.corr_method = CorrelationMethod::Spearman;
  } else {
    throw DomainError("--corr-method must be pearson or spearman");
  }
  cfg.key_points = parse_key_points(f.key_points);
  return cfg;
}

int cmd_classify(const std::string& slp_path, const std::string& out,
                 const ClassifierConfig& ccfg, const std::string& roi_kind,
                 const std::string& id) {
  const SlpField field = read_slp(slp_path);
  RegionOfInterest roi;
  if (roi_kind == "iberia") {
    roi = RegionOfInterest::iberia();
  } else if (roi_kind == "grid") {
    std::vector<LonLat> pts;
    for (double lat : field.grid.lat_values) {
      for (double lon : field.grid.lon_values) pts.push_back({lon, lat});
    }
    roi = RegionOfInterest::create(std::move(pts), field.grid);
  } else {
    throw DomainError("--roi must be iberia or grid");
  }
  const WtSeries series = classify_series(field, roi, ccfg, id);
  Provenance prov = {{"source", slp_path},
                     {"lon_span", csvio::fmt(ccfg.lon_span, 6)},
                     {"lat_span", csvio::fmt(ccfg.lat_span, 6)},
                     {"u_flow", csvio::fmt(ccfg.u_flow, 6)},
                     {"u_vort", csvio::fmt(ccfg.u_vort, 6)}};
  write_wt_series(series, out, prov);
  return 0;
}

int cmd_freq(const CommonFlags& f, const std::string& input) {
  const auto [y0, y1] = parse_years(f.years);
  const SeasonWindow window = SeasonWindow::create(parse_months(f.months), y0, y1);
  std::string id;
  const JointFrequencyField joint = load_joint(input, window, &id);
  write_joint_rf(joint, f.out,
                 {{"trajectory", id},
                  {"months", f.months},
                  {"years", f.years}});
  return 0;
}

int cmd_compare(const CommonFlags& f) {
  RunConfig cfg = make_run_config(f);
  fs::create_directories(cfg.out_dir);
  std::string ref_id;
  const TrajectoryFrequencies ref = derive_frequencies(
      "reference", load_joint(cfg.ref_path, cfg.window, &ref_id), cfg.min_support);
  const Provenance prov = cfg.provenance();
  for (const auto& path : cfg.model_paths) {
    std::string id;
    const TrajectoryFrequencies model =
        derive_frequencies(id, load_joint(path, cfg.window, &id), cfg.min_support);
    const ComparisonBundle b = compare_trajectory(ref, model, cfg.metric, cfg.strategy);
    const std::string stem = (fs::path(cfg.out_dir) / ("sim_" + id)).string();
    write_similarity_field(b.daily, stem + "_daily.csv", prov);
    for (const auto& wt : cfg.conditioning_set) {
      write_similarity_field(b.conditionals[wt.index - 1],
                             stem + "_" + std::string(wt.code()) + ".csv", prov);
    }
  }
  return 0;
}

// filter and score share the full computation; they just persist less than
// report does.
int cmd_filter_or_score(const CommonFlags& f, bool want_scores) {
  RunConfig cfg = make_run_config(f);
  const std::string out_dir = cfg.out_dir;
  cfg.out_dir.clear();  // compute only; persist the single artifact below
  const ScoreTable table = run_pipeline(cfg);
  fs::create_directories(out_dir);
  const Provenance prov = cfg.provenance();
  std::vector<std::string> stage_names = {"daily"};
  for (const auto& wt : cfg.conditioning_set) stage_names.emplace_back(wt.code());
  if (want_scores) {
    write_score_table(table, stage_names, (fs::path(out_dir) / "ranking.csv").string(), prov);
  } else {
    std::vector<FilterOutcome> outcomes;
    for (const auto& row : table.rows) {
      FilterOutcome o;
      o.trajectory_id = row.trajectory_id;
      o.stage_names = row.filter_stages;
      o.counts = row.filter_counts;
      o.retained = row.retained;
      if (!row.retained && !row.filter_stages.empty()) {
        o.eliminated_at = row.filter_stages.back();
      }
      outcomes.push_back(std::move(o));
    }
    write_filter_ledger(outcomes, stage_names,
                        (fs::path(out_dir) / "filter_ledger.csv").string(), prov);
  }
  return 0;
}

int cmd_simulate(const std::string& transition, std::uint64_t seed, const std::string& years,
                 const std::string& months, const std::string& out, const std::string& id) {
  MarkovSpec spec = read_transition_spec(transition, seed);
  const auto [y0, y1] = parse_years(years);
  const SeasonWindow window = SeasonWindow::create(parse_months(months), y0, y1);
  const WtSeries series = simulate(spec, window, id);
  write_wt_series(series, out,
                  {{"transition", transition},
                   {"seed", std::to_string(seed)},
                   {"months", months},
                   {"years", years}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weather-type trajectory evaluation pipeline"};
  app.require_subcommand(1);

  // classify
  auto* classify = app.add_subcommand("classify", "Classify SLP fields into weather types");
  std::string slp_path, classify_out, roi_kind = "iberia", classify_id = "classified";
  ClassifierConfig ccfg;
  classify->add_option("--slp", slp_path, "SLP CSV (date,lon,lat,slp_hpa)")->required();
  classify->add_option("--out", classify_out, "Output WT-series CSV")->required();
  classify->add_option("--roi", roi_kind, "iberia|grid (classification points)");
  classify->add_option("--id", classify_id, "Trajectory id for the output series");
  classify->add_option("--lon-span", ccfg.lon_span, "Stencil longitude span, degrees");
  classify->add_option("--lat-span", ccfg.lat_span, "Stencil latitude row spacing, degrees");
  classify->add_option("--u-flow", ccfg.u_flow, "Weak-flow threshold");
  classify->add_option("--u-vort", ccfg.u_vort, "Weak-vorticity threshold");

  // freq
  auto* freq = app.add_subcommand("freq", "Joint relative frequencies from a WT series");
  CommonFlags freq_flags;
  std::string freq_input;
  freq->add_option("--input", freq_input, "WT-series CSV")->required();
  freq->add_option("--out", freq_flags.out, "Output joint-rf CSV")->required();
  add_window_flags(freq, freq_flags);

  // compare / filter / score / report
  auto* compare = app.add_subcommand("compare", "Similarity fields per candidate");
  CommonFlags compare_flags;
  add_common_flags(compare, compare_flags, false);

  auto* filter = app.add_subcommand("filter", "Sequential threshold filter ledger");
  CommonFlags filter_flags;
  add_common_flags(filter, filter_flags, true);

  auto* score = app.add_subcommand("score", "Regional score ranking table");
  CommonFlags score_flags;
  add_common_flags(score, score_flags, true);

  auto* report = app.add_subcommand("report", "Full pipeline with all artifacts");
  CommonFlags report_flags;
  add_common_flags(report, report_flags, true);

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "Synthetic Markov WT trajectory");
  std::string transition, sim_out, sim_id = "synthetic";
  std::string sim_years = "1979:2005", sim_months = "6,7,8,9";
  std::uint64_t seed = 0;
  simulate_cmd->add_option("--transition", transition, "Transition spec CSV")->required();
  simulate_cmd->add_option("--seed", seed, "RNG seed");
  simulate_cmd->add_option("--years", sim_years, "Year range A:B");
  simulate_cmd->add_option("--months", sim_months, "Season months, comma-separated");
  simulate_cmd->add_option("--out", sim_out, "Output WT-series CSV")->required();
  simulate_cmd->add_option("--id", sim_id, "Trajectory id for the output series");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*classify) return cmd_classify(slp_path, classify_out, ccfg, roi_kind, classify_id);
    if (*freq) return cmd_freq(freq_flags, freq_input);
    if (*compare) return cmd_compare(compare_flags);
    if (*filter) return cmd_filter_or_score(filter_flags, false);
    if (*score) return cmd_filter_or_score(score_flags, true);
    if (*report) {
      run_pipeline(make_run_config(report_flags));
      return 0;
    }
    if (*simulate_cmd) {
      return cmd_simulate(transition, seed, sim_years, sim_months, sim_out, sim_id);
    }
  } catch (const PipelineError& e) {
    std::cerr << "pipeline error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
