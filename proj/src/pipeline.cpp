#include "wtsel/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace wtsel {

namespace {

std::string wt_list(const std::vector<WeatherType>& wts) {
  std::string s;
  for (const auto& wt : wts) s += (s.empty() ? "" : ",") + std::string(wt.code());
  return s;
}

std::string month_list(const std::set<int>& months) {
  std::string s;
  for (int m : months) s += (s.empty() ? "" : ",") + std::to_string(m);
  return s;
}

}  // namespace

Provenance RunConfig::provenance() const {
  Provenance p;
  p.emplace_back("ref", ref_path);
  p.emplace_back("months", month_list(window.months));
  p.emplace_back("years", std::to_string(window.first_year) + ":" + std::to_string(window.last_year));
  p.emplace_back("tsim", csvio::fmt(t_sim, 6));
  p.emplace_back("limit", stage_limit == 0 ? "auto" : std::to_string(stage_limit));
  p.emplace_back("condition", wt_list(conditioning_set));
  p.emplace_back("metric", metric_name(metric));
  p.emplace_back("subset", strategy.name());
  p.emplace_back("wt_star", wt_list(wt_star));
  p.emplace_back("min_support", std::to_string(min_support));
  p.emplace_back("corr_method", corr_method == CorrelationMethod::Pearson ? "pearson" : "spearman");
  return p;
}

JointFrequencyField load_joint(const std::string& path, const SeasonWindow& window,
                               std::string* trajectory_id_out) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  std::string line;
  while (std::getline(in, line) && (line.empty() || line[0] == '#')) {
  }
  in.close();

  std::string id = std::filesystem::path(path).stem().string();
  JointFrequencyField joint;
  if (line.rfind("date,lon,lat,wt", 0) == 0) {
    WtSeries series = read_wt_series(path);
    if (series.trajectory_id != path) id = series.trajectory_id;
    joint = build_joint(series, window, RegionOfInterest::from_points(series.points));
  } else if (line.rfind("lon,lat,wt_today,wt_prev,rf,count", 0) == 0) {
    joint = read_joint_rf(path);
  } else {
    throw DomainError(path + ": unrecognized header '" + line + "'");
  }
  if (trajectory_id_out) *trajectory_id_out = id;
  return joint;
}

TrajectoryFrequencies derive_frequencies(std::string trajectory_id, JointFrequencyField joint,
                                         int min_support) {
  TrajectoryFrequencies out;
  out.trajectory_id = std::move(trajectory_id);
  out.daily = marginal_current(joint);
  out.conditionals.reserve(kNumWeatherTypes);
  for (const WeatherType wt : all_weather_types()) {
    out.conditionals.push_back(conditional(joint, wt, min_support));
  }
  out.persist = persistence(joint, min_support);
  out.joint = std::move(joint);
  return out;
}

ComparisonBundle compare_trajectory(const TrajectoryFrequencies& ref,
                                    const TrajectoryFrequencies& model, Metric metric,
                                    const SubsetStrategy& strategy) {
  ComparisonBundle out;
  out.trajectory_id = model.trajectory_id;
  out.daily = similarity_field(ref.daily, model.daily, metric, strategy);
  out.conditionals.reserve(kNumWeatherTypes);
  for (int i = 0; i < kNumWeatherTypes; ++i) {
    out.conditionals.push_back(
        similarity_field(ref.conditionals[i], model.conditionals[i], metric, strategy));
  }
  return out;
}

ScoreTable run_pipeline(const RunConfig& config) {
  if (config.model_paths.empty()) throw DomainError("no trajectories found");

  // Frequencies.
  std::string ref_id;
  TrajectoryFrequencies ref = derive_frequencies(
      "reference", load_joint(config.ref_path, config.window, &ref_id), config.min_support);
  std::vector<TrajectoryFrequencies> models;
  models.reserve(config.model_paths.size());
  for (const auto& path : config.model_paths) {
    std::string id;
    JointFrequencyField joint = load_joint(path, config.window, &id);
    models.push_back(derive_frequencies(id, std::move(joint), config.min_support));
  }

  const std::size_t n_points = ref.joint.roi.size();
  FilterConfig filter_cfg;
  filter_cfg.t_sim = config.t_sim;
  filter_cfg.stage_limit =
      config.stage_limit > 0 ? config.stage_limit : FilterConfig::default_limit(n_points);
  filter_cfg.conditioning_set = config.conditioning_set;
  filter_cfg.validate(n_points);

  std::vector<std::string> stage_names = {"daily"};
  for (const auto& wt : config.conditioning_set) stage_names.emplace_back(wt.code());

  // Similarity.
  std::vector<ComparisonBundle> bundles;
  bundles.reserve(models.size());
  for (const auto& m : models) {
    try {
      bundles.push_back(compare_trajectory(ref, m, config.metric, config.strategy));
    } catch (const DomainError& e) {
      throw PipelineError("similarity stage, trajectory " + m.trajectory_id + ": " + e.what());
    }
  }

  // Filter.
  std::vector<TrajectoryFields> filter_input;
  for (const auto& b : bundles) {
    filter_input.push_back({b.trajectory_id, b.daily, b.conditionals});
  }
  const std::vector<FilterOutcome> outcomes = sequential_filter(filter_input, filter_cfg);

  // Scores.
  ScoreTable table;
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    const auto& b = bundles[mi];
    ScoreRow row;
    row.trajectory_id = b.trajectory_id;
    row.dr = dr(b.daily);
    row.cr_loc = cr_loc(b.conditionals, ref.daily, all_weather_types());
    row.cr_loc_star = cr_loc(b.conditionals, ref.daily, config.wt_star);
    row.cr_reg = cr_reg(b.conditionals, ref.daily, all_weather_types());
    row.cr_reg_star = cr_reg(b.conditionals, ref.daily, config.wt_star);
    const PerrResult pr = perr(ref.persist, models[mi].persist, all_weather_types());
    const PerrResult prs = perr(ref.persist, models[mi].persist, config.wt_star);
    row.perr = pr.value;
    row.perr_star = prs.value;
    row.coverage = pr.coverage;
    row.filter_stages = outcomes[mi].stage_names;
    row.filter_counts = outcomes[mi].counts;
    row.retained = outcomes[mi].retained;
    table.rows.push_back(std::move(row));
  }

  // Artifacts.
  if (!config.out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(config.out_dir);
    const Provenance prov = config.provenance();
    auto path = [&](const std::string& name) { return (fs::path(config.out_dir) / name).string(); };

    write_score_table(table, stage_names, path("ranking.csv"), prov);
    write_filter_ledger(outcomes, stage_names, path("filter_ledger.csv"), prov);

    // Range bins: daily + each conditioning WT per trajectory.
    std::vector<RangeBinRow> bins;
    for (const auto& b : bundles) {
      bins.push_back(range_bins(b.trajectory_id, b.daily));
      for (const auto& wt : config.conditioning_set) {
        try {
          bins.push_back(range_bins(b.trajectory_id, b.conditionals[wt.index - 1]));
        } catch (const DomainError&) {
          // no defined points under this conditioning WT; nothing to bin
        }
      }
    }
    write_range_bins(bins, path("range_bins.csv"), prov);

    // Winner maps, CSV + SVG per mode.
    auto winner_mode = [&](const std::string& mode_name, auto field_of) {
      std::vector<std::pair<std::string, SimilarityField>> fields;
      for (const auto& b : bundles) fields.emplace_back(b.trajectory_id, field_of(b));
      const WinnerMap wm = winner_map(fields, mode_name);
      write_winner_map(wm, path("winner_" + mode_name + ".csv"), prov);
      emit_heatmap(wm, path("winner_" + mode_name + ".svg"));
    };
    winner_mode("daily", [](const ComparisonBundle& b) { return b.daily; });
    for (const auto& wt : config.conditioning_set) {
      winner_mode(std::string(wt.code()),
                  [&](const ComparisonBundle& b) { return b.conditionals[wt.index - 1]; });
    }

    // Key-point profiles over the 5 report modes.
    std::vector<LonLat> key_points = config.key_points;
    if (key_points.empty()) {
      for (const auto& p : default_key_points()) {
        if (ref.joint.roi.index_of(p) >= 0) key_points.push_back(p);
      }
    }
    if (!key_points.empty()) {
      std::vector<std::pair<std::string, std::vector<SimilarityField>>> profile_fields;
      for (const auto& b : bundles) {
        std::vector<SimilarityField> fields = {b.daily};
        for (const auto& wt : config.conditioning_set) {
          fields.push_back(b.conditionals[wt.index - 1]);
        }
        profile_fields.emplace_back(b.trajectory_id, std::move(fields));
      }
      write_key_point_profile(key_point_profile(profile_fields, key_points),
                              path("key_points.csv"), prov);
    }

    // Subset-strategy deviation tables, one per trajectory.
    const std::vector<SubsetStrategy> options = {
        SubsetStrategy::top_k(12), SubsetStrategy::top_k(9), SubsetStrategy::cumulative_mass(0.9),
        SubsetStrategy::cumulative_mass(0.7), SubsetStrategy::min_rf(0.05)};
    for (std::size_t mi = 0; mi < models.size(); ++mi) {
      std::vector<DOptRow> rows;
      auto add_mode = [&](const std::string& mode_name, auto make_field) {
        SimilarityField base;
        try {
          base = make_field(SubsetStrategy::all());
        } catch (const DomainError&) {
          return;
        }
        std::vector<double> ref_vals;
        for (std::size_t pi = 0; pi < base.roi.size(); ++pi) {
          if (base.defined[pi]) ref_vals.push_back(base.values[pi]);
        }
        for (const auto& opt : options) {
          try {
            const SimilarityField f = make_field(opt);
            std::vector<double> opt_vals;
            for (std::size_t pi = 0; pi < f.roi.size(); ++pi) {
              if (f.defined[pi]) opt_vals.push_back(f.values[pi]);
            }
            rows.push_back({opt.name(), mode_name, metric_name(config.metric),
                            d_opt(opt_vals, ref_vals)});
          } catch (const DomainError&) {
            // degenerate point set for this option; row omitted
          }
        }
      };
      add_mode("daily", [&](const SubsetStrategy& s) {
        return similarity_field(ref.daily, models[mi].daily, config.metric, s);
      });
      for (const auto& wt : config.conditioning_set) {
        add_mode(std::string("cond:") + std::string(wt.code()), [&](const SubsetStrategy& s) {
          return similarity_field(ref.conditionals[wt.index - 1],
                                  models[mi].conditionals[wt.index - 1], config.metric, s);
        });
      }
      write_d_opt_table(rows, path("d_opt_" + models[mi].trajectory_id + ".csv"), prov);
    }

    // Score correlations need >= 3 trajectories.
    if (table.rows.size() >= 3) {
      write_correlations(score_correlations(table, config.corr_method),
                         path("correlations.csv"), prov);
    }
  }

  return table;
}

}  // namespace wtsel
