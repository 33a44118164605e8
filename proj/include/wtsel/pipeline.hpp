#pragma once

#include <string>
#include <vector>

#include "wtsel/io.hpp"

namespace wtsel {

/// A stage failed after inputs validated (exit code 2 at the CLI).
class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fully resolved run parameters; echoed into every artifact header.
struct RunConfig {
  std::string ref_path;
  std::vector<std::string> model_paths;
  std::string out_dir;

  SeasonWindow window;
  double t_sim = 0.8;
  int stage_limit = 0;  // 0 = ceil(N_S / 3) once the region size is known
  std::vector<WeatherType> conditioning_set = {
      WeatherType{1}, WeatherType{18}, WeatherType{10}, WeatherType{27}};  // PA, PC, PDNE, U
  Metric metric = Metric::Overlap;
  SubsetStrategy strategy;
  std::vector<WeatherType> wt_star = {
      WeatherType{1}, WeatherType{10}, WeatherType{18}, WeatherType{27}};  // PA, PDNE, PC, U
  int min_support = 30;
  CorrelationMethod corr_method = CorrelationMethod::Pearson;
  std::vector<LonLat> key_points;  // empty = default_key_points() where they lie in the ROI

  Provenance provenance() const;
};

/// One trajectory's frequency views: joint + daily marginal + per-WT
/// conditionals + persistence.
struct TrajectoryFrequencies {
  std::string trajectory_id;
  JointFrequencyField joint;
  MarginalField daily;
  std::vector<ConditionalField> conditionals;  // indexed by WT index - 1, all 27
  PersistenceField persist;
};

/// Loads a trajectory from either a WT-series CSV (`date,lon,lat,wt`) or a
/// joint-rf CSV (`lon,lat,wt_today,wt_prev,rf,count`); sniffed by header.
JointFrequencyField load_joint(const std::string& path, const SeasonWindow& window,
                               std::string* trajectory_id_out);

TrajectoryFrequencies derive_frequencies(std::string trajectory_id, JointFrequencyField joint,
                                         int min_support);

/// Daily + full conditional similarity bundle of one candidate vs. reference.
struct ComparisonBundle {
  std::string trajectory_id;
  SimilarityField daily;
  std::vector<SimilarityField> conditionals;  // all 27, index by WT index - 1
};

ComparisonBundle compare_trajectory(const TrajectoryFrequencies& ref,
                                    const TrajectoryFrequencies& model, Metric metric,
                                    const SubsetStrategy& strategy);

/// Full pipeline: frequencies -> similarity -> filter -> scores -> artifacts.
/// Returns the ranking table; writes the report bundle into config.out_dir.
ScoreTable run_pipeline(const RunConfig& config);

}  // namespace wtsel
