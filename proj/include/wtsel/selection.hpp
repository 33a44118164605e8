#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wtsel/similarity.hpp"

namespace wtsel {

/// Thresholds and stage list for the sequential trajectory filter.
struct FilterConfig {
  double t_sim = 0.8;                 // similarity threshold, (0,1)
  int stage_limit = 10;               // eliminate when count(value <= t_sim) >= limit
  std::vector<WeatherType> conditioning_set = {
      WeatherType{1}, WeatherType{18}, WeatherType{10}, WeatherType{27}};  // PA, PC, PDNE, U

  /// Default limit is ceil(N_S / 3).
  static int default_limit(std::size_t n_points);
  void validate(std::size_t n_points) const;
};

/// Per-trajectory filter record: stage counts and retention.
struct FilterOutcome {
  std::string trajectory_id;
  // One entry per evaluated stage, in order: Daily, then each conditioning WT.
  std::vector<std::string> stage_names;
  std::vector<int> counts;
  bool retained = false;
  std::optional<std::string> eliminated_at;
};

/// Number of points with value <= t_sim; undefined points count as below.
int count_below(const SimilarityField& field, double t_sim);

/// Evaluates Daily first, then each conditioning WT in configured order;
/// stops at the first stage whose count reaches the limit.
FilterOutcome filter_trajectory(const std::string& trajectory_id,
                                const SimilarityField& daily,
                                const std::vector<SimilarityField>& conditionals,
                                const FilterConfig& config);

/// Daily + conditional similarity fields for one candidate trajectory.
struct TrajectoryFields {
  std::string trajectory_id;
  SimilarityField daily;
  std::vector<SimilarityField> conditionals;  // ordered per FilterConfig
};

/// filter_trajectory over the whole ensemble, input order preserved.
std::vector<FilterOutcome> sequential_filter(const std::vector<TrajectoryFields>& ensemble,
                                             const FilterConfig& config);

}  // namespace wtsel
