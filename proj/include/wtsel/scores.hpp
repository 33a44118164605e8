#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wtsel/selection.hpp"

namespace wtsel {

/// Per-trajectory regional score row (Tables 3/6 layout).
struct ScoreRow {
  std::string trajectory_id;
  double dr = 0;
  double cr_loc = 0;
  double cr_loc_star = 0;
  double cr_reg = 0;
  double cr_reg_star = 0;
  double perr = 0;
  double perr_star = 0;
  double coverage = 1.0;  // fraction of (point, WT) cells defined on both sides
  std::vector<int> filter_counts;
  std::vector<std::string> filter_stages;
  bool retained = false;
};

struct ScoreTable {
  std::vector<ScoreRow> rows;
};

/// Overlap-range bin counts per trajectory and mode.
/// Bins: [0,0.80], (0.80,0.88], (0.88,0.95), [0.95,1].
struct RangeBinRow {
  std::string trajectory_id;
  std::string mode;
  std::array<int, 4> bins{};
  double min_value = 0;
  double max_value = 0;
};

/// Per-point best trajectory and its similarity value.
struct WinnerMap {
  RegionOfInterest roi;
  std::string mode;
  std::vector<std::string> winner;  // empty string = no defined value anywhere
  std::vector<double> value;
};

/// Sum of daily similarity values over the region; undefined points add 0.
double dr(const SimilarityField& daily_field);

/// sum_j sum_s value(s|j) * rf_ref(j; s); undefined cells add 0.
/// wt_subset empty means all 27 types.
double cr_loc(const std::vector<SimilarityField>& conditional_fields,
              const MarginalField& ref_daily, const std::vector<WeatherType>& wt_subset);

/// sum_j [sum_s value(s|j)] * w_j with w_j = median_s rf_ref(j;s), normalized
/// over the WT set; even-count medians take the mean of the central pair.
double cr_reg(const std::vector<SimilarityField>& conditional_fields,
              const MarginalField& ref_daily, const std::vector<WeatherType>& wt_subset);

struct PerrResult {
  double value = 0;
  double coverage = 1.0;  // fraction of (i, s) cells defined in both fields
};

/// sum_i sum_s |per_model(i;s) - per_ref(i;s)|; lower is better.
/// Cells undefined on either side are skipped and reported via coverage.
PerrResult perr(const PersistenceField& ref, const PersistenceField& model,
                const std::vector<WeatherType>& wt_subset);

/// score / N_S.
double normalize_score(double score, std::size_t n_points);

/// Throws when the field has no defined point.
RangeBinRow range_bins(const std::string& trajectory_id, const SimilarityField& field);

/// Per-point argmax; ties broken by lexicographically smaller trajectory id.
WinnerMap winner_map(const std::vector<std::pair<std::string, SimilarityField>>& fields,
                     const std::string& mode);

enum class CorrelationMethod { Pearson, Spearman };

/// Pairwise correlations between the 7 score columns across trajectories.
/// NaN marks rows/columns with a constant score.
struct ScoreCorrelations {
  std::vector<std::string> names;  // 7 score column names
  std::vector<double> matrix;      // row-major 7x7
};
ScoreCorrelations score_correlations(const ScoreTable& table,
                                     CorrelationMethod method = CorrelationMethod::Pearson);

}  // namespace wtsel
