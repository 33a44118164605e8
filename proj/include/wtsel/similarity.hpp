#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wtsel/frequencies.hpp"

namespace wtsel {

/// Length-27 (or restricted) categorical probability vector.
struct CategoricalDistribution {
  std::vector<double> probs;
  bool normalized = true;  // subset-restricted vectors carry false
};

enum class Metric { Overlap, Dissimilarity, Bhattacharyya, Hellinger };

Metric metric_from_name(const std::string& name);
std::string metric_name(Metric m);

/// Whether larger values mean more similar (Overlap, Bhattacharyya).
bool metric_is_similarity(Metric m);

/// Strategy for restricting the compared category set, chosen from the
/// reference distribution at each grid point.
struct SubsetStrategy {
  enum class Kind { All, TopK, CumulativeMass, MinRf };
  Kind kind = Kind::All;
  int k = kNumWeatherTypes;   // TopK
  double fraction = 1.0;      // CumulativeMass, (0,1]
  double threshold = 0.0;     // MinRf, [0,1)

  static SubsetStrategy all();
  static SubsetStrategy top_k(int k);
  static SubsetStrategy cumulative_mass(double fraction);
  static SubsetStrategy min_rf(double threshold);
  /// Parses "all", "top9", "top12", "cum70", "cum90", "minrf:0.05".
  static SubsetStrategy parse(const std::string& text);

  std::string name() const;
};

/// Daily marginals or conditionals on a fixed previous-day WT.
struct SimilarityMode {
  bool conditional = false;
  WeatherType wt{1};  // conditioning WT when conditional

  static SimilarityMode daily() { return {}; }
  static SimilarityMode cond(WeatherType j) { return {true, j}; }

  std::string name() const;
};

/// Per-point metric values comparing reference vs. candidate distributions.
struct SimilarityField {
  RegionOfInterest roi;
  Metric metric = Metric::Overlap;
  SimilarityMode mode;
  SubsetStrategy strategy;
  std::vector<double> values;  // per point
  std::vector<bool> defined;
};

double overlap(std::span<const double> p1, std::span<const double> p2);
double dissimilarity(std::span<const double> p1, std::span<const double> p2);
double bhattacharyya(std::span<const double> p1, std::span<const double> p2);
double hellinger(std::span<const double> p1, std::span<const double> p2);

double evaluate_metric(Metric m, std::span<const double> p1, std::span<const double> p2);

/// Restricts both vectors to the category set chosen from p_ref only;
/// no renormalization. Returns the selected 0-based index set too.
struct SubsetResult {
  CategoricalDistribution ref;
  CategoricalDistribution model;
  std::vector<int> selected;  // 0-based category indices, ascending
};
SubsetResult apply_subset(const CategoricalDistribution& p_ref,
                          const CategoricalDistribution& p_model,
                          const SubsetStrategy& strategy);

/// Per-point daily-marginal comparison.
SimilarityField similarity_field(const MarginalField& ref, const MarginalField& model,
                                 Metric metric, const SubsetStrategy& strategy);
/// Per-point conditional comparison; undefined where either side is undefined.
SimilarityField similarity_field(const ConditionalField& ref, const ConditionalField& model,
                                 Metric metric, const SubsetStrategy& strategy);

/// Standardized summed deviation of an option from its reference:
/// sum_s (y(s) - x(s)) / sd(x), sample standard deviation (n-1).
double d_opt(std::span<const double> option_values, std::span<const double> reference_values);

}  // namespace wtsel
