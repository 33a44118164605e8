#pragma once

#include <array>
#include <vector>

#include "wtsel/core.hpp"

namespace wtsel {

using JointMatrix = std::array<double, kNumWeatherTypes * kNumWeatherTypes>;

/// Per-point 27x27 joint relative frequencies of (today, yesterday) pairs.
/// Entry (i, j) = rf(WT_d = i AND WT_{d-1} = j); i is the row (current day).
struct JointFrequencyField {
  RegionOfInterest roi;
  std::vector<JointMatrix> rf_joint;      // one matrix per ROI point
  std::vector<std::int64_t> pair_count;   // valid consecutive-day pairs per point

  static double entry(const JointMatrix& m, int wt_today, int wt_prev) {
    return m[(wt_today - 1) * kNumWeatherTypes + (wt_prev - 1)];
  }
  static double& entry(JointMatrix& m, int wt_today, int wt_prev) {
    return m[(wt_today - 1) * kNumWeatherTypes + (wt_prev - 1)];
  }

  /// Sum-to-1 and count-integrality invariants; throws DomainError.
  void validate() const;
};

enum class MarginalAxis { CurrentDay, PreviousDay };

/// Per-point length-27 daily relative-frequency vectors.
struct MarginalField {
  RegionOfInterest roi;
  std::vector<std::array<double, kNumWeatherTypes>> rf_daily;
  MarginalAxis axis_tag = MarginalAxis::CurrentDay;
};

/// Per-point conditional distribution rf(i | j; s) for a fixed conditioning j.
struct ConditionalField {
  RegionOfInterest roi;
  WeatherType conditioning_wt;
  std::vector<std::array<double, kNumWeatherTypes>> rf_cond;
  std::vector<std::int64_t> support;  // days with WT_{d-1} = j
  std::vector<bool> defined;          // support >= min_support
};

/// Per-point transition-diagonal vector rf(i | i; s).
struct PersistenceField {
  RegionOfInterest roi;
  std::vector<std::array<double, kNumWeatherTypes>> per_rf;
  std::vector<std::array<bool, kNumWeatherTypes>> defined;
};

/// Counts consecutive-day pairs within the window (a pair is valid iff both
/// days are in-window AND exactly one calendar day apart, so season gaps and
/// year boundaries contribute no pairs). Throws on zero pairs.
JointFrequencyField build_joint(const WtSeries& series, const SeasonWindow& window,
                                const RegionOfInterest& roi);

/// Row sums: rf(i) = sum_j rf_joint(i, j).
MarginalField marginal_current(const JointFrequencyField& joint);
/// Column sums: rf_prev(j) = sum_i rf_joint(i, j).
MarginalField marginal_previous(const JointFrequencyField& joint);

/// rf_cond(i) = rf_joint(i, j) / rf_prev(j) where support(j) >= min_support;
/// undefined otherwise (a state, not an error).
ConditionalField conditional(const JointFrequencyField& joint, WeatherType j,
                             int min_support);

/// per_rf(i) = rf_joint(i, i) / rf_prev(i) where support >= min_support.
PersistenceField persistence(const JointFrequencyField& joint, int min_support);

}  // namespace wtsel
