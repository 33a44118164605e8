#pragma once

#include <cstdint>
#include <vector>

#include "wtsel/frequencies.hpp"

namespace wtsel {

/// Spatially varying first-order Markov chain over the 27 weather types.
/// transition[point] is row-stochastic: entry (j, i) = P(today = i | yesterday = j).
struct MarkovSpec {
  RegionOfInterest roi;
  std::vector<JointMatrix> transition;                          // 27x27 per point
  std::vector<std::array<double, kNumWeatherTypes>> initial;    // per point
  std::uint64_t seed = 0;

  static double trans(const JointMatrix& m, int wt_prev, int wt_today) {
    return m[(wt_prev - 1) * kNumWeatherTypes + (wt_today - 1)];
  }
  static double& trans(JointMatrix& m, int wt_prev, int wt_today) {
    return m[(wt_prev - 1) * kNumWeatherTypes + (wt_today - 1)];
  }

  /// Row-stochasticity within 1e-12; throws DomainError.
  void validate() const;

  /// Same transition matrix and initial distribution at every point.
  static MarkovSpec homogeneous(const RegionOfInterest& roi, const JointMatrix& transition,
                                const std::array<double, kNumWeatherTypes>& initial,
                                std::uint64_t seed);
};

enum class PerturbKind { PersistenceInflation, RowJitter };

/// Per point and per season-year block: day 1 from the initial distribution,
/// later days from the transition row of the previous day. Deterministic in
/// (spec, window): per-point streams are mt19937_64 seeded by
/// splitmix64(seed ^ point_index), draws by inverse CDF.
WtSeries simulate(const MarkovSpec& spec, const SeasonWindow& window,
                  const std::string& trajectory_id);

/// PersistenceInflation: row' = (1-delta)*row + delta*one_hot(j).
/// RowJitter: row' = (1-delta)*row + delta*random distribution.
MarkovSpec perturb(const MarkovSpec& spec, double delta, PerturbKind kind,
                   std::uint64_t seed);

}  // namespace wtsel
