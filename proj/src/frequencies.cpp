#include "wtsel/frequencies.hpp"

#include <cmath>
#include <string>

namespace wtsel {

void JointFrequencyField::validate() const {
  if (rf_joint.size() != roi.size() || pair_count.size() != roi.size()) {
    throw DomainError("joint field size mismatch with region");
  }
  for (std::size_t pi = 0; pi < roi.size(); ++pi) {
    double sum = 0;
    for (double v : rf_joint[pi]) {
      if (v < 0) throw DomainError("negative joint rf entry");
      sum += v;
      const double n = v * static_cast<double>(pair_count[pi]);
      if (std::abs(n - std::round(n)) > 1e-6) {
        throw DomainError("joint rf entry not count-integral");
      }
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw DomainError("joint rf does not sum to 1 at point " + std::to_string(pi) +
                        " (sum = " + std::to_string(sum) + ")");
    }
  }
}

JointFrequencyField build_joint(const WtSeries& series, const SeasonWindow& window,
                                const RegionOfInterest& roi) {
  const WtSeries masked = season_mask(series, window);

  // Map ROI points onto series columns.
  std::vector<int> col(roi.size(), -1);
  for (std::size_t pi = 0; pi < roi.size(); ++pi) {
    int c = -1;
    for (std::size_t sc = 0; sc < masked.points.size(); ++sc) {
      if (std::abs(masked.points[sc].lon - roi.points[pi].lon) <= 1e-6 &&
          std::abs(masked.points[sc].lat - roi.points[pi].lat) <= 1e-6) {
        c = static_cast<int>(sc);
        break;
      }
    }
    if (c < 0) {
      throw DomainError("series does not cover region point (" +
                        std::to_string(roi.points[pi].lon) + ", " +
                        std::to_string(roi.points[pi].lat) + ")");
    }
    col[pi] = c;
  }

  JointFrequencyField out;
  out.roi = roi;
  out.rf_joint.assign(roi.size(), JointMatrix{});
  out.pair_count.assign(roi.size(), 0);

  std::vector<std::array<std::int64_t, kNumWeatherTypes * kNumWeatherTypes>> counts(
      roi.size());
  for (auto& c : counts) c.fill(0);

  for (std::size_t di = 1; di < masked.dates.size(); ++di) {
    if (masked.dates[di].serial() - masked.dates[di - 1].serial() != 1) continue;
    for (std::size_t pi = 0; pi < roi.size(); ++pi) {
      const int today = masked.at(di, col[pi]);
      const int prev = masked.at(di - 1, col[pi]);
      counts[pi][(today - 1) * kNumWeatherTypes + (prev - 1)] += 1;
      out.pair_count[pi] += 1;
    }
  }

  for (std::size_t pi = 0; pi < roi.size(); ++pi) {
    if (out.pair_count[pi] == 0) {
      throw DomainError("no consecutive-day pairs at point (" +
                        std::to_string(roi.points[pi].lon) + ", " +
                        std::to_string(roi.points[pi].lat) + ")");
    }
    const double denom = static_cast<double>(out.pair_count[pi]);
    for (std::size_t k = 0; k < counts[pi].size(); ++k) {
      out.rf_joint[pi][k] = static_cast<double>(counts[pi][k]) / denom;
    }
  }
  return out;
}

namespace {

MarginalField marginal(const JointFrequencyField& joint, MarginalAxis axis) {
  MarginalField out;
  out.roi = joint.roi;
  out.axis_tag = axis;
  out.rf_daily.assign(joint.roi.size(), {});
  for (std::size_t pi = 0; pi < joint.roi.size(); ++pi) {
    for (int i = 1; i <= kNumWeatherTypes; ++i) {
      double sum = 0;
      for (int j = 1; j <= kNumWeatherTypes; ++j) {
        sum += axis == MarginalAxis::CurrentDay
                   ? JointFrequencyField::entry(joint.rf_joint[pi], i, j)
                   : JointFrequencyField::entry(joint.rf_joint[pi], j, i);
      }
      out.rf_daily[pi][i - 1] = sum;
    }
  }
  return out;
}

}  // namespace

MarginalField marginal_current(const JointFrequencyField& joint) {
  return marginal(joint, MarginalAxis::CurrentDay);
}

MarginalField marginal_previous(const JointFrequencyField& joint) {
  return marginal(joint, MarginalAxis::PreviousDay);
}

ConditionalField conditional(const JointFrequencyField& joint, WeatherType j,
                             int min_support) {
  const MarginalField prev = marginal_previous(joint);
  ConditionalField out;
  out.roi = joint.roi;
  out.conditioning_wt = j;
  out.rf_cond.assign(joint.roi.size(), {});
  out.support.assign(joint.roi.size(), 0);
  out.defined.assign(joint.roi.size(), false);
  for (std::size_t pi = 0; pi < joint.roi.size(); ++pi) {
    const double rf_prev = prev.rf_daily[pi][j.index - 1];
    const auto support = static_cast<std::int64_t>(
        std::llround(rf_prev * static_cast<double>(joint.pair_count[pi])));
    out.support[pi] = support;
    if (support < min_support || rf_prev <= 0) continue;
    out.defined[pi] = true;
    for (int i = 1; i <= kNumWeatherTypes; ++i) {
      out.rf_cond[pi][i - 1] =
          JointFrequencyField::entry(joint.rf_joint[pi], i, j.index) / rf_prev;
    }
  }
  return out;
}

PersistenceField persistence(const JointFrequencyField& joint, int min_support) {
  const MarginalField prev = marginal_previous(joint);
  PersistenceField out;
  out.roi = joint.roi;
  out.per_rf.assign(joint.roi.size(), {});
  out.defined.assign(joint.roi.size(), {});
  for (std::size_t pi = 0; pi < joint.roi.size(); ++pi) {
    for (int i = 1; i <= kNumWeatherTypes; ++i) {
      const double rf_prev = prev.rf_daily[pi][i - 1];
      const auto support = static_cast<std::int64_t>(
          std::llround(rf_prev * static_cast<double>(joint.pair_count[pi])));
      if (support < min_support || rf_prev <= 0) continue;
      out.defined[pi][i - 1] = true;
      out.per_rf[pi][i - 1] =
          JointFrequencyField::entry(joint.rf_joint[pi], i, i) / rf_prev;
    }
  }
  return out;
}

}  // namespace wtsel
