#pragma once

#include <functional>
#include <random>
#include <vector>

#include "wtsel/core.hpp"

namespace wtsel::testutil {

/// n consecutive calendar days starting at `start`.
inline std::vector<Date> consecutive_days(const Date& start, int n) {
  std::vector<Date> dates;
  dates.reserve(n);
  for (int i = 0; i < n; ++i) dates.push_back(Date::from_serial(start.serial() + i));
  return dates;
}

/// Every calendar day of [first_year, last_year].
inline std::vector<Date> full_years(int first_year, int last_year) {
  const Date a{first_year, 1, 1};
  const Date b{last_year, 12, 31};
  std::vector<Date> dates;
  for (std::int64_t s = a.serial(); s <= b.serial(); ++s) dates.push_back(Date::from_serial(s));
  return dates;
}

/// Single-point series from explicit WT values on consecutive days.
inline WtSeries single_point_series(const std::vector<int>& wts,
                                    const Date& start = {2000, 7, 1},
                                    const LonLat& point = {0.0, 40.0}) {
  WtSeries s;
  s.trajectory_id = "test";
  s.points = {point};
  s.dates = consecutive_days(start, static_cast<int>(wts.size()));
  for (int wt : wts) s.values.push_back(static_cast<std::uint8_t>(wt));
  return s;
}

/// Random normalized length-n distribution.
inline std::vector<double> random_distribution(std::mt19937_64& rng, int n = 27) {
  std::exponential_distribution<double> exp(1.0);
  std::vector<double> p(n);
  double total = 0;
  for (auto& v : p) {
    v = exp(rng);
    total += v;
  }
  for (auto& v : p) v /= total;
  return p;
}

}  // namespace wtsel::testutil
