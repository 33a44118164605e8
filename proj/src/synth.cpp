#include "wtsel/synth.hpp"

#include <cmath>
#include <random>
#include <span>

namespace wtsel {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0,1) built from the top 53 bits; bit-portable across platforms.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int draw_categorical(std::span<const double> probs, std::mt19937_64& rng) {
  const double u = uniform01(rng);
  double cum = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    cum += probs[i];
    if (u < cum) return static_cast<int>(i) + 1;
  }
  return static_cast<int>(probs.size());  // u landed in rounding slack
}

void check_row(std::span<const double> row, const char* what) {
  double sum = 0;
  for (double v : row) {
    if (v < 0) throw DomainError(std::string(what) + " has a negative entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError(std::string(what) + " does not sum to 1 (sum = " + std::to_string(sum) + ")");
  }
}

}  // namespace

void MarkovSpec::validate() const {
  if (transition.size() != roi.size() || initial.size() != roi.size()) {
    throw DomainError("markov spec size mismatch with region");
  }
  for (std::size_t pi = 0; pi < roi.size(); ++pi) {
    for (int j = 1; j <= kNumWeatherTypes; ++j) {
      check_row(std::span<const double>(&transition[pi][(j - 1) * kNumWeatherTypes],
                                        kNumWeatherTypes),
                "transition row");
    }
    check_row(initial[pi], "initial distribution");
  }
}

MarkovSpec MarkovSpec::homogeneous(const RegionOfInterest& roi, const JointMatrix& transition,
                                   const std::array<double, kNumWeatherTypes>& initial,
                                   std::uint64_t seed) {
  MarkovSpec spec;
  spec.roi = roi;
  spec.transition.assign(roi.size(), transition);
  spec.initial.assign(roi.size(), initial);
  spec.seed = seed;
  spec.validate();
  return spec;
}

WtSeries simulate(const MarkovSpec& spec, const SeasonWindow& window,
                  const std::string& trajectory_id) {
  spec.validate();

  // In-window dates of the whole year range, ascending.
  std::vector<Date> dates;
  for (int y = window.first_year; y <= window.last_year; ++y) {
    for (int m = 1; m <= 12; ++m) {
      if (window.months.count(m) == 0) continue;
      for (int d = 1; d <= 31; ++d) {
        if (Date::valid(y, m, d)) dates.push_back(Date{y, m, d});
      }
    }
  }
  if (dates.empty()) throw DomainError("season window selects no days");

  WtSeries out;
  out.trajectory_id = trajectory_id;
  out.points = spec.roi.points;
  out.dates = dates;
  out.values.assign(dates.size() * spec.roi.size(), 0);

  for (std::size_t pi = 0; pi < spec.roi.size(); ++pi) {
    std::mt19937_64 rng(splitmix64(spec.seed ^ static_cast<std::uint64_t>(pi)));
    int prev = 0;  // 0 = block start
    for (std::size_t di = 0; di < dates.size(); ++di) {
      const bool block_start =
          di == 0 || dates[di].serial() - dates[di - 1].serial() != 1;
      int wt;
      if (block_start) {
        wt = draw_categorical(spec.initial[pi], rng);
      } else {
        wt = draw_categorical(
            std::span<const double>(&spec.transition[pi][(prev - 1) * kNumWeatherTypes],
                                    kNumWeatherTypes),
            rng);
      }
      out.at(di, pi) = static_cast<std::uint8_t>(wt);
      prev = wt;
    }
  }
  return out;
}

MarkovSpec perturb(const MarkovSpec& spec, double delta, PerturbKind kind,
                   std::uint64_t seed) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError("perturbation delta outside [0,1]");
  MarkovSpec out = spec;
  if (delta == 0.0) return out;
  for (std::size_t pi = 0; pi < spec.roi.size(); ++pi) {
    std::mt19937_64 rng(splitmix64(seed ^ (0xa5a5a5a5ULL + pi)));
    for (int j = 1; j <= kNumWeatherTypes; ++j) {
      double* row = &out.transition[pi][(j - 1) * kNumWeatherTypes];
      if (kind == PerturbKind::PersistenceInflation) {
        for (int i = 1; i <= kNumWeatherTypes; ++i) {
          row[i - 1] = (1.0 - delta) * row[i - 1] + (i == j ? delta : 0.0);
        }
      } else {
        std::array<double, kNumWeatherTypes> noise{};
        double sum = 0;
        for (double& v : noise) {
          v = -std::log(1.0 - uniform01(rng));  // exponential draws, normalized below
          sum += v;
        }
        for (int i = 0; i < kNumWeatherTypes; ++i) {
          row[i] = (1.0 - delta) * row[i] + delta * noise[i] / sum;
        }
      }
      // Renormalize away accumulated rounding so rows stay stochastic at 1e-12.
      double sum = 0;
      for (int i = 0; i < kNumWeatherTypes; ++i) sum += row[i];
      for (int i = 0; i < kNumWeatherTypes; ++i) row[i] /= sum;
    }
  }
  out.validate();
  return out;
}

}  // namespace wtsel
