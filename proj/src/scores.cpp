#include "wtsel/scores.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wtsel {

namespace {

const std::vector<WeatherType>& resolve_subset(const std::vector<WeatherType>& wt_subset) {
  if (wt_subset.empty()) throw DomainError("empty weather-type subset");
  return wt_subset;
}

const SimilarityField& field_for(const std::vector<SimilarityField>& fields, WeatherType j) {
  for (const auto& f : fields) {
    if (f.mode.conditional && f.mode.wt.index == j.index) return f;
  }
  throw DomainError("missing conditional similarity field for " + std::string(j.code()));
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double dr(const SimilarityField& field) {
  double sum = 0;
  for (std::size_t pi = 0; pi < field.roi.size(); ++pi) {
    if (field.defined[pi]) sum += field.values[pi];
  }
  return sum;
}

double cr_loc(const std::vector<SimilarityField>& conditional_fields,
              const MarginalField& ref_daily, const std::vector<WeatherType>& wt_subset) {
  const auto& subset = resolve_subset(wt_subset);
  double sum = 0;
  for (const WeatherType j : subset) {
    const SimilarityField& f = field_for(conditional_fields, j);
    for (std::size_t pi = 0; pi < f.roi.size(); ++pi) {
      if (!f.defined[pi]) continue;
      sum += f.values[pi] * ref_daily.rf_daily[pi][j.index - 1];
    }
  }
  return sum;
}

double cr_reg(const std::vector<SimilarityField>& conditional_fields,
              const MarginalField& ref_daily, const std::vector<WeatherType>& wt_subset) {
  const auto& subset = resolve_subset(wt_subset);
  double weight_total = 0;
  std::vector<double> weights;
  std::vector<double> cr_by_wt;
  for (const WeatherType j : subset) {
    const SimilarityField& f = field_for(conditional_fields, j);
    double cr = 0;
    for (std::size_t pi = 0; pi < f.roi.size(); ++pi) {
      if (f.defined[pi]) cr += f.values[pi];
    }
    std::vector<double> rfs;
    rfs.reserve(ref_daily.roi.size());
    for (std::size_t pi = 0; pi < ref_daily.roi.size(); ++pi) {
      rfs.push_back(ref_daily.rf_daily[pi][j.index - 1]);
    }
    const double w = median(std::move(rfs));
    weights.push_back(w);
    cr_by_wt.push_back(cr);
    weight_total += w;
  }
  if (weight_total <= 0) throw DomainError("cr_reg weight mass is zero");
  double sum = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    sum += cr_by_wt[k] * (weights[k] / weight_total);
  }
  return sum;
}

PerrResult perr(const PersistenceField& ref, const PersistenceField& model,
                const std::vector<WeatherType>& wt_subset) {
  const auto& subset = resolve_subset(wt_subset);
  if (ref.roi.size() != model.roi.size()) throw DomainError("perr region mismatch");
  PerrResult out;
  std::size_t total = 0, covered = 0;
  for (const WeatherType i : subset) {
    for (std::size_t pi = 0; pi < ref.roi.size(); ++pi) {
      ++total;
      if (!ref.defined[pi][i.index - 1] || !model.defined[pi][i.index - 1]) continue;
      ++covered;
      out.value += std::abs(model.per_rf[pi][i.index - 1] - ref.per_rf[pi][i.index - 1]);
    }
  }
  out.coverage = total == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(total);
  return out;
}

double normalize_score(double score, std::size_t n_points) {
  if (n_points < 1) throw DomainError("normalize needs N_S >= 1");
  return score / static_cast<double>(n_points);
}

RangeBinRow range_bins(const std::string& trajectory_id, const SimilarityField& field) {
  RangeBinRow row;
  row.trajectory_id = trajectory_id;
  row.mode = field.mode.name();
  row.min_value = std::numeric_limits<double>::infinity();
  row.max_value = -std::numeric_limits<double>::infinity();
  int defined = 0;
  for (std::size_t pi = 0; pi < field.roi.size(); ++pi) {
    if (!field.defined[pi]) continue;
    ++defined;
    const double v = field.values[pi];
    if (v <= 0.80) ++row.bins[0];
    else if (v <= 0.88) ++row.bins[1];
    else if (v < 0.95) ++row.bins[2];
    else ++row.bins[3];
    row.min_value = std::min(row.min_value, v);
    row.max_value = std::max(row.max_value, v);
  }
  if (defined == 0) throw DomainError("range_bins: no defined points");
  return row;
}

WinnerMap winner_map(const std::vector<std::pair<std::string, SimilarityField>>& fields,
                     const std::string& mode) {
  if (fields.empty()) throw DomainError("winner_map needs at least one trajectory");
  const RegionOfInterest& roi = fields.front().second.roi;
  for (const auto& [id, f] : fields) {
    if (f.roi.size() != roi.size()) throw DomainError("winner_map region mismatch");
  }
  WinnerMap out;
  out.roi = roi;
  out.mode = mode;
  out.winner.assign(roi.size(), "");
  out.value.assign(roi.size(), 0.0);
  for (std::size_t pi = 0; pi < roi.size(); ++pi) {
    bool any = false;
    for (const auto& [id, f] : fields) {
      if (!f.defined[pi]) continue;
      const double v = f.values[pi];
      if (!any || v > out.value[pi] || (v == out.value[pi] && id < out.winner[pi])) {
        out.winner[pi] = id;
        out.value[pi] = v;
        any = true;
      }
    }
  }
  return out;
}

namespace {

std::vector<double> ranks(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> r(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
    i = j + 1;
  }
  return r;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

ScoreCorrelations score_correlations(const ScoreTable& table, CorrelationMethod method) {
  if (table.rows.size() < 3) throw DomainError("score correlations need >= 3 trajectories");
  ScoreCorrelations out;
  out.names = {"DR", "CR_loc", "CR_loc_star", "CR_reg", "CR_reg_star", "PerR", "PerR_star"};
  const std::size_t k = out.names.size();
  std::vector<std::vector<double>> cols(k);
  for (const auto& row : table.rows) {
    cols[0].push_back(row.dr);
    cols[1].push_back(row.cr_loc);
    cols[2].push_back(row.cr_loc_star);
    cols[3].push_back(row.cr_reg);
    cols[4].push_back(row.cr_reg_star);
    cols[5].push_back(row.perr);
    cols[6].push_back(row.perr_star);
  }
  if (method == CorrelationMethod::Spearman) {
    for (auto& c : cols) c = ranks(c);
  }
  out.matrix.assign(k * k, 0.0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      out.matrix[a * k + b] = a == b ? 1.0 : pearson(cols[a], cols[b]);
    }
  }
  // A constant column invalidates its whole row/column, diagonal included.
  for (std::size_t a = 0; a < k; ++a) {
    bool constant = true;
    for (double v : cols[a]) constant = constant && v == cols[a][0];
    if (constant) {
      for (std::size_t b = 0; b < k; ++b) {
        out.matrix[a * k + b] = std::numeric_limits<double>::quiet_NaN();
        out.matrix[b * k + a] = std::numeric_limits<double>::quiet_NaN();
      }
    }
  }
  return out;
}

}  // namespace wtsel
