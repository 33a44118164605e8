#include "wtsel/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wtsel {

namespace {

void check_lengths(std::span<const double> p1, std::span<const double> p2) {
  if (p1.size() != p2.size()) {
    throw DomainError("distribution length mismatch: " + std::to_string(p1.size()) +
                      " vs " + std::to_string(p2.size()));
  }
}

}  // namespace

Metric metric_from_name(const std::string& name) {
  if (name == "overlap") return Metric::Overlap;
  if (name == "dissimilarity") return Metric::Dissimilarity;
  if (name == "bhattacharyya") return Metric::Bhattacharyya;
  if (name == "hellinger") return Metric::Hellinger;
  throw DomainError("unknown metric: " + name);
}

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::Overlap: return "overlap";
    case Metric::Dissimilarity: return "dissimilarity";
    case Metric::Bhattacharyya: return "bhattacharyya";
    case Metric::Hellinger: return "hellinger";
  }
  return "?";
}

bool metric_is_similarity(Metric m) {
  return m == Metric::Overlap || m == Metric::Bhattacharyya;
}

double overlap(std::span<const double> p1, std::span<const double> p2) {
  check_lengths(p1, p2);
  double sum = 0;
  for (std::size_t i = 0; i < p1.size(); ++i) sum += std::min(p1[i], p2[i]);
  return sum;
}

double dissimilarity(std::span<const double> p1, std::span<const double> p2) {
  check_lengths(p1, p2);
  double sum = 0;
  for (std::size_t i = 0; i < p1.size(); ++i) sum += std::abs(p1[i] - p2[i]);
  return 0.5 * sum;
}

double bhattacharyya(std::span<const double> p1, std::span<const double> p2) {
  check_lengths(p1, p2);
  double sum = 0;
  for (std::size_t i = 0; i < p1.size(); ++i) sum += std::sqrt(p1[i] * p2[i]);
  return sum;
}

double hellinger(std::span<const double> p1, std::span<const double> p2) {
  double radicand = 1.0 - bhattacharyya(p1, p2);
  if (radicand < 0) {
    if (radicand < -1e-12) throw DomainError("hellinger radicand negative beyond tolerance");
    radicand = 0;  // floating noise
  }
  return std::sqrt(radicand);
}

double evaluate_metric(Metric m, std::span<const double> p1, std::span<const double> p2) {
  switch (m) {
    case Metric::Overlap: return overlap(p1, p2);
    case Metric::Dissimilarity: return dissimilarity(p1, p2);
    case Metric::Bhattacharyya: return bhattacharyya(p1, p2);
    case Metric::Hellinger: return hellinger(p1, p2);
  }
  throw DomainError("unknown metric");
}

SubsetStrategy SubsetStrategy::all() { return SubsetStrategy{}; }

SubsetStrategy SubsetStrategy::top_k(int k) {
  if (k < 1 || k > kNumWeatherTypes) throw DomainError("TopK k outside 1..27");
  SubsetStrategy s;
  s.kind = Kind::TopK;
  s.k = k;
  return s;
}

SubsetStrategy SubsetStrategy::cumulative_mass(double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw DomainError("CumulativeMass fraction outside (0,1]");
  SubsetStrategy s;
  s.kind = Kind::CumulativeMass;
  s.fraction = fraction;
  return s;
}

SubsetStrategy SubsetStrategy::min_rf(double threshold) {
  if (!(threshold >= 0.0 && threshold < 1.0)) throw DomainError("MinRf threshold outside [0,1)");
  SubsetStrategy s;
  s.kind = Kind::MinRf;
  s.threshold = threshold;
  return s;
}

SubsetStrategy SubsetStrategy::parse(const std::string& text) {
  if (text == "all") return all();
  if (text.rfind("top", 0) == 0) return top_k(std::stoi(text.substr(3)));
  if (text.rfind("cum", 0) == 0) return cumulative_mass(std::stod(text.substr(3)) / 100.0);
  if (text.rfind("minrf:", 0) == 0) return min_rf(std::stod(text.substr(6)));
  throw DomainError("unknown subset strategy: " + text);
}

std::string SubsetStrategy::name() const {
  char buf[32];
  switch (kind) {
    case Kind::All: return "all";
    case Kind::TopK: std::snprintf(buf, sizeof(buf), "top%d", k); return buf;
    case Kind::CumulativeMass:
      std::snprintf(buf, sizeof(buf), "cum%g", fraction * 100.0);
      return buf;
    case Kind::MinRf: std::snprintf(buf, sizeof(buf), "minrf:%g", threshold); return buf;
  }
  return "?";
}

std::string SimilarityMode::name() const {
  return conditional ? "cond:" + std::string(wt.code()) : "daily";
}

SubsetResult apply_subset(const CategoricalDistribution& p_ref,
                          const CategoricalDistribution& p_model,
                          const SubsetStrategy& strategy) {
  if (p_ref.probs.size() != p_model.probs.size()) {
    throw DomainError("distribution length mismatch in apply_subset");
  }
  const std::size_t n = p_ref.probs.size();
  std::vector<int> selected;

  switch (strategy.kind) {
    case SubsetStrategy::Kind::All: {
      selected.resize(n);
      std::iota(selected.begin(), selected.end(), 0);
      break;
    }
    case SubsetStrategy::Kind::TopK:
    case SubsetStrategy::Kind::CumulativeMass: {
      // Descending by reference probability, ties broken by lower index.
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return p_ref.probs[a] > p_ref.probs[b];
      });
      if (strategy.kind == SubsetStrategy::Kind::TopK) {
        selected.assign(order.begin(),
                        order.begin() + std::min<std::size_t>(strategy.k, n));
      } else {
        double cum = 0;
        for (int idx : order) {
          selected.push_back(idx);
          cum += p_ref.probs[idx];
          if (cum >= strategy.fraction - 1e-12) break;
        }
      }
      break;
    }
    case SubsetStrategy::Kind::MinRf: {
      for (std::size_t i = 0; i < n; ++i) {
        if (p_ref.probs[i] > strategy.threshold) selected.push_back(static_cast<int>(i));
      }
      if (selected.empty()) throw DomainError("empty subset under MinRf strategy");
      break;
    }
  }
  std::sort(selected.begin(), selected.end());

  SubsetResult out;
  out.selected = selected;
  const bool total = selected.size() == n;
  out.ref.normalized = p_ref.normalized && total;
  out.model.normalized = p_model.normalized && total;
  for (int idx : selected) {
    out.ref.probs.push_back(p_ref.probs[idx]);
    out.model.probs.push_back(p_model.probs[idx]);
  }
  return out;
}

namespace {

void check_roi(const RegionOfInterest& a, const RegionOfInterest& b) {
  std::string diff;
  if (a.size() != b.size()) {
    diff = "sizes " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a.points[i].lon - b.points[i].lon) > 1e-6 ||
          std::abs(a.points[i].lat - b.points[i].lat) > 1e-6) {
        diff += " (" + std::to_string(a.points[i].lon) + "," + std::to_string(a.points[i].lat) +
                ")!=(" + std::to_string(b.points[i].lon) + "," + std::to_string(b.points[i].lat) + ")";
      }
    }
  }
  if (!diff.empty()) throw DomainError("region mismatch:" + diff);
}

double point_value(std::span<const double> ref, std::span<const double> model,
                   Metric metric, const SubsetStrategy& strategy) {
  CategoricalDistribution r{std::vector<double>(ref.begin(), ref.end()), true};
  CategoricalDistribution m{std::vector<double>(model.begin(), model.end()), true};
  const SubsetResult sub = apply_subset(r, m, strategy);
  if (sub.ref.normalized && sub.model.normalized && sub.ref.probs == sub.model.probs) {
    // Identical normalized inputs: return the correctly rounded result instead
    // of re-accumulating sum(count/pairs), which can land one ulp off 1.
    return metric_is_similarity(metric) ? 1.0 : 0.0;
  }
  return evaluate_metric(metric, sub.ref.probs, sub.model.probs);
}

}  // namespace

SimilarityField similarity_field(const MarginalField& ref, const MarginalField& model,
                                 Metric metric, const SubsetStrategy& strategy) {
  check_roi(ref.roi, model.roi);
  SimilarityField out;
  out.roi = ref.roi;
  out.metric = metric;
  out.mode = SimilarityMode::daily();
  out.strategy = strategy;
  out.values.assign(ref.roi.size(), 0.0);
  out.defined.assign(ref.roi.size(), true);
  for (std::size_t pi = 0; pi < ref.roi.size(); ++pi) {
    out.values[pi] = point_value(ref.rf_daily[pi], model.rf_daily[pi], metric, strategy);
  }
  return out;
}

SimilarityField similarity_field(const ConditionalField& ref, const ConditionalField& model,
                                 Metric metric, const SubsetStrategy& strategy) {
  check_roi(ref.roi, model.roi);
  if (ref.conditioning_wt.index != model.conditioning_wt.index) {
    throw DomainError("conditioning weather type mismatch");
  }
  SimilarityField out;
  out.roi = ref.roi;
  out.metric = metric;
  out.mode = SimilarityMode::cond(ref.conditioning_wt);
  out.strategy = strategy;
  out.values.assign(ref.roi.size(), 0.0);
  out.defined.assign(ref.roi.size(), false);
  for (std::size_t pi = 0; pi < ref.roi.size(); ++pi) {
    if (!ref.defined[pi] || !model.defined[pi]) continue;
    out.defined[pi] = true;
    out.values[pi] = point_value(ref.rf_cond[pi], model.rf_cond[pi], metric, strategy);
  }
  return out;
}

double d_opt(std::span<const double> option_values, std::span<const double> reference_values) {
  if (option_values.size() != reference_values.size()) {
    throw DomainError("d_opt point-set size mismatch");
  }
  const std::size_t n = reference_values.size();
  if (n < 2) throw DomainError("d_opt needs at least 2 points");
  double mean = 0;
  for (double x : reference_values) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0;
  for (double x : reference_values) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (sd == 0) throw DomainError("d_opt reference values are constant");
  double num = 0;
  for (std::size_t i = 0; i < n; ++i) num += option_values[i] - reference_values[i];
  return num / sd;
}

}  // namespace wtsel
