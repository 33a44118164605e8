#include "wtsel/selection.hpp"

#include <cmath>

namespace wtsel {

int FilterConfig::default_limit(std::size_t n_points) {
  return static_cast<int>((n_points + 2) / 3);  // ceil(N_S / 3)
}

void FilterConfig::validate(std::size_t n_points) const {
  if (!(t_sim > 0.0 && t_sim < 1.0)) throw DomainError("t_sim outside (0,1)");
  if (stage_limit < 1 || stage_limit > static_cast<int>(n_points)) {
    throw DomainError("stage limit outside 1..N_S");
  }
  if (conditioning_set.empty()) throw DomainError("conditioning set is empty");
  for (std::size_t i = 0; i < conditioning_set.size(); ++i) {
    for (std::size_t j = i + 1; j < conditioning_set.size(); ++j) {
      if (conditioning_set[i].index == conditioning_set[j].index) {
        throw DomainError("duplicate weather type in conditioning set");
      }
    }
  }
}

int count_below(const SimilarityField& field, double t_sim) {
  int n = 0;
  for (std::size_t pi = 0; pi < field.roi.size(); ++pi) {
    // Insufficient support means the model cannot be evaluated there;
    // such points count against it.
    if (!field.defined[pi] || field.values[pi] <= t_sim) ++n;
  }
  return n;
}

FilterOutcome filter_trajectory(const std::string& trajectory_id,
                                const SimilarityField& daily,
                                const std::vector<SimilarityField>& conditionals,
                                const FilterConfig& config) {
  config.validate(daily.roi.size());
  FilterOutcome out;
  out.trajectory_id = trajectory_id;

  auto evaluate = [&](const std::string& stage, const SimilarityField& field) -> bool {
    const int n = count_below(field, config.t_sim);
    out.stage_names.push_back(stage);
    out.counts.push_back(n);
    if (n >= config.stage_limit) {
      out.eliminated_at = stage;
      return false;
    }
    return true;
  };

  if (!evaluate("daily", daily)) return out;
  for (const WeatherType wt : config.conditioning_set) {
    const SimilarityField* field = nullptr;
    for (const auto& c : conditionals) {
      if (c.mode.conditional && c.mode.wt.index == wt.index) {
        field = &c;
        break;
      }
    }
    if (field == nullptr) {
      throw DomainError("missing conditional similarity field for " + std::string(wt.code()));
    }
    if (!evaluate(std::string(wt.code()), *field)) return out;
  }
  out.retained = true;
  return out;
}

std::vector<FilterOutcome> sequential_filter(const std::vector<TrajectoryFields>& ensemble,
                                             const FilterConfig& config) {
  if (ensemble.empty()) throw DomainError("empty trajectory ensemble");
  std::vector<FilterOutcome> out;
  out.reserve(ensemble.size());
  for (const auto& t : ensemble) {
    try {
      out.push_back(filter_trajectory(t.trajectory_id, t.daily, t.conditionals, config));
    } catch (const DomainError& e) {
      throw DomainError("trajectory " + t.trajectory_id + ": " + e.what());
    }
  }
  return out;
}

}  // namespace wtsel
