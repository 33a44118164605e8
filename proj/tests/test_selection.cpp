#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "wtsel/selection.hpp"

using namespace wtsel;
using namespace wtsel::testutil;

namespace {

RegionOfInterest grid30() { return RegionOfInterest::iberia(); }

SimilarityField make_field(const RegionOfInterest& roi, const std::vector<double>& values,
                           SimilarityMode mode = SimilarityMode::daily()) {
  SimilarityField f;
  f.roi = roi;
  f.mode = mode;
  f.values = values;
  f.defined.assign(values.size(), true);
  return f;
}

SimilarityField constant_field(const RegionOfInterest& roi, double v,
                               SimilarityMode mode = SimilarityMode::daily()) {
  return make_field(roi, std::vector<double>(roi.size(), v), mode);
}

/// Field with exactly n values at `low` and the rest at `high`.
SimilarityField planted_field(const RegionOfInterest& roi, int n, double low, double high,
                              SimilarityMode mode = SimilarityMode::daily()) {
  std::vector<double> v(roi.size(), high);
  for (int i = 0; i < n; ++i) v[i] = low;
  return make_field(roi, v, mode);
}

}  // namespace

TEST_CASE("count_below") {
  const RegionOfInterest roi = grid30();
  CHECK(count_below(constant_field(roi, 1.0), 0.8) == 0);
  CHECK(count_below(planted_field(roi, 7, 0.75, 0.9), 0.8) == 7);

  // The comparison is inclusive: a value exactly at the threshold counts.
  CHECK(count_below(planted_field(roi, 3, 0.8, 0.9), 0.8) == 3);

  // Undefined points count as below-threshold.
  SimilarityField f = constant_field(roi, 0.95);
  f.defined[0] = false;
  f.defined[5] = false;
  CHECK(count_below(f, 0.8) == 2);
}

TEST_CASE("default stage limit") {
  CHECK(FilterConfig::default_limit(30) == 10);
  CHECK(FilterConfig::default_limit(31) == 11);
  CHECK(FilterConfig::default_limit(29) == 10);
  CHECK(FilterConfig::default_limit(3) == 1);
}

TEST_CASE("config validation") {
  FilterConfig cfg;
  CHECK_NOTHROW(cfg.validate(30));
  cfg.t_sim = 1.0;
  CHECK_THROWS_AS(cfg.validate(30), DomainError);
  cfg = FilterConfig{};
  cfg.stage_limit = 0;
  CHECK_THROWS_AS(cfg.validate(30), DomainError);
  cfg = FilterConfig{};
  cfg.stage_limit = 31;
  CHECK_THROWS_AS(cfg.validate(30), DomainError);
  cfg = FilterConfig{};
  cfg.conditioning_set = {wt_from_code("PA"), wt_from_code("PA")};
  CHECK_THROWS_AS(cfg.validate(30), DomainError);
  cfg.conditioning_set.clear();
  CHECK_THROWS_AS(cfg.validate(30), DomainError);
}

TEST_CASE("filter_trajectory stage semantics") {
  const RegionOfInterest roi = grid30();
  FilterConfig cfg;
  cfg.conditioning_set = {wt_from_code("PC"), wt_from_code("PDNE")};
  auto cond = [&](const char* code, const SimilarityField& base) {
    SimilarityField f = base;
    f.mode = SimilarityMode::cond(wt_from_code(code));
    return f;
  };

  SUBCASE("perfect fields are retained with zero counts") {
    const std::vector<SimilarityField> conditionals = {
        cond("PC", constant_field(roi, 1.0)), cond("PDNE", constant_field(roi, 1.0))};
    const FilterOutcome o =
        filter_trajectory("m", constant_field(roi, 1.0), conditionals, cfg);
    CHECK(o.retained);
    CHECK(o.counts == std::vector<int>{0, 0, 0});
    CHECK(o.stage_names == std::vector<std::string>{"daily", "PC", "PDNE"});
    CHECK_FALSE(o.eliminated_at.has_value());
  }

  SUBCASE("daily elimination leaves conditionals unevaluated") {
    const std::vector<SimilarityField> conditionals = {
        cond("PC", constant_field(roi, 1.0)), cond("PDNE", constant_field(roi, 1.0))};
    const FilterOutcome o =
        filter_trajectory("m", planted_field(roi, 28, 0.5, 0.9), conditionals, cfg);
    CHECK_FALSE(o.retained);
    CHECK(o.counts == std::vector<int>{28});
    CHECK(o.eliminated_at == "daily");
  }

  SUBCASE("counts 0, 4, 0 below limit 10 are retained") {
    const std::vector<SimilarityField> conditionals = {
        cond("PC", planted_field(roi, 4, 0.7, 0.95)), cond("PDNE", constant_field(roi, 0.95))};
    const FilterOutcome o =
        filter_trajectory("m", constant_field(roi, 0.95), conditionals, cfg);
    CHECK(o.retained);
    CHECK(o.counts == std::vector<int>{0, 4, 0});
  }

  SUBCASE("missing conditional field is an error") {
    const std::vector<SimilarityField> conditionals = {cond("PC", constant_field(roi, 1.0))};
    CHECK_THROWS_AS(filter_trajectory("m", constant_field(roi, 1.0), conditionals, cfg),
                    DomainError);
  }
}

TEST_CASE("sequential filter on planted daily counts") {
  const RegionOfInterest roi = grid30();
  FilterConfig cfg;
  cfg.conditioning_set = {wt_from_code("PA")};
  std::vector<TrajectoryFields> ensemble;
  for (int n : {0, 9, 10, 30}) {
    TrajectoryFields t;
    t.trajectory_id = "m" + std::to_string(n);
    t.daily = planted_field(roi, n, 0.7, 0.95);
    SimilarityField c = constant_field(roi, 1.0);
    c.mode = SimilarityMode::cond(wt_from_code("PA"));
    t.conditionals = {c};
    ensemble.push_back(std::move(t));
  }
  const std::vector<FilterOutcome> outcomes = sequential_filter(ensemble, cfg);
  REQUIRE(outcomes.size() == 4);
  CHECK(outcomes[0].retained);   // count 0
  CHECK(outcomes[1].retained);   // count 9 < 10
  CHECK_FALSE(outcomes[2].retained);  // count 10 reaches the limit
  CHECK_FALSE(outcomes[3].retained);

  CHECK_THROWS_AS(sequential_filter({}, cfg), DomainError);
}

TEST_CASE("monotonicity and order independence over random ensembles") {
  const RegionOfInterest roi = grid30();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.5, 1.0);
  const std::vector<WeatherType> wts = {wt_from_code("PA"), wt_from_code("PC"),
                                        wt_from_code("PDNE")};

  for (int trial = 0; trial < 100; ++trial) {
    TrajectoryFields t;
    t.trajectory_id = "m";
    std::vector<double> dv(roi.size());
    for (auto& v : dv) v = u(rng);
    t.daily = make_field(roi, dv);
    for (const WeatherType wt : wts) {
      std::vector<double> cv(roi.size());
      for (auto& v : cv) v = u(rng);
      t.conditionals.push_back(make_field(roi, cv, SimilarityMode::cond(wt)));
    }

    FilterConfig cfg;
    cfg.conditioning_set = wts;
    std::uniform_real_distribution<double> tdist(0.55, 0.95);
    std::uniform_int_distribution<int> ldist(1, 30);
    cfg.t_sim = tdist(rng);
    cfg.stage_limit = ldist(rng);
    const bool base = filter_trajectory("m", t.daily, t.conditionals, cfg).retained;

    // Raising t_sim never turns an eliminated trajectory into a retained one.
    FilterConfig higher = cfg;
    higher.t_sim = std::min(0.99, cfg.t_sim + 0.1);
    const bool stricter = filter_trajectory("m", t.daily, t.conditionals, higher).retained;
    if (stricter) REQUIRE(base);

    // Enlarging the limit never shrinks the retained set.
    FilterConfig looser = cfg;
    looser.stage_limit = std::min<int>(30, cfg.stage_limit + 5);
    if (base) REQUIRE(filter_trajectory("m", t.daily, t.conditionals, looser).retained);

    // Permuting the conditioning order preserves retention.
    FilterConfig permuted = cfg;
    std::shuffle(permuted.conditioning_set.begin(), permuted.conditioning_set.end(), rng);
    REQUIRE(filter_trajectory("m", t.daily, t.conditionals, permuted).retained == base);
  }
}
