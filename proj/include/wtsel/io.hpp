#pragma once

#include <map>
#include <string>
#include <vector>

#include "wtsel/classifier.hpp"
#include "wtsel/scores.hpp"
#include "wtsel/synth.hpp"

namespace wtsel {

/// Key/value run configuration echoed into every output file as '#' comment
/// lines, so artifacts are reproducible byte-for-byte and self-describing.
using Provenance = std::vector<std::pair<std::string, std::string>>;

/// Shared CSV plumbing: '#' comment lines are provenance, first data line is
/// the header, fields are comma-separated with no quoting (none of the
/// formats carry commas in values).
namespace csvio {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based file line of each row
  Provenance provenance;
};

Table read(const std::string& path);
void write(const std::string& path, const Table& table);

/// Fixed-precision decimal rendering, trailing zeros trimmed; byte-stable.
std::string fmt(double v, int decimals = 12);

}  // namespace csvio

// --- format readers/writers ---------------------------------------------

/// `date,lon,lat,wt` ; one row per (date, point) cell.
WtSeries read_wt_series(const std::string& path);
void write_wt_series(const WtSeries& series, const std::string& path,
                     const Provenance& prov = {});

/// `lon,lat,wt_today,wt_prev,rf,count` ; omitted cells read as 0, per-point
/// sums must be 1 within 1e-6.
JointFrequencyField read_joint_rf(const std::string& path);
void write_joint_rf(const JointFrequencyField& field, const std::string& path,
                    const Provenance& prov = {});

/// `date,lon,lat,slp_hpa`.
SlpField read_slp(const std::string& path);

/// `lon,lat,wt_prev,wt_today,prob` homogeneous or per-point transition spec.
MarkovSpec read_transition_spec(const std::string& path, std::uint64_t seed);
void write_transition_spec(const MarkovSpec& spec, const std::string& path,
                           const Provenance& prov = {});

/// `lon,lat,metric,mode,strategy,value,defined`.
SimilarityField read_similarity_field(const std::string& path);
void write_similarity_field(const SimilarityField& field, const std::string& path,
                            const Provenance& prov = {});

/// `trajectory,stage_daily,stage_<wt>...,retained,eliminated_at`; blank cells
/// for unevaluated stages.
void write_filter_ledger(const std::vector<FilterOutcome>& outcomes,
                         const std::vector<std::string>& stage_names,
                         const std::string& path, const Provenance& prov = {});
std::vector<FilterOutcome> read_filter_ledger(const std::string& path);

/// Regional score ranking table.
void write_score_table(const ScoreTable& table, const std::vector<std::string>& stage_names,
                       const std::string& path, const Provenance& prov = {});
ScoreTable read_score_table(const std::string& path);

/// Overlap-range bin count table.
void write_range_bins(const std::vector<RangeBinRow>& rows, const std::string& path,
                      const Provenance& prov = {});
std::vector<RangeBinRow> read_range_bins(const std::string& path);

/// `lon,lat,mode,winner,value`.
void write_winner_map(const WinnerMap& map, const std::string& path,
                      const Provenance& prov = {});
WinnerMap read_winner_map(const std::string& path);

/// `strategy,mode,metric,d_opt`.
struct DOptRow {
  std::string strategy;
  std::string mode;
  std::string metric;
  double value = 0;
};
void write_d_opt_table(const std::vector<DOptRow>& rows, const std::string& path,
                       const Provenance& prov = {});
std::vector<DOptRow> read_d_opt_table(const std::string& path);

/// Square correlation matrix with score names as header row/column.
void write_correlations(const ScoreCorrelations& corr, const std::string& path,
                        const Provenance& prov = {});
ScoreCorrelations read_correlations(const std::string& path);

/// `trajectory,lon,lat,mode,value,defined` — tabular key-point profiles.
struct KeyPointRow {
  std::string trajectory_id;
  LonLat point;
  std::string mode;
  double value = 0;
  bool defined = false;
};
std::vector<KeyPointRow> key_point_profile(
    const std::vector<std::pair<std::string, std::vector<SimilarityField>>>& fields,
    const std::vector<LonLat>& points);
void write_key_point_profile(const std::vector<KeyPointRow>& rows, const std::string& path,
                             const Provenance& prov = {});
std::vector<KeyPointRow> read_key_point_profile(const std::string& path);

// --- SVG -----------------------------------------------------------------

/// One colored cell per ROI point; color scale pinned to [0,1]; deterministic.
void emit_heatmap(const SimilarityField& field, const std::string& path);
/// Winner labels rendered in-cell, one color per distinct trajectory.
void emit_heatmap(const WinnerMap& map, const std::string& path);

/// Default key points: seven locations spread over the Iberian grid box.
const std::vector<LonLat>& default_key_points();

}  // namespace wtsel
