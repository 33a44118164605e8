#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wtsel/io.hpp"

namespace wtsel {

namespace csvio {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace

Table read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  Table t;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq != std::string::npos) {
        std::string key = line.substr(1, eq - 1);
        while (!key.empty() && key.front() == ' ') key.erase(key.begin());
        while (!key.empty() && key.back() == ' ') key.pop_back();
        t.provenance.emplace_back(key, line.substr(eq + 1));
      }
      continue;
    }
    if (!header_seen) {
      t.header = split(line);
      header_seen = true;
    } else {
      auto row = split(line);
      if (row.size() != t.header.size()) {
        throw DomainError(path + ":" + std::to_string(line_no) + ": expected " +
                          std::to_string(t.header.size()) + " fields, got " +
                          std::to_string(row.size()));
      }
      t.rows.push_back(std::move(row));
      t.line_numbers.push_back(line_no);
    }
  }
  if (!header_seen) throw DomainError("file has no header: " + path);
  return t;
}

void write(const std::string& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);  // binary: byte-stable line endings
  if (!out) throw DomainError("cannot write file: " + path);
  for (const auto& [k, v] : table.provenance) out << "# " << k << "=" << v << "\n";
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  if (!out) throw DomainError("write failed: " + path);
}

std::string fmt(double v, int decimals) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

}  // namespace csvio

namespace {

using csvio::Table;
using csvio::fmt;

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (...) {
  }
  throw DomainError(std::string("malformed ") + what + ": '" + s + "'");
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (...) {
  }
  throw DomainError(std::string("malformed ") + what + ": '" + s + "'");
}

void expect_header(const Table& t, const std::vector<std::string>& expected,
                   const std::string& path) {
  if (t.header != expected) {
    std::string want;
    for (const auto& h : expected) want += (want.empty() ? "" : ",") + h;
    std::string got;
    for (const auto& h : t.header) got += (got.empty() ? "" : ",") + h;
    throw DomainError(path + ": expected header '" + want + "', got '" + got + "'");
  }
}

std::string fmt_coord(double v) { return fmt(v, 6); }

/// Stable point collection in first-appearance order.
struct PointIndex {
  std::vector<LonLat> points;

  int get_or_add(const LonLat& p) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (std::abs(points[i].lon - p.lon) <= 1e-6 && std::abs(points[i].lat - p.lat) <= 1e-6) {
        return static_cast<int>(i);
      }
    }
    points.push_back(p);
    return static_cast<int>(points.size()) - 1;
  }
};

}  // namespace

WtSeries read_wt_series(const std::string& path) {
  const Table t = csvio::read(path);
  expect_header(t, {"date", "lon", "lat", "wt"}, path);
  // Two passes: collect axes, then fill the dense (date, point) grid.
  std::vector<Date> dates;
  PointIndex pts;
  std::map<std::int64_t, std::size_t> date_idx;
  for (const auto& row : t.rows) {
    const Date d = Date::parse(row[0]);
    if (date_idx.emplace(d.serial(), date_idx.size()).second) dates.push_back(d);
    pts.get_or_add({parse_double(row[1], "lon"), parse_double(row[2], "lat")});
  }
  std::sort(dates.begin(), dates.end());
  date_idx.clear();
  for (std::size_t i = 0; i < dates.size(); ++i) date_idx[dates[i].serial()] = i;

  WtSeries s;
  s.trajectory_id = path;
  for (const auto& [k, v] : t.provenance) {
    if (k == "trajectory") s.trajectory_id = v;
  }
  s.points = pts.points;
  s.dates = dates;
  s.values.assign(dates.size() * pts.points.size(), 0);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    const int wt = parse_int(row[3], "wt");
    if (wt < 1 || wt > kNumWeatherTypes) {
      throw DomainError(path + ": wt " + std::to_string(wt) + " outside 1..27 on line " +
                        std::to_string(t.line_numbers[r]));
    }
    const std::size_t di = date_idx.at(Date::parse(row[0]).serial());
    const int pi = pts.get_or_add({parse_double(row[1], "lon"), parse_double(row[2], "lat")});
    s.at(di, pi) = static_cast<std::uint8_t>(wt);
  }
  for (std::size_t di = 0; di < s.dates.size(); ++di) {
    for (std::size_t pi = 0; pi < s.points.size(); ++pi) {
      if (s.at(di, pi) == 0) {
        throw DomainError(path + ": missing cell for date " + s.dates[di].iso() + " point (" +
                          fmt_coord(s.points[pi].lon) + ", " + fmt_coord(s.points[pi].lat) + ")");
      }
    }
  }
  s.validate();
  return s;
}

void write_wt_series(const WtSeries& series, const std::string& path, const Provenance& prov) {
  Table t;
  t.provenance = prov;
  t.provenance.emplace_back("trajectory", series.trajectory_id);
  t.header = {"date", "lon", "lat", "wt"};
  t.rows.reserve(series.dates.size() * series.points.size());
  for (std::size_t di = 0; di < series.dates.size(); ++di) {
    for (std::size_t pi = 0; pi < series.points.size(); ++pi) {
      t.rows.push_back({series.dates[di].iso(), fmt_coord(series.points[pi].lon),
                        fmt_coord(series.points[pi].lat), std::to_string(series.at(di, pi))});
    }
  }
  csvio::write(path, t);
}

JointFrequencyField read_joint_rf(const std::string& path) {
  const Table t = csvio::read(path);
  expect_header(t, {"lon", "lat", "wt_today", "wt_prev", "rf", "count"}, path);
  PointIndex pts;
  std::vector<JointMatrix> matrices;
  std::vector<std::int64_t> counts;
  for (const auto& row : t.rows) {
    const LonLat p{parse_double(row[0], "lon"), parse_double(row[1], "lat")};
    const int pi = pts.get_or_add(p);
    if (pi == static_cast<int>(matrices.size())) {
      matrices.emplace_back(JointMatrix{});
      counts.push_back(0);
    }
    const int i = parse_int(row[2], "wt_today");
    const int j = parse_int(row[3], "wt_prev");
    if (i < 1 || i > 27 || j < 1 || j > 27) throw DomainError(path + ": wt index outside 1..27");
    JointFrequencyField::entry(matrices[pi], i, j) = parse_double(row[4], "rf");
    counts[pi] = parse_int(row[5], "count");
  }
  if (pts.points.empty()) throw DomainError(path + ": no data rows");
  JointFrequencyField out;
  out.roi = RegionOfInterest::from_points(pts.points);
  out.rf_joint = std::move(matrices);
  out.pair_count = std::move(counts);
  for (std::size_t pi = 0; pi < out.roi.size(); ++pi) {
    double sum = 0;
    for (double v : out.rf_joint[pi]) sum += v;
    if (std::abs(sum - 1.0) > 1e-6) {
      throw DomainError(path + ": joint rf at point (" + fmt_coord(out.roi.points[pi].lon) +
                        ", " + fmt_coord(out.roi.points[pi].lat) + ") sums to " +
                        std::to_string(sum) + ", expected 1");
    }
  }
  return out;
}

void write_joint_rf(const JointFrequencyField& field, const std::string& path,
                    const Provenance& prov) {
  Table t;
  t.provenance = prov;
  t.header = {"lon", "lat", "wt_today", "wt_prev", "rf", "count"};
  for (std::size_t pi = 0; pi < field.roi.size(); ++pi) {
    for (int i = 1; i <= kNumWeatherTypes; ++i) {
      for (int j = 1; j <= kNumWeatherTypes; ++j) {
        const double rf = JointFrequencyField::entry(field.rf_joint[pi], i, j);
        if (rf == 0) continue;  // omitted cells read back as 0
        t.rows.push_back({fmt_coord(field.roi.points[pi].lon), fmt_coord(field.roi.points[pi].lat),
                          std::to_string(i), std::to_string(j), fmt(rf, 15),
                          std::to_string(field.pair_count[pi])});
      }
    }
  }
  csvio::write(path, t);
}

SlpField read_slp(const std::string& path) {
  const Table t = csvio::read(path);
  expect_header(t, {"date", "lon", "lat", "slp_hpa"}, path);
  std::set<double> lons, lats;
  std::map<std::int64_t, std::size_t> date_idx;
  std::vector<Date> dates;
  for (const auto& row : t.rows) {
    const Date d = Date::parse(row[0]);
    if (date_idx.emplace(d.serial(), 0).second) dates.push_back(d);
    lons.insert(parse_double(row[1], "lon"));
    lats.insert(parse_double(row[2], "lat"));
  }
  std::sort(dates.begin(), dates.end());
  for (std::size_t i = 0; i < dates.size(); ++i) date_idx[dates[i].serial()] = i;

  SlpField f;
  f.grid = GridSpec::create(std::vector<double>(lons.begin(), lons.end()),
                            std::vector<double>(lats.begin(), lats.end()));
  f.dates = dates;
  f.pressure.assign(dates.size() * f.ncells(), std::nan(""));
  for (const auto& row : t.rows) {
    const std::size_t di = date_idx.at(Date::parse(row[0]).serial());
    const int li = GridSpec::axis_index(f.grid.lon_values, parse_double(row[1], "lon"));
    const int la = GridSpec::axis_index(f.grid.lat_values, parse_double(row[2], "lat"));
    f.pressure[di * f.ncells() + static_cast<std::size_t>(la) * f.grid.lon_values.size() + li] =
        parse_double(row[3], "slp_hpa");
  }
  f.validate();
  return f;
}

MarkovSpec read_transition_spec(const std::string& path, std::uint64_t seed) {
  const Table t = csvio::read(path);
  expect_header(t, {"lon", "lat", "wt_prev", "wt_today", "prob"}, path);
  PointIndex pts;
  std::vector<JointMatrix> matrices;
  for (const auto& row : t.rows) {
    const int pi = pts.get_or_add({parse_double(row[0], "lon"), parse_double(row[1], "lat")});
    if (pi == static_cast<int>(matrices.size())) matrices.emplace_back(JointMatrix{});
    const int j = parse_int(row[2], "wt_prev");
    const int i = parse_int(row[3], "wt_today");
    if (i < 1 || i > 27 || j < 1 || j > 27) throw DomainError(path + ": wt index outside 1..27");
    MarkovSpec::trans(matrices[pi], j, i) = parse_double(row[4], "prob");
  }
  if (pts.points.empty()) throw DomainError(path + ": no data rows");
  MarkovSpec spec;
  spec.roi = RegionOfInterest::from_points(pts.points);
  spec.transition = std::move(matrices);
  // Initial distribution: row-stochastic stationary start is overkill at desk
  // scale; use the first-day draw from the transition row of U unless the file
  // provides explicit rows for a virtual previous type. Default: uniform.
  std::array<double, kNumWeatherTypes> uniform{};
  uniform.fill(1.0 / kNumWeatherTypes);
  spec.initial.assign(spec.roi.size(), uniform);
  spec.seed = seed;
  spec.validate();
  return spec;
}

void write_transition_spec(const MarkovSpec& spec, const std::string& path,
                           const Provenance& prov) {
  Table t;
  t.provenance = prov;
  t.header = {"lon", "lat", "wt_prev", "wt_today", "prob"};
  for (std::size_t pi = 0; pi < spec.roi.size(); ++pi) {
    for (int j = 1; j <= kNumWeatherTypes; ++j) {
      for (int i = 1; i <= kNumWeatherTypes; ++i) {
        const double p = MarkovSpec::trans(spec.transition[pi], j, i);
        if (p == 0) continue;
        t.rows.push_back({fmt_coord(spec.roi.points[pi].lon), fmt_coord(spec.roi.points[pi].lat),
                          std::to_string(j), std::to_string(i), fmt(p, 15)});
      }
    }
  }
  csvio::write(path, t);
}

SimilarityField read_similarity_field(const std::string& path) {
  const Table t = csvio::read(path);
  expect_header(t, {"lon", "lat", "metric", "mode", "strategy", "value", "defined"}, path);
  if (t.rows.empty()) throw DomainError(path + ": no data rows");
  SimilarityField f;
  PointIndex pts;
  for (const auto& row : t.rows) {
    pts.get_or_add({parse_double(row[0], "lon"), parse_double(row[1], "lat")});
    const bool defined = row[6] == "1";
    f.values.push_back(defined ? parse_double(row[5], "value") : 0.0);
    f.defined.push_back(defined);
  }
  f.roi = RegionOfInterest::from_points(pts.points);
  f.metric = metric_from_name(t.rows[0][2]);
  const std::string mode = t.rows[0][3];
  if (mode == "daily") {
    f.mode = SimilarityMode::daily();
  } else if (mode.rfind("cond:", 0) == 0) {
    f.mode = SimilarityMode::cond(wt_from_code(mode.substr(5)));
  } else {
    throw DomainError(path + ": unknown mode '" + mode + "'");
  }
  f.strategy = SubsetStrategy::parse(t.rows[0][4]);
  return f;
}

void write_similarity_field(const SimilarityField& field, const std::string& path,
                            const Provenance& prov) {
  Table t;
  t.provenance = prov;
  t.header = {"lon", "lat", "metric", "mode", "strategy", "value", "defined"};
  for (std::size_t pi = 0; pi < field.roi.size(); ++pi) {
    t.rows.push_back({fmt_coord(field.roi.points[pi].lon), fmt_coord(field.roi.points[pi].lat),
                      metric_name(field.metric), field.mode.name(), field.strategy.name(),
                      field.defined[pi] ? fmt(field.values[pi], 15) : "",
                      field.defined[pi] ? "1" : "0"});
  }
  csvio::write(path, t);
}

void write_filter_ledger(const std::vector<FilterOutcome>& outcomes,
                         const std::vector<std::string>& stage_names, const std::string& path,
                         const Provenance& prov) {
  Table t;
  t.provenance = prov;
  t.header = {"trajectory"};
  for (const auto& s : stage_names) t.header.push_back("stage_" + s);
  t.header.push_back("retained");
  t.header.push_back("eliminated_at");
  for (const auto& o : outcomes) {
    std::vector<std::string> row = {o.trajectory_id};
    for (const auto& s : stage_names) {
      std::string cell;  // blank = stage not evaluated
      for (std::size_t k = 0; k < o.stage_names.size(); ++k) {
        if (o.stage_names[k] == s) cell = std::to_string(o.counts[k]);
      }
      row.push_back(cell);
    }
    row.push_back(o.retained ? "1" : "0");
    row.push_back(o.eliminated_at.value_or(""));
    t.rows.push_back(std::move(row));
  }
  csvio::write(path, t);
}

std::vector<FilterOutcome> read_filter_ledger(const std::string& path) {
  const Table t = csvio::read(path);
  if (t.header.size() < 4 || t.header[0] != "trajectory" ||
      t.header[t.header.size() - 2] != "retained" || t.header.back() != "eliminated_at") {
    throw DomainError(path + ": unexpected filter-ledger header");
  }
  std::vector<FilterOutcome> out;
  for (const auto& row : t.rows) {
    FilterOutcome o;
    o.trajectory_id = row[0];
    for (std::size_t c = 1; c + 2 < row.size(); ++c) {
      if (row[c].empty()) continue;
      o.stage_names.push_back(t.header[c].substr(6));  // strip "stage_"
      o.counts.push_back(parse_int(row[c], "stage count"));
    }
    o.retained = row[row.size() - 2] == "1";
    if (!row.back().empty()) o.eliminated_at = row.back();
    out.push_back(std::move(o));
  }
  return out;
}

void write_score_table(const ScoreTable& table, const std::vector<std::string>& stage_names,
                       const std::string& path, const Provenance& prov) {
  Table t;
  t.provenance = prov;
  t.header = {"trajectory", "DR",   "CR_loc", "CR_loc_star", "CR_reg",
              "CR_reg_star", "PerR", "PerR_star", "coverage"};
  for (const auto& s : stage_names) t.header.push_back("n_below_" + s);
  t.header.push_back("retained");
  for (const auto& r : table.rows) {
    std::vector<std::string> row = {r.trajectory_id, fmt(r.dr, 6),      fmt(r.cr_loc, 6),
                                    fmt(r.cr_loc_star, 6), fmt(r.cr_reg, 6), fmt(r.cr_reg_star, 6),
                                    fmt(r.perr, 6),   fmt(r.perr_star, 6), fmt(r.coverage, 6)};
    for (const auto& s : stage_names) {
      std::string cell;
      for (std::size_t k = 0; k < r.filter_stages.size(); ++k) {
        if (r.filter_stages[k] == s) cell = std::to_string(r.filter_counts[k]);
      }
      row.push_back(cell);
    }
    row.push_back(r.retained ? "1" : "0");
    t.rows.push_back(std::move(row));
  }
  csvio::write(path, t);
}

ScoreTable read_score_table(const std::string& path) {
  const Table t = csvio::read(path);
  if (t.header.size() < 10 || t.header[0] != "trajectory" || t.header.back() != "retained") {
    throw DomainError(path + ": unexpected score-table header");
  }
  ScoreTable out;
  for (const auto& row : t.rows) {
    ScoreRow r;
    r.trajectory_id = row[0];
    r.dr = parse_double(row[1], "DR");
    r.cr_loc = parse_double(row[2], "CR_loc");
    r.cr_loc_star = parse_double(row[3], "CR_loc_star");
    r.cr_reg = parse_double(row[4], "CR_reg");
    r.cr_reg_star = parse_double(row[5], "CR_reg_star");
    r.perr = parse_double(row[6], "PerR");
    r.perr_star = parse_double(row[7], "PerR_star");
    r.coverage = parse_double(row[8], "coverage");
    for (std::size_t c = 9; c + 1 < row.size(); ++c) {
      if (row[c].empty()) continue;
      r.filter_stages.push_back(t.header[c].substr(8));  // strip "n_below_"
      r.filter_counts.push_back(parse_int(row[c], "filter count"));
    }
    r.retained = row.back() == "1";
    out.rows.push_back(std::move(r));
  }
  return out;
}

void write_range_bins(const std::vector<RangeBinRow>& rows, const std::string& path,
                      const Provenance& prov) {
  Table t;
  t.provenance = prov;
  t.header = {"trajectory", "mode", "bin_le_080", "bin_080_088", "bin_088_095",
              "bin_ge_095", "min", "max"};
  for (const auto& r : rows) {
    t.rows.push_back({r.trajectory_id, r.mode, std::to_string(r.bins[0]),
                      std::to_string(r.bins[1]), std::to_string(r.bins[2]),
                      std::to_string(r.bins[3]), fmt(r.min_value, 6), fmt(r.max_value, 6)});
  }
  csvio::write(path, t);
}

std::vector<RangeBinRow> read_range_bins(const std::string& path) {
  const Table t = csvio::read(path);
  expect_header(t, {"trajectory", "mode", "bin_le_080", "bin_080_088", "bin_088_095",
                    "bin_ge_095", "min", "max"}, path);
  std::vector<RangeBinRow> out;
  for (const auto& row : t.rows) {
    RangeBinRow r;
    r.trajectory_id = row[0];
    r.mode = row[1];
    for (int b = 0; b < 4; ++b) r.bins[b] = parse_int(row[2 + b], "bin count");
    r.min_value = parse_double(row[6], "min");
    r.max_value = parse_double(row[7], "max");
    out.push_back(std::move(r));
  }
  return out;
}

void write_winner_map(const WinnerMap& map, const std::string& path, const Provenance& prov) {
  Table t;
  t.provenance = prov;
  t.header = {"lon", "lat", "mode", "winner", "value"};
  for (std::size_t pi = 0; pi < map.roi.size(); ++pi) {
    t.rows.push_back({fmt_coord(map.roi.points[pi].lon), fmt_coord(map.roi.points[pi].lat),
                      map.mode, map.winner[pi],
                      map.winner[pi].empty() ? "" : fmt(map.value[pi], 15)});
  }
  csvio::write(path, t);
}

WinnerMap read_winner_map(const std::string& path) {
  const Table t = csvio::read(path);
  expect_header(t, {"lon", "lat", "mode", "winner", "value"}, path);
  if (t.rows.empty()) throw DomainError(path + ": no data rows");
  WinnerMap m;
  PointIndex pts;
  m.mode = t.rows[0][2];
  for (const auto& row : t.rows) {
    pts.get_or_add({parse_double(row[0], "lon"), parse_double(row[1], "lat")});
    m.winner.push_back(row[3]);
    m.value.push_back(row[3].empty() ? 0.0 : parse_double(row[4], "value"));
  }
  m.roi = RegionOfInterest::from_points(pts.points);
  return m;
}

void write_d_opt_table(const std::vector<DOptRow>& rows, const std::string& path,
                       const Provenance& prov) {
  Table t;
  t.provenance = prov;
  t.header = {"strategy", "mode", "metric", "d_opt"};
  for (const auto& r : rows) {
    t.rows.push_back({r.strategy, r.mode, r.metric, fmt(r.value, 6)});
  }
  csvio::write(path, t);
}

std::vector<DOptRow> read_d_opt_table(const std::string& path) {
  const Table t = csvio::read(path);
  expect_header(t, {"strategy", "mode", "metric", "d_opt"}, path);
  std::vector<DOptRow> out;
  for (const auto& row : t.rows) {
    out.push_back({row[0], row[1], row[2], parse_double(row[3], "d_opt")});
  }
  return out;
}

void write_correlations(const ScoreCorrelations& corr, const std::string& path,
                        const Provenance& prov) {
  Table t;
  t.provenance = prov;
  t.header = {"score"};
  for (const auto& n : corr.names) t.header.push_back(n);
  const std::size_t k = corr.names.size();
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<std::string> row = {corr.names[a]};
    for (std::size_t b = 0; b < k; ++b) row.push_back(fmt(corr.matrix[a * k + b], 12));
    t.rows.push_back(std::move(row));
  }
  csvio::write(path, t);
}

ScoreCorrelations read_correlations(const std::string& path) {
  const Table t = csvio::read(path);
  if (t.header.empty() || t.header[0] != "score") {
    throw DomainError(path + ": unexpected correlation header");
  }
  ScoreCorrelations out;
  out.names.assign(t.header.begin() + 1, t.header.end());
  const std::size_t k = out.names.size();
  if (t.rows.size() != k) throw DomainError(path + ": correlation matrix not square");
  out.matrix.assign(k * k, 0.0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      out.matrix[a * k + b] = t.rows[a][b + 1] == "nan"
                                  ? std::nan("")
                                  : parse_double(t.rows[a][b + 1], "correlation");
    }
  }
  return out;
}

std::vector<KeyPointRow> key_point_profile(
    const std::vector<std::pair<std::string, std::vector<SimilarityField>>>& fields,
    const std::vector<LonLat>& points) {
  std::vector<KeyPointRow> out;
  for (const auto& [id, trajectory_fields] : fields) {
    for (const auto& p : points) {
      for (const auto& f : trajectory_fields) {
        const int pi = f.roi.index_of(p);
        if (pi < 0) {
          throw DomainError("key point (" + fmt_coord(p.lon) + ", " + fmt_coord(p.lat) +
                            ") outside the region of interest");
        }
        out.push_back({id, p, f.mode.name(), f.values[pi], f.defined[pi] == true});
      }
    }
  }
  return out;
}

void write_key_point_profile(const std::vector<KeyPointRow>& rows, const std::string& path,
                             const Provenance& prov) {
  Table t;
  t.provenance = prov;
  t.header = {"trajectory", "lon", "lat", "mode", "value", "defined"};
  for (const auto& r : rows) {
    t.rows.push_back({r.trajectory_id, fmt_coord(r.point.lon), fmt_coord(r.point.lat), r.mode,
                      r.defined ? fmt(r.value, 15) : "", r.defined ? "1" : "0"});
  }
  csvio::write(path, t);
}

std::vector<KeyPointRow> read_key_point_profile(const std::string& path) {
  const Table t = csvio::read(path);
  expect_header(t, {"trajectory", "lon", "lat", "mode", "value", "defined"}, path);
  std::vector<KeyPointRow> out;
  for (const auto& row : t.rows) {
    KeyPointRow r;
    r.trajectory_id = row[0];
    r.point = {parse_double(row[1], "lon"), parse_double(row[2], "lat")};
    r.mode = row[3];
    r.defined = row[5] == "1";
    r.value = r.defined ? parse_double(row[4], "value") : 0.0;
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<LonLat>& default_key_points() {
  static const std::vector<LonLat> pts = {
      {-8.75, 42.5}, {-3.75, 42.5}, {1.25, 42.5}, {-3.75, 40.0},
      {1.25, 40.0},  {-6.25, 37.5}, {-1.25, 37.5}};
  return pts;
}

}  // namespace wtsel
