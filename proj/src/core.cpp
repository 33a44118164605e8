#include "wtsel/core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace wtsel {

namespace {

constexpr std::array<std::string_view, kNumWeatherTypes> kCodes = {
    "PA",   "DANE", "DAE",  "DASE", "DAS",  "DASW", "DAW",  "DANW", "DAN",
    "PDNE", "PDE",  "PDSE", "PDS",  "PDSW", "PDW",  "PDNW", "PDN",  "PC",
    "DCNE", "DCE",  "DCSE", "DCS",  "DCSW", "DCW",  "DCNW", "DCN",  "U"};

constexpr double kCoordTol = 1e-6;

bool coord_eq(double a, double b) { return std::abs(a - b) <= kCoordTol; }

}  // namespace

std::string_view WeatherType::code() const { return kCodes[index - 1]; }

WeatherType wt_from_index(int index) {
  if (index < 1 || index > kNumWeatherTypes) {
    throw DomainError("weather-type index out of range 1..27: " + std::to_string(index));
  }
  return WeatherType{index};
}

WeatherType wt_from_code(std::string_view code) {
  for (int i = 0; i < kNumWeatherTypes; ++i) {
    if (kCodes[i] == code) return WeatherType{i + 1};
  }
  throw DomainError("unknown weather-type code: " + std::string(code));
}

const std::vector<WeatherType>& all_weather_types() {
  static const std::vector<WeatherType> all = [] {
    std::vector<WeatherType> v;
    for (int i = 1; i <= kNumWeatherTypes; ++i) v.push_back(WeatherType{i});
    return v;
  }();
  return all;
}

GridSpec GridSpec::create(std::vector<double> lons, std::vector<double> lats) {
  auto check_axis = [](const std::vector<double>& axis, const char* name) -> double {
    if (axis.size() < 2) throw DomainError(std::string(name) + " axis needs >= 2 values");
    for (double v : axis) {
      if (!std::isfinite(v)) throw DomainError(std::string(name) + " axis has non-finite value");
    }
    double step = axis[1] - axis[0];
    if (step <= 0) throw DomainError(std::string(name) + " axis not ascending");
    for (std::size_t i = 1; i < axis.size(); ++i) {
      if (std::abs((axis[i] - axis[i - 1]) - step) > 1e-9) {
        throw DomainError(std::string(name) + " axis spacing not uniform");
      }
    }
    return step;
  };
  double dlon = check_axis(lons, "lon");
  double dlat = check_axis(lats, "lat");
  if (std::abs(dlon - dlat) > 1e-9) throw DomainError("lon/lat spacing differ");
  GridSpec g;
  g.lon_values = std::move(lons);
  g.lat_values = std::move(lats);
  g.spacing = dlon;
  return g;
}

int GridSpec::axis_index(const std::vector<double>& axis, double value) {
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (coord_eq(axis[i], value)) return static_cast<int>(i);
  }
  return -1;
}

bool GridSpec::contains(const LonLat& p) const {
  return axis_index(lon_values, p.lon) >= 0 && axis_index(lat_values, p.lat) >= 0;
}

RegionOfInterest RegionOfInterest::from_points(std::vector<LonLat> pts) {
  if (pts.empty()) throw DomainError("region of interest is empty");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (coord_eq(pts[i].lon, pts[j].lon) && coord_eq(pts[i].lat, pts[j].lat)) {
        throw DomainError("duplicate point in region of interest");
      }
    }
  }
  RegionOfInterest roi;
  roi.points = std::move(pts);
  return roi;
}

RegionOfInterest RegionOfInterest::create(std::vector<LonLat> pts, const GridSpec& grid) {
  for (const auto& p : pts) {
    if (!grid.contains(p)) {
      throw DomainError("region point off grid: (" + std::to_string(p.lon) + ", " +
                        std::to_string(p.lat) + ")");
    }
  }
  return from_points(std::move(pts));
}

int RegionOfInterest::index_of(const LonLat& p) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (coord_eq(points[i].lon, p.lon) && coord_eq(points[i].lat, p.lat)) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

RegionOfInterest RegionOfInterest::iberia() {
  std::vector<LonLat> pts;
  for (double lat = 35.0; lat <= 45.0 + 1e-9; lat += 2.5) {
    for (double lon = -8.75; lon <= 3.75 + 1e-9; lon += 2.5) {
      pts.push_back({lon, lat});
    }
  }
  return from_points(std::move(pts));
}

// Civil-date <-> serial-day conversion (Howard Hinnant's algorithms).
std::int64_t Date::serial() const {
  std::int64_t y = year;
  unsigned m = static_cast<unsigned>(month);
  unsigned d = static_cast<unsigned>(day);
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

Date Date::from_serial(std::int64_t days) {
  days += 719468;
  const std::int64_t era = (days >= 0 ? days : days - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(days - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

bool Date::valid(int y, int m, int d) {
  if (m < 1 || m > 12 || d < 1) return false;
  static constexpr int days_in[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int dim = days_in[m - 1];
  bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  if (m == 2 && leap) dim = 29;
  return d <= dim;
}

Date Date::parse(std::string_view iso) {
  int y = 0, m = 0, d = 0;
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (iso.size() == 10 && iso[4] == '-' && iso[7] == '-' &&
      all_digits(iso.substr(0, 4)) && all_digits(iso.substr(5, 2)) && all_digits(iso.substr(8, 2))) {
    y = std::stoi(std::string(iso.substr(0, 4)));
    m = std::stoi(std::string(iso.substr(5, 2)));
    d = std::stoi(std::string(iso.substr(8, 2)));
    if (valid(y, m, d)) return Date{y, m, d};
  }
  throw DomainError("malformed date (expected YYYY-MM-DD): " + std::string(iso));
}

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

SeasonWindow SeasonWindow::create(std::set<int> months, int first_year, int last_year) {
  if (months.empty()) throw DomainError("season window has empty month set");
  for (int m : months) {
    if (m < 1 || m > 12) throw DomainError("invalid month in season window: " + std::to_string(m));
  }
  if (first_year > last_year) throw DomainError("season window first year > last year");
  return SeasonWindow{std::move(months), first_year, last_year};
}

bool SeasonWindow::contains(const Date& d) const {
  return d.year >= first_year && d.year <= last_year && months.count(d.month) > 0;
}

void WtSeries::validate() const {
  if (points.empty()) throw DomainError("series has no grid points");
  if (dates.empty()) throw DomainError("series has no dates");
  if (values.size() != dates.size() * points.size()) {
    throw DomainError("series cell count mismatch: expected " +
                      std::to_string(dates.size() * points.size()) + ", got " +
                      std::to_string(values.size()));
  }
  for (std::size_t i = 1; i < dates.size(); ++i) {
    if (!(dates[i - 1] < dates[i])) throw DomainError("series dates not strictly increasing");
  }
  for (std::uint8_t v : values) {
    if (v < 1 || v > kNumWeatherTypes) {
      throw DomainError("series contains invalid weather-type index " + std::to_string(int(v)));
    }
  }
}

WtSeries season_mask(const WtSeries& series, const SeasonWindow& window) {
  WtSeries out;
  out.trajectory_id = series.trajectory_id;
  out.points = series.points;
  const std::size_t np = series.points.size();
  for (std::size_t di = 0; di < series.dates.size(); ++di) {
    if (!window.contains(series.dates[di])) continue;
    out.dates.push_back(series.dates[di]);
    for (std::size_t pi = 0; pi < np; ++pi) out.values.push_back(series.at(di, pi));
  }
  if (out.dates.empty()) throw DomainError("no in-window data");
  return out;
}

}  // namespace wtsel
