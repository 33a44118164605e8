#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wtsel {

/// Thrown for domain/validation failures (bad indices, malformed input, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kNumWeatherTypes = 27;

/// One of the 27 canonical circulation categories.
/// Index order is fixed: PA=1, DANE..DAN=2..9, PDNE..PDN=10..17, PC=18,
/// DCNE..DCN=19..26, U=27.
struct WeatherType {
  int index = 0;  // 1..27

  std::string_view code() const;

  friend bool operator==(WeatherType a, WeatherType b) { return a.index == b.index; }
  friend auto operator<=>(WeatherType a, WeatherType b) { return a.index <=> b.index; }
};

/// index 1..27 -> WeatherType; throws DomainError otherwise.
WeatherType wt_from_index(int index);
/// code ("PA".."U") -> WeatherType; throws DomainError for unknown codes.
WeatherType wt_from_code(std::string_view code);

/// All 27 types in canonical order.
const std::vector<WeatherType>& all_weather_types();

struct LonLat {
  double lon = 0.0;
  double lat = 0.0;

  friend bool operator==(const LonLat&, const LonLat&) = default;
  friend auto operator<=>(const LonLat&, const LonLat&) = default;
};

/// Regular lon/lat lattice with uniform spacing on both axes.
struct GridSpec {
  std::vector<double> lon_values;  // ascending
  std::vector<double> lat_values;  // ascending
  double spacing = 2.5;            // degrees, both axes

  /// Validates monotonicity and uniform spacing (1e-9 tolerance).
  static GridSpec create(std::vector<double> lons, std::vector<double> lats);

  /// Index of a value on an axis, matching to 1e-6 degrees; -1 if absent.
  static int axis_index(const std::vector<double>& axis, double value);

  bool contains(const LonLat& p) const;
};

/// Ordered set of grid points defining the evaluation region.
struct RegionOfInterest {
  std::vector<LonLat> points;

  std::size_t size() const { return points.size(); }

  /// Throws on duplicates or points off the parent grid.
  static RegionOfInterest create(std::vector<LonLat> pts, const GridSpec& grid);
  /// Unvalidated construction for ROIs loaded from files (still checks duplicates).
  static RegionOfInterest from_points(std::vector<LonLat> pts);

  /// Index of p in the point list (match to 1e-6 degrees); -1 if absent.
  int index_of(const LonLat& p) const;

  /// 6 longitudes x 5 latitudes = 30 points, 35..45N, 8.75W..3.75E.
  static RegionOfInterest iberia();
};

/// Proleptic-Gregorian calendar date, no time of day.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  /// Days since 1970-01-01 (negative before).
  std::int64_t serial() const;
  static Date from_serial(std::int64_t days);

  /// Parses strict ISO-8601 "YYYY-MM-DD"; throws DomainError.
  static Date parse(std::string_view iso);
  std::string iso() const;

  static bool valid(int y, int m, int d);

  friend bool operator==(const Date&, const Date&) = default;
  friend auto operator<=>(const Date& a, const Date& b) {
    return a.serial() <=> b.serial();
  }
};

/// Month subset and year range selecting the analyzed days.
struct SeasonWindow {
  std::set<int> months = {6, 7, 8, 9};
  int first_year = 1979;
  int last_year = 2005;

  static SeasonWindow create(std::set<int> months, int first_year, int last_year);

  bool contains(const Date& d) const;
};

/// Daily weather-type record for one trajectory over a set of grid points.
/// values are row-major: values[date_idx * points.size() + point_idx].
struct WtSeries {
  std::string trajectory_id;
  std::vector<LonLat> points;
  std::vector<Date> dates;           // strictly increasing
  std::vector<std::uint8_t> values;  // WT indices 1..27

  std::uint8_t at(std::size_t date_idx, std::size_t point_idx) const {
    return values[date_idx * points.size() + point_idx];
  }
  std::uint8_t& at(std::size_t date_idx, std::size_t point_idx) {
    return values[date_idx * points.size() + point_idx];
  }

  /// Checks date ordering, cell count, and WT validity; throws DomainError.
  void validate() const;
};

/// Sub-series containing exactly the in-window days, order preserved.
/// Throws DomainError("no in-window data") when nothing remains.
WtSeries season_mask(const WtSeries& series, const SeasonWindow& window);

}  // namespace wtsel
