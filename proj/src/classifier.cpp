#include "wtsel/classifier.hpp"

#include <cmath>
#include <string>

namespace wtsel {

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

constexpr std::array<std::string_view, 8> kDirCodes = {"N", "NE", "E", "SE",
                                                       "S", "SW", "W", "NW"};

WeatherType directional_type(const char* prefix, int sector) {
  return wt_from_code(std::string(prefix) + std::string(kDirCodes[sector]));
}

}  // namespace

void SlpField::validate() const {
  if (pressure.size() != dates.size() * ncells()) {
    throw DomainError("SLP field cell count mismatch");
  }
  for (double p : pressure) {
    if (!std::isfinite(p) || p < 870.0 || p > 1090.0) {
      throw DomainError("SLP value outside plausible range 870..1090 hPa: " +
                        std::to_string(p));
    }
  }
}

// Layout (lon offset, lat offset), rows north to south:
//            p1  p2              +2*dlat
//   p3   p4  p5  p6              +dlat
//   p7   p8  p9  p10              0
//   p11  p12 p13 p14             -dlat
//            p15 p16             -2*dlat
// with lon offsets +/-dlon/2 (inner) and +/-3*dlon/2 (outer).
CrossStencil CrossStencil::around(const LonLat& center, const ClassifierConfig& cfg) {
  const double hx = cfg.lon_span / 2.0;
  const double wx = 3.0 * cfg.lon_span / 2.0;
  const double dy = cfg.lat_span;
  CrossStencil st;
  st.center = center;
  st.lon_span = cfg.lon_span;
  st.lat_span = cfg.lat_span;
  st.offsets = {{{-hx, 2 * dy}, {hx, 2 * dy},
                 {-wx, dy},     {-hx, dy},  {hx, dy},  {wx, dy},
                 {-wx, 0},      {-hx, 0},   {hx, 0},   {wx, 0},
                 {-wx, -dy},    {-hx, -dy}, {hx, -dy}, {wx, -dy},
                 {-hx, -2 * dy}, {hx, -2 * dy}}};
  return st;
}

FlowIndices compute_flow_indices(const SlpField& field, std::size_t date_idx,
                                 const CrossStencil& st) {
  std::array<double, 16> p{};
  for (int i = 0; i < 16; ++i) {
    const double lon = st.center.lon + st.offsets[i].lon;
    const double lat = st.center.lat + st.offsets[i].lat;
    const int li = GridSpec::axis_index(field.grid.lon_values, lon);
    const int la = GridSpec::axis_index(field.grid.lat_values, lat);
    if (li < 0 || la < 0) {
      throw DomainError("stencil out of bounds: point (" + std::to_string(lon) + ", " +
                        std::to_string(lat) + ") not on grid");
    }
    p[i] = field.at(date_idx, li, la);
  }
  // 1-based stencil-point indices for readability below.
  auto P = [&](int i) { return p[i - 1]; };

  const double phi = st.center.lat * kDegToRad;
  const double dphi = st.lat_span * kDegToRad;
  const double cs = std::cos(phi);
  const double zw_south = std::sin(phi) / std::sin(phi - dphi);
  const double zw_north = std::sin(phi) / std::sin(phi + dphi);
  const double zs_coef = 1.0 / (2.0 * cs * cs);

  FlowIndices idx;
  idx.W = 0.5 * (P(12) + P(13)) - 0.5 * (P(4) + P(5));
  idx.S = (1.0 / cs) * (0.25 * (P(5) + 2 * P(9) + P(13)) - 0.25 * (P(4) + 2 * P(8) + P(12)));
  idx.ZW = zw_south * (0.5 * (P(15) + P(16)) - 0.5 * (P(8) + P(9))) -
           zw_north * (0.5 * (P(8) + P(9)) - 0.5 * (P(1) + P(2)));
  idx.ZS = zs_coef * (0.25 * (P(6) + 2 * P(10) + P(14)) - 0.25 * (P(5) + 2 * P(9) + P(13)) -
                      0.25 * (P(4) + 2 * P(8) + P(12)) + 0.25 * (P(3) + 2 * P(7) + P(11)));
  idx.F = std::hypot(idx.W, idx.S);
  idx.Z = idx.ZW + idx.ZS;
  return idx;
}

double flow_direction_from(double W, double S) {
  // atan2(W, S) is the direction the flow goes to, clockwise from north;
  // +180 converts to the meteorological "from" direction.
  double deg = std::atan2(W, S) / kDegToRad + 180.0;
  deg = std::fmod(deg, 360.0);
  if (deg < 0) deg += 360.0;
  return deg;
}

int direction_sector(double dir) {
  return static_cast<int>(std::floor(std::fmod(dir + 22.5, 360.0) / 45.0)) % 8;
}

WeatherType classify_day(const FlowIndices& idx, const ClassifierConfig& cfg) {
  if (!std::isfinite(idx.W) || !std::isfinite(idx.S) || !std::isfinite(idx.Z)) {
    throw DomainError("non-finite flow indices");
  }
  const double F = idx.F;
  const double aZ = std::abs(idx.Z);
  if (F < cfg.u_flow && aZ < cfg.u_vort) return wt_from_code("U");
  if (aZ < F) {
    return directional_type("PD", direction_sector(flow_direction_from(idx.W, idx.S)));
  }
  if (aZ > 2 * F) return wt_from_code(idx.Z > 0 ? "PC" : "PA");
  // F <= |Z| <= 2F, boundary ties included: hybrid.
  const int sec = direction_sector(flow_direction_from(idx.W, idx.S));
  return directional_type(idx.Z > 0 ? "DC" : "DA", sec);
}

WtSeries classify_series(const SlpField& field, const RegionOfInterest& roi,
                         const ClassifierConfig& cfg, const std::string& trajectory_id) {
  WtSeries out;
  out.trajectory_id = trajectory_id;
  out.points = roi.points;
  out.dates = field.dates;
  out.values.resize(field.dates.size() * roi.points.size());
  std::vector<CrossStencil> stencils;
  stencils.reserve(roi.points.size());
  for (const auto& p : roi.points) stencils.push_back(CrossStencil::around(p, cfg));

  for (std::size_t di = 0; di < field.dates.size(); ++di) {
    for (std::size_t pi = 0; pi < roi.points.size(); ++pi) {
      try {
        const FlowIndices idx = compute_flow_indices(field, di, stencils[pi]);
        out.at(di, pi) = static_cast<std::uint8_t>(classify_day(idx, cfg).index);
      } catch (const DomainError& e) {
        throw DomainError(std::string(e.what()) + " [date " + field.dates[di].iso() +
                          ", point (" + std::to_string(roi.points[pi].lon) + ", " +
                          std::to_string(roi.points[pi].lat) + ")]");
      }
    }
  }
  return out;
}

}  // namespace wtsel
