#pragma once

#include <array>
#include <vector>

#include "wtsel/core.hpp"

namespace wtsel {

/// Daily sea-level pressure on a regular grid, hPa.
struct SlpField {
  GridSpec grid;
  std::vector<Date> dates;
  // row-major: pressure[date_idx * ncells + lat_idx * nlon + lon_idx]
  std::vector<double> pressure;

  std::size_t ncells() const { return grid.lon_values.size() * grid.lat_values.size(); }
  double at(std::size_t date_idx, int lon_idx, int lat_idx) const {
    return pressure[date_idx * ncells() +
                    static_cast<std::size_t>(lat_idx) * grid.lon_values.size() + lon_idx];
  }

  /// Checks coverage and the 870..1090 hPa plausibility screen.
  void validate() const;
};

/// Classifier tuning: stencil footprint and weak-flow thresholds.
struct ClassifierConfig {
  double lon_span = 10.0;  // degrees, stencil half-width unit on the lon axis
  double lat_span = 5.0;   // degrees, row separation on the lat axis
  double u_flow = 6.0;     // total-flow threshold below which flow is weak
  double u_vort = 6.0;     // |Z| threshold below which vorticity is weak
};

/// 16-point cross of (dlon, dlat) offsets around a target point.
struct CrossStencil {
  LonLat center;
  std::array<LonLat, 16> offsets;  // relative degrees
  double lon_span = 10.0;
  double lat_span = 5.0;

  static CrossStencil around(const LonLat& center, const ClassifierConfig& cfg);
};

/// Geostrophic flow and vorticity indices of the JC scheme.
struct FlowIndices {
  double W = 0;   // westerly flow
  double S = 0;   // southerly flow
  double F = 0;   // total flow, sqrt(W^2 + S^2)
  double ZW = 0;  // westerly shear vorticity
  double ZS = 0;  // southerly shear vorticity
  double Z = 0;   // total vorticity, ZW + ZS
};

/// Finite-difference flow/vorticity indices at one date and stencil.
/// Throws DomainError naming the missing point if the stencil leaves the grid.
FlowIndices compute_flow_indices(const SlpField& field, std::size_t date_idx,
                                 const CrossStencil& stencil);

/// JC decision rules: weak flow -> U; |Z| < F -> pure directional;
/// |Z| > 2F -> pure C/A; F <= |Z| <= 2F -> hybrid.
WeatherType classify_day(const FlowIndices& idx, const ClassifierConfig& cfg);

/// One WeatherType per (date, ROI point); pointwise and per-day independent.
WtSeries classify_series(const SlpField& field, const RegionOfInterest& roi,
                         const ClassifierConfig& cfg, const std::string& trajectory_id);

/// Flow direction "from", degrees clockwise from north in [0, 360).
double flow_direction_from(double W, double S);

/// 0=N 1=NE 2=E 3=SE 4=S 5=SW 6=W 7=NW; boundary angles go to the
/// clockwise-next sector.
int direction_sector(double direction_from_deg);

}  // namespace wtsel
