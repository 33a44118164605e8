#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "wtsel/io.hpp"

namespace wtsel {

namespace {

constexpr double kCell = 64.0;  // pixels per grid cell
constexpr double kPad = 40.0;

struct Layout {
  std::vector<double> lons;  // ascending distinct
  std::vector<double> lats;
  double width = 0;
  double height = 0;

  explicit Layout(const RegionOfInterest& roi) {
    std::set<double> lon_set, lat_set;
    for (const auto& p : roi.points) {
      lon_set.insert(p.lon);
      lat_set.insert(p.lat);
    }
    lons.assign(lon_set.begin(), lon_set.end());
    lats.assign(lat_set.begin(), lat_set.end());
    width = 2 * kPad + kCell * static_cast<double>(lons.size());
    height = 2 * kPad + kCell * static_cast<double>(lats.size());
  }

  // Cell top-left; latitude grows upward on the page.
  std::pair<double, double> cell_origin(const LonLat& p) const {
    const auto xi = std::lower_bound(lons.begin(), lons.end(), p.lon - 1e-9) - lons.begin();
    const auto yi = std::lower_bound(lats.begin(), lats.end(), p.lat - 1e-9) - lats.begin();
    return {kPad + kCell * static_cast<double>(xi),
            kPad + kCell * static_cast<double>(lats.size() - 1 - yi)};
  }
};

std::string num(double v) { return csvio::fmt(v, 2); }

// Blue (0) -> white (0.5) -> red (1), endpoints pinned to [0,1].
std::string value_color(double v) {
  v = std::clamp(v, 0.0, 1.0);
  auto channel = [](double x) {
    return static_cast<int>(std::lround(std::clamp(x, 0.0, 1.0) * 255.0));
  };
  double r, g, b;
  if (v < 0.5) {
    const double t = v / 0.5;
    r = 0.2 + 0.8 * t;
    g = 0.35 + 0.65 * t;
    b = 1.0;
  } else {
    const double t = (v - 0.5) / 0.5;
    r = 1.0;
    g = 1.0 - 0.65 * t;
    b = 1.0 - 0.8 * t;
  }
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", channel(r), channel(g), channel(b));
  return buf;
}

// Deterministic categorical palette keyed by name hash.
std::string label_color(const std::string& name) {
  std::uint32_t h = 2166136261u;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 16777619u;
  static const char* palette[] = {"#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2",
                                  "#b279a2", "#ff9da6", "#9d755d", "#bab0ac", "#eeca3b"};
  return palette[h % 10];
}

void svg_open(std::ofstream& out, const Layout& layout, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(layout.width)
      << "\" height=\"" << num(layout.height) << "\" viewBox=\"0 0 " << num(layout.width) << " "
      << num(layout.height) << "\">\n";
  out << "<title>" << title << "</title>\n";
}

}  // namespace

void emit_heatmap(const SimilarityField& field, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  const Layout layout(field.roi);
  svg_open(out, layout, metric_name(field.metric) + " " + field.mode.name());
  for (std::size_t pi = 0; pi < field.roi.size(); ++pi) {
    const auto [x, y] = layout.cell_origin(field.roi.points[pi]);
    const std::string fill = field.defined[pi] ? value_color(field.values[pi]) : "#dddddd";
    out << "<rect class=\"cell\" x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
        << num(kCell) << "\" height=\"" << num(kCell) << "\" fill=\"" << fill
        << "\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << num(x + kCell / 2) << "\" y=\"" << num(y + kCell / 2 + 4)
        << "\" font-size=\"12\" text-anchor=\"middle\">"
        << (field.defined[pi] ? csvio::fmt(field.values[pi], 3) : "n/a") << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw DomainError("write failed: " + path);
}

void emit_heatmap(const WinnerMap& map, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  const Layout layout(map.roi);
  svg_open(out, layout, "winner " + map.mode);
  for (std::size_t pi = 0; pi < map.roi.size(); ++pi) {
    const auto [x, y] = layout.cell_origin(map.roi.points[pi]);
    const bool has = !map.winner[pi].empty();
    out << "<rect class=\"cell\" x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
        << num(kCell) << "\" height=\"" << num(kCell) << "\" fill=\""
        << (has ? label_color(map.winner[pi]) : "#dddddd") << "\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << num(x + kCell / 2) << "\" y=\"" << num(y + kCell / 2 + 4)
        << "\" font-size=\"9\" text-anchor=\"middle\">" << (has ? map.winner[pi] : "none")
        << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw DomainError("write failed: " + path);
}

}  // namespace wtsel
