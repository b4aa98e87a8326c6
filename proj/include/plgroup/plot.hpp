#pragma once

#include "plgroup/plmap.hpp"
#include "plgroup/rational.hpp"

#include <string>
#include <vector>

namespace plgroup {

enum class PlotFormat { SVG, TSV };

namespace detail {

// decimal rendering with a fixed number of fractional digits, for display only
inline std::string decimal_str(const Rational& r, int digits) {
  Integer num = numerator(r), den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  Integer whole = num / den, rem = num % den;
  std::string out = (neg ? "-" : "") + whole.str();
  if (digits <= 0) return out;
  out += '.';
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out += char('0' + (rem / den).convert_to<int>());
    rem %= den;
  }
  return out;
}

}  // namespace detail

/// TSV: one "name<TAB>x<TAB>y" row per vertex, exact rationals, so the maps
/// reconstruct bit-exactly. SVG: one polyline per map over the unit square;
/// SVG coordinates are 12-digit decimal approximations (display-only).
inline std::string plot_emit(const std::vector<std::pair<std::string, PLMap>>& maps,
                             PlotFormat format) {
  if (format == PlotFormat::TSV) {
    std::string out;
    for (const auto& [name, map] : maps)
      for (const auto& [x, y] : map.vertices())
        out += name + "\t" + rat_str(x) + "\t" + rat_str(y) + "\n";
    return out;
  }
  const int size = 480, margin = 40;
  const int total = size + 2 * margin;
  static const char* colors[] = {"#1f6fb2", "#b23d1f", "#2d8a46", "#8a2d86",
                                 "#b28a1f", "#1f9a96"};
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(total) +
         "\" height=\"" + std::to_string(total) + "\" viewBox=\"0 0 " +
         std::to_string(total) + " " + std::to_string(total) + "\">\n";
  out += "<!-- coordinates are 12-digit decimal approximations of exact rationals; "
         "use the TSV format for exact data -->\n";
  out += "<rect x=\"" + std::to_string(margin) + "\" y=\"" + std::to_string(margin) +
         "\" width=\"" + std::to_string(size) + "\" height=\"" + std::to_string(size) +
         "\" fill=\"white\" stroke=\"black\"/>\n";
  auto coord = [&](const Rational& v, bool flip) {
    Rational scaled = (flip ? 1 - v : v) * size + margin;
    return detail::decimal_str(scaled, 12);
  };
  int color = 0;
  for (const auto& [name, map] : maps) {
    out += "<polyline fill=\"none\" stroke=\"" + std::string(colors[color % 6]) +
           "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& [x, y] : map.vertices()) {
      if (!first) out += ' ';
      first = false;
      out += coord(x, false) + "," + coord(y, true);
    }
    out += "\"><title>" + name + "</title></polyline>\n";
    ++color;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace plgroup
