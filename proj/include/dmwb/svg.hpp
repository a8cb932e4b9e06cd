#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <string>

#include "dmwb/arrangement.hpp"
#include "dmwb/lattice_params.hpp"

namespace dmwb {

namespace detail {

struct XY {
  double x, y;
};

inline std::string order_label(const ExtOrder& n) {
  return n.is_infinite() ? "∞" : n.str();
}

inline const char* order_class(const ExtOrder& n) {
  return n.is_negative() ? "collapsed" : "regular";
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

} // namespace detail

/// Schematic picture of the weighted arrangement: the six lines joining the
/// four blow-up centers, a circle per exceptional divisor, every element
/// labeled with its ramification order.  Fixed 800x800 viewbox; incidence and
/// labels are the content, the metric is not.
inline void write_arrangement_svg(std::ostream& out, const LatticeSpec& spec) {
  using detail::XY;
  const WeightAssignment w = weights_from_spec(spec);

  // blow-up centers E0..E3, in general position (no three collinear)
  const std::array<XY, 4> centers = {XY{400, 470}, XY{150, 650}, XY{650, 650}, XY{400, 135}};

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" "
         "width=\"800\" height=\"800\">\n";
  out << "  <title>ramification orders for " << spec.str() << "</title>\n";
  out << "  <style>\n"
         "    line.regular { stroke: #1f3a5f; stroke-width: 2; }\n"
         "    line.collapsed { stroke: #b2182b; stroke-width: 2; stroke-dasharray: 8 5; }\n"
         "    circle.regular { stroke: #1f3a5f; stroke-width: 2; fill: none; }\n"
         "    circle.collapsed { stroke: #b2182b; stroke-width: 2; fill: none; "
         "stroke-dasharray: 8 5; }\n"
         "    text { font-family: sans-serif; font-size: 20px; fill: #111111; }\n"
         "    text.collapsed { fill: #b2182b; }\n"
         "  </style>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";

  // six lines: the join of centers {g, d} is the proper transform D_ab with
  // {a,b} the complementary index pair
  for (int g = 0; g < 4; ++g) {
    for (int d = g + 1; d < 4; ++d) {
      std::array<int, 2> comp{};
      int n = 0;
      for (int i = 0; i < 4; ++i)
        if (i != g && i != d) comp[n++] = i;
      DivisorId id = line_divisor(comp[0], comp[1]);
      const ExtOrder& order = w.branched.at(id);

      const XY a = centers[g], b = centers[d];
      const double ext = 0.35;
      XY p0{a.x - ext * (b.x - a.x), a.y - ext * (b.y - a.y)};
      XY p1{b.x + ext * (b.x - a.x), b.y + ext * (b.y - a.y)};
      out << "  <line class=\"" << detail::order_class(order) << "\" x1=\"" << detail::fmt(p0.x)
          << "\" y1=\"" << detail::fmt(p0.y) << "\" x2=\"" << detail::fmt(p1.x) << "\" y2=\""
          << detail::fmt(p1.y) << "\"/>\n";

      // label off the midpoint, shifted along the normal
      double mx = (a.x + b.x) / 2, my = (a.y + b.y) / 2;
      double nx = -(b.y - a.y), ny = b.x - a.x;
      double len = std::sqrt(nx * nx + ny * ny);
      nx = nx / len * 18;
      ny = ny / len * 18;
      out << "  <text class=\"" << detail::order_class(order) << "\" x=\""
          << detail::fmt(mx + nx) << "\" y=\"" << detail::fmt(my + ny) << "\">"
          << divisor_name(id) << ": " << detail::order_label(order) << "</text>\n";
    }
  }

  // blow-up circles
  for (int b = 0; b < 4; ++b) {
    DivisorId id = exceptional_divisor(b);
    const ExtOrder& order = w.branched.at(id);
    const XY c = centers[b];
    out << "  <circle class=\"" << detail::order_class(order) << "\" cx=\"" << detail::fmt(c.x)
        << "\" cy=\"" << detail::fmt(c.y) << "\" r=\"30\"/>\n";
    out << "  <text class=\"" << detail::order_class(order) << "\" x=\"" << detail::fmt(c.x + 34)
        << "\" y=\"" << detail::fmt(c.y - 12) << "\">" << divisor_name(id) << ": "
        << detail::order_label(order) << "</text>\n";
  }

  out << "</svg>\n";
}

} // namespace dmwb
