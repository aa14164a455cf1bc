#pragma once

// Nested fronts as SVG paths, innermost red through outermost green, with a
// legend of step times. Output depends only on the input (fixed number
// formatting, no timestamps), so identical runs give identical bytes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "firefront/error.hpp"
#include "firefront/geom.hpp"

namespace firefront::io {

struct SvgStyle {
  double panel_size = 600.0;  ///< px, square plotting area per panel
  double margin = 40.0;
  double stroke_width = 1.5;
  bool legend = true;
};

struct SvgPanel {
  std::string title;
  std::vector<FireFront> fronts;
};

namespace detail {

inline std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

inline std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Red (t = 0) to green (t = 1) through yellow.
inline std::string ramp_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const double r0 = 215, g0 = 25, b0 = 28, r1 = 255, g1 = 200, b1 = 60, r2 = 26, g2 = 150, b2 = 65;
  double r, g, b;
  if (t < 0.5) {
    const double u = t * 2;
    r = r0 + (r1 - r0) * u, g = g0 + (g1 - g0) * u, b = b0 + (b1 - b0) * u;
  } else {
    const double u = (t - 0.5) * 2;
    r = r1 + (r2 - r1) * u, g = g1 + (g2 - g1) * u, b = b1 + (b2 - b1) * u;
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(r)), static_cast<int>(std::lround(g)),
                static_cast<int>(std::lround(b)));
  return buf;
}

}  // namespace detail

/// Panels laid out left to right; each panel has its own extent.
inline std::string render_panels_svg(const std::vector<SvgPanel>& panels, const SvgStyle& style = {}) {
  if (panels.empty()) throw ValidationError("nothing to render: no panels");
  std::size_t max_fronts = 0;
  for (const auto& p : panels) {
    if (p.fronts.empty()) throw ValidationError("nothing to render: panel '" + p.title + "' has no fronts");
    max_fronts = std::max(max_fronts, p.fronts.size());
  }
  using detail::fmt;
  const double cell = style.panel_size + 2 * style.margin;
  const double legend_h = style.legend ? 22.0 * static_cast<double>(max_fronts) + 20.0 : 0.0;
  const double width = cell * static_cast<double>(panels.size());
  const double height = cell + legend_h;

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt("%.0f", width) + "\" height=\"" +
       fmt("%.0f", height) + "\" viewBox=\"0 0 " + fmt("%.0f", width) + " " + fmt("%.0f", height) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t pi = 0; pi < panels.size(); ++pi) {
    const auto& panel = panels[pi];
    const double ox = cell * static_cast<double>(pi);
    std::vector<Point2> all;
    for (const auto& f : panel.fronts) all.insert(all.end(), f.ring().begin(), f.ring().end());
    const Box box = bounding_box(all);
    const double span = std::max({box.hi.x - box.lo.x, box.hi.y - box.lo.y, 1e-9});
    const double scale = style.panel_size / span;
    const Point2 mid = 0.5 * (box.lo + box.hi);
    auto px = [&](Point2 p) {
      return Point2{ox + style.margin + style.panel_size / 2 + (p.x - mid.x) * scale,
                    style.margin + style.panel_size / 2 - (p.y - mid.y) * scale};
    };

    s += "<g id=\"panel-" + std::to_string(pi) + "\">\n";
    if (!panel.title.empty())
      s += "<text x=\"" + fmt("%.2f", ox + style.margin) + "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">" +
           detail::escape_xml(panel.title) + "</text>\n";
    const std::size_t n = panel.fronts.size();
    for (std::size_t k = n; k-- > 0;) {
      const std::string color = detail::ramp_color(n > 1 ? static_cast<double>(k) / static_cast<double>(n - 1) : 0.0);
      std::string d;
      const auto& ring = panel.fronts[k].ring();
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point2 q = px(ring[i]);
        d += (i ? " L" : "M") + fmt("%.2f", q.x) + "," + fmt("%.2f", q.y);
      }
      d += " Z";
      s += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
           fmt("%.2f", style.stroke_width) + "\" data-step=\"" + std::to_string(k) + "\"/>\n";
    }
    // Scale bar: a round length near a fifth of the panel.
    const double target = span / 5;
    const double p10 = std::pow(10.0, std::floor(std::log10(target)));
    const double bar = target / p10 >= 5 ? 5 * p10 : (target / p10 >= 2 ? 2 * p10 : p10);
    const double bx = ox + style.margin, by = style.margin + style.panel_size + 20;
    s += "<line x1=\"" + fmt("%.2f", bx) + "\" y1=\"" + fmt("%.2f", by) + "\" x2=\"" + fmt("%.2f", bx + bar * scale) +
         "\" y2=\"" + fmt("%.2f", by) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + fmt("%.2f", bx) + "\" y=\"" + fmt("%.2f", by + 14) +
         "\" font-family=\"sans-serif\" font-size=\"12\">" + fmt("%g", bar) + " m</text>\n";

    if (style.legend) {
      const double lx = ox + style.margin, ly0 = cell + 4;
      for (std::size_t k = 0; k < n; ++k) {
        const double ly = ly0 + 22.0 * static_cast<double>(k);
        const std::string color = detail::ramp_color(n > 1 ? static_cast<double>(k) / static_cast<double>(n - 1) : 0.0);
        s += "<rect x=\"" + fmt("%.2f", lx) + "\" y=\"" + fmt("%.2f", ly) + "\" width=\"14\" height=\"14\" fill=\"" +
             color + "\"/>\n";
        s += "<text x=\"" + fmt("%.2f", lx + 20) + "\" y=\"" + fmt("%.2f", ly + 12) +
             "\" font-family=\"sans-serif\" font-size=\"12\">step " + std::to_string(k) + ": t = " +
             fmt("%.1f", panel.fronts[k].time()) + " min</text>\n";
      }
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

inline std::string render_fronts_svg(const std::vector<FireFront>& fronts, const SvgStyle& style = {},
                                     const std::string& title = {}) {
  return render_panels_svg({SvgPanel{title, fronts}}, style);
}

}  // namespace firefront::io
