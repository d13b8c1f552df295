#include "cogassess/plot.hpp"

#include "cogassess/geometry_oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cogassess {

namespace {

constexpr double kWidth = 640, kHeight = 400, kMargin = 50;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
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

/// Maps data coordinates onto the plot area; y grows upward.
struct Frame {
  double x_max;
  double y_max;
  double px(double x) const { return kMargin + x / x_max * (kWidth - 2 * kMargin); }
  double py(double y) const { return kHeight - kMargin - y / y_max * (kHeight - 2 * kMargin); }
};

void open_svg(std::ostringstream& out, const std::string& title, const Frame& f) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<title>" << escape(title) << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line class=\"axis\" x1=\"" << num(f.px(0)) << "\" y1=\"" << num(f.py(0)) << "\" x2=\""
      << num(f.px(f.x_max)) << "\" y2=\"" << num(f.py(0)) << "\" stroke=\"black\"/>\n";
  out << "<line class=\"axis\" x1=\"" << num(f.px(0)) << "\" y1=\"" << num(f.py(0)) << "\" x2=\""
      << num(f.px(0)) << "\" y2=\"" << num(f.py(f.y_max)) << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << escape(title) << "</text>\n";
}

PlotOutput bars(const std::vector<Bar<double>>& bars, const std::vector<std::string>& labels,
                const std::string& title, bool mark_shared) {
  double x_max = 0.0, y_max = 0.0;
  for (const auto& b : bars) {
    x_max = std::max(x_max, b.hi);
    y_max = std::max(y_max, b.height);
  }
  const Frame f{x_max, y_max > 0 ? y_max * 1.1 : 1.0};

  std::ostringstream svg, csv;
  open_svg(svg, title, f);
  csv << "grade,lo,hi,height\n";
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const auto& b = bars[i];
    const std::string& label = i < labels.size() ? labels[i] : std::to_string(i + 1);
    svg << "<rect class=\"bar\" data-grade=\"" << escape(label) << "\" data-lo=\"" << num(b.lo)
        << "\" data-hi=\"" << num(b.hi) << "\" x=\"" << num(f.px(b.lo)) << "\" y=\""
        << num(f.py(b.height)) << "\" width=\"" << num(f.px(b.hi) - f.px(b.lo)) << "\" height=\""
        << num(f.py(0) - f.py(b.height))
        << "\" fill=\"steelblue\" fill-opacity=\"0.6\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(f.px((b.lo + b.hi) / 2)) << "\" y=\"" << num(f.py(0) + 18)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << escape(label) << "</text>\n";
    csv << label << ',' << num(b.lo) << ',' << num(b.hi) << ',' << num(b.height) << '\n';
  }
  if (mark_shared) {
    // Shared ground of adjacent bars, up to the lower of the two heights.
    for (std::size_t i = 0; i + 1 < bars.size(); ++i) {
      const double lo = bars[i + 1].lo, hi = bars[i].hi;
      const double h = std::min(bars[i].height, bars[i + 1].height);
      if (hi <= lo || h <= 0) continue;
      svg << "<rect class=\"shared\" x=\"" << num(f.px(lo)) << "\" y=\"" << num(f.py(h))
          << "\" width=\"" << num(f.px(hi) - f.px(lo)) << "\" height=\"" << num(f.py(0) - f.py(h))
          << "\" fill=\"darkorange\" fill-opacity=\"0.7\"/>\n";
    }
  }
  svg << "</svg>\n";
  return {svg.str(), csv.str()};
}

PlotOutput triangle(const Distribution& d, const ModelConfig& cfg, const std::string& title) {
  const TriangleFrame<double> t = triangle_frame(cfg);
  const CogPoint<double> c = overlapping_cog(d, cfg);
  const Frame f{figure_extent(cfg), cfg.a * 1.2};

  std::ostringstream svg, csv;
  open_svg(svg, title, f);
  svg << "<polygon class=\"triangle\" points=\"";
  for (const auto& p : {t.worst, t.balanced, t.ideal}) svg << num(f.px(p.xc)) << ',' << num(f.py(p.yc)) << ' ';
  svg << "\" fill=\"lightgray\" stroke=\"black\"/>\n";
  auto point = [&](const char* cls, const char* name, const CogPoint<double>& p, const char* color) {
    svg << "<circle class=\"" << cls << "\" data-xc=\"" << num(p.xc) << "\" data-yc=\"" << num(p.yc)
        << "\" cx=\"" << num(f.px(p.xc)) << "\" cy=\"" << num(f.py(p.yc)) << "\" r=\"4\" fill=\""
        << color << "\"/>\n";
    svg << "<text x=\"" << num(f.px(p.xc) + 6) << "\" y=\"" << num(f.py(p.yc) - 6)
        << "\" font-size=\"12\">" << name << " (" << num(p.xc) << ", " << num(p.yc) << ")</text>\n";
    csv << name << ',' << num(p.xc) << ',' << num(p.yc) << '\n';
  };
  csv << "point,xc,yc\n";
  point("vertex", "Fw", t.worst, "black");
  point("vertex", "Fm", t.balanced, "black");
  point("vertex", "Fi", t.ideal, "black");
  point("cog", "F", c, "crimson");
  svg << "</svg>\n";
  return {svg.str(), csv.str()};
}

}  // namespace

PlotKind parse_plot_kind(std::string_view name) {
  if (name == "bars-rm") return PlotKind::BarsRm;
  if (name == "bars-grm") return PlotKind::BarsGrm;
  if (name == "triangle") return PlotKind::Triangle;
  throw InputError("unknown plot kind '" + std::string(name) + "'");
}

PlotOutput render_plot(PlotKind kind, const Distribution& d, const ModelConfig& cfg,
                       const std::vector<std::string>& labels, const std::string& title) {
  switch (kind) {
    case PlotKind::BarsRm:
      return bars(rm_bars(d, cfg.b), labels, title, false);
    case PlotKind::BarsGrm: {
      ModelConfig grm = cfg;
      grm.variant = Variant::Grm;
      return bars(grm_bars(d, grm), labels, title, true);
    }
    case PlotKind::Triangle:
      return triangle(d, cfg, title);
  }
  throw InputError("unknown plot kind");
}

}  // namespace cogassess
