#include "experts/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

namespace experts {
namespace {

constexpr double kWidth = 1000.0;
constexpr double kHeight = 700.0;
constexpr double kMarginLeft = 80.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 70.0;

constexpr const char* kPalette[8] = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
    "#9467bd", "#8c564b", "#17becf", "#7f7f7f",
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::string pow10_label(int k) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "1e%d", k);
  return buf;
}

}  // namespace

std::string render_loglog_svg(const std::vector<SvgSeries>& series,
                              const SvgOptions& options) {
  // Collect plottable (positive) points and the log10 ranges.
  std::vector<std::vector<std::pair<double, double>>> logs(series.size());
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  bool any = false;
  for (std::size_t s = 0; s < series.size(); ++s) {
    for (const auto& [x, y] : series[s].points) {
      if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
        continue;
      }
      const double lx = std::log10(x);
      const double ly = std::log10(y);
      logs[s].emplace_back(lx, ly);
      if (!any) {
        xmin = xmax = lx;
        ymin = ymax = ly;
        any = true;
      } else {
        xmin = std::min(xmin, lx);
        xmax = std::max(xmax, lx);
        ymin = std::min(ymin, ly);
        ymax = std::max(ymax, ly);
      }
    }
  }
  if (!any) {
    raise(ErrorCode::EmptyInput, "no positive data points to plot");
  }
  if (xmax - xmin < 1e-9) { xmin -= 0.5; xmax += 0.5; }
  if (ymax - ymin < 1e-9) { ymin -= 0.5; ymax += 0.5; }
  const double xpad = 0.04 * (xmax - xmin);
  const double ypad = 0.04 * (ymax - ymin);
  xmin -= xpad; xmax += xpad;
  ymin -= ypad; ymax += ypad;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto sx = [&](double lx) { return kMarginLeft + (lx - xmin) / (xmax - xmin) * plot_w; };
  auto sy = [&](double ly) { return kMarginTop + (ymax - ly) / (ymax - ymin) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "viewBox=\"0 0 1000 700\" font-family=\"sans-serif\" font-size=\"14\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"700\" fill=\"white\"/>\n";

  // Decade gridlines and tick labels.
  for (int k = static_cast<int>(std::ceil(xmin)); k <= static_cast<int>(std::floor(xmax)); ++k) {
    const double x = sx(k);
    svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kMarginTop) << "\" x2=\""
        << fmt(x) << "\" y2=\"" << fmt(kMarginTop + plot_h)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kMarginTop + plot_h + 20.0)
        << "\" text-anchor=\"middle\">" << pow10_label(k) << "</text>\n";
  }
  for (int k = static_cast<int>(std::ceil(ymin)); k <= static_cast<int>(std::floor(ymax)); ++k) {
    const double y = sy(k);
    svg << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(y) << "\" x2=\""
        << fmt(kMarginLeft + plot_w) << "\" y2=\"" << fmt(y)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << fmt(kMarginLeft - 8.0) << "\" y=\"" << fmt(y + 5.0)
        << "\" text-anchor=\"end\">" << pow10_label(k) << "</text>\n";
  }

  // Frame and axis labels.
  svg << "<rect x=\"" << fmt(kMarginLeft) << "\" y=\"" << fmt(kMarginTop)
      << "\" width=\"" << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<text x=\"" << fmt(kMarginLeft + plot_w / 2.0) << "\" y=\""
      << fmt(kHeight - 20.0) << "\" text-anchor=\"middle\">" << options.x_label
      << "</text>\n";
  svg << "<text x=\"20\" y=\"" << fmt(kMarginTop + plot_h / 2.0)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << fmt(kMarginTop + plot_h / 2.0) << ")\">" << options.y_label << "</text>\n";

  // Series polylines.
  for (std::size_t s = 0; s < series.size(); ++s) {
    if (logs[s].empty()) continue;
    svg << "<polyline fill=\"none\" stroke=\"" << kPalette[s % 8]
        << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < logs[s].size(); ++i) {
      if (i > 0) svg << ' ';
      svg << fmt(sx(logs[s][i].first)) << ',' << fmt(sy(logs[s][i].second));
    }
    svg << "\"/>\n";
  }

  // Legend, top-left inside the plot.
  double ly = kMarginTop + 18.0;
  for (std::size_t s = 0; s < series.size(); ++s) {
    if (logs[s].empty()) continue;
    const double lx = kMarginLeft + 12.0;
    svg << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly - 4.0) << "\" x2=\""
        << fmt(lx + 28.0) << "\" y2=\"" << fmt(ly - 4.0) << "\" stroke=\""
        << kPalette[s % 8] << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << fmt(lx + 34.0) << "\" y=\"" << fmt(ly) << "\">"
        << series[s].label << "</text>\n";
    ly += 20.0;
  }

  svg << "</svg>\n";
  return svg.str();
}

std::vector<SvgSeries> curves_to_series(const std::vector<ExpectedRegretCurve>& curves,
                                        PlotAxis axis) {
  if (curves.empty()) {
    raise(ErrorCode::EmptyInput, "no curves to plot");
  }
  std::vector<SvgSeries> series;
  if (axis == PlotAxis::Time) {
    for (const ExpectedRegretCurve& curve : curves) {
      SvgSeries s;
      char label[128];
      std::snprintf(label, sizeof(label), "%s %s N=%zu", curve.learner_id.c_str(),
                    mechanism_kind_name(curve.mechanism.kind),
                    curve.mechanism.n_experts);
      s.label = label;
      for (std::size_t c = 0; c < curve.checkpoints.size(); ++c) {
        s.points.emplace_back(static_cast<double>(curve.checkpoints[c]),
                              curve.mean[c]);
      }
      series.push_back(std::move(s));
    }
  } else {
    // One series per (learner, mechanism, checkpoint), point per curve's N.
    std::map<std::tuple<std::string, std::string, std::int64_t>, SvgSeries> grouped;
    for (const ExpectedRegretCurve& curve : curves) {
      for (std::size_t c = 0; c < curve.checkpoints.size(); ++c) {
        const auto key = std::make_tuple(curve.learner_id,
                                         std::string(mechanism_kind_name(
                                             curve.mechanism.kind)),
                                         curve.checkpoints[c]);
        SvgSeries& s = grouped[key];
        if (s.label.empty()) {
          char label[128];
          std::snprintf(label, sizeof(label), "%s %s T=%lld",
                        curve.learner_id.c_str(),
                        mechanism_kind_name(curve.mechanism.kind),
                        static_cast<long long>(curve.checkpoints[c]));
          s.label = label;
        }
        s.points.emplace_back(static_cast<double>(curve.mechanism.n_experts),
                              curve.mean[c]);
      }
    }
    for (auto& [key, s] : grouped) {
      std::sort(s.points.begin(), s.points.end());
      series.push_back(std::move(s));
    }
  }
  return series;
}

}  // namespace experts
