#pragma once

#include <string>
#include <utility>
#include <vector>

#include "experts/harness.hpp"

namespace experts {

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y), plotted on log10 axes
};

struct SvgOptions {
  std::string x_label = "T";
  std::string y_label = "expected regret";
};

/// Renders a log-log line chart as a standalone SVG 1.1 document, 1000x700
/// viewBox, fixed 8-color palette, decade gridlines, legend. The output is a
/// pure function of the input, so identical inputs give identical bytes.
/// Points with a nonpositive coordinate cannot be placed on log axes and are
/// skipped. Errors: EmptyInput when nothing remains to draw.
std::string render_loglog_svg(const std::vector<SvgSeries>& series,
                              const SvgOptions& options = {});

enum class PlotAxis { Time, Experts };

/// Builds plot series from regret curves: one series per (learner, mechanism,
/// N) over checkpoints when plotting against time, or one series per
/// (learner, mechanism, checkpoint) over N when plotting against the number
/// of experts.
std::vector<SvgSeries> curves_to_series(const std::vector<ExpectedRegretCurve>& curves,
                                        PlotAxis axis);

}  // namespace experts
