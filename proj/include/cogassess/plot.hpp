#pragma once

// Hand-written SVG for the bar figures and the COG triangle, with the plotted
// numbers exported as CSV next to each picture.

#include "cogassess/distributions.hpp"
#include "cogassess/models.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cogassess {

enum class PlotKind { BarsRm, BarsGrm, Triangle };

/// Accepts bars-rm, bars-grm, triangle; throws InputError.
PlotKind parse_plot_kind(std::string_view name);

struct PlotOutput {
  std::string svg;
  std::string csv;
};

/// `cfg` supplies k and b (and the Y_c coefficient for the triangle); bars-rm
/// uses only its base length.
PlotOutput render_plot(PlotKind kind, const Distribution& d, const ModelConfig& cfg,
                       const std::vector<std::string>& labels, const std::string& title);

}  // namespace cogassess
