#pragma once

#include <string>

#include "sqc/layout.hpp"

namespace sqc {

struct SvgOptions {
  double scale = 0.1;  // px per um
  bool show_paths = true;
};

/// One <g> per layer (every layer of the layout, empty ones included), colors
/// fixed per layer number. Y points up as in the layout.
std::string export_svg(const ChipLayout& layout, const SvgOptions& opt = {});

}  // namespace sqc
