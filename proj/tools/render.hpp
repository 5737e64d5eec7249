#pragma once

#include <string>

#include "tileforge/tiling.hpp"

namespace tileforge::cli {

// Box drawing of a square-lattice tiling, one 4x2 character block per cell.
// Throws Error(UnsupportedFormat) for lozenge tilings.
std::string render_ascii(const Tiling& tiling);

// One <polygon> per tile. Lozenges fall into three classes by axis direction,
// dominoes into two. With `heights`, every vertex gets a text label.
std::string render_svg(const Tiling& tiling, bool heights);

}  // namespace tileforge::cli
