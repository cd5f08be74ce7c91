#pragma once

#include <optional>
#include <string>

#include "fivelist/lists.hpp"
#include "fivelist/validity.hpp"

namespace fivelist {

/// Fill used for color c in rendered drawings; white when uncolored.
const char* fill_for_color(Color c);

/// SVG 1.1 drawing: vertices are circles filled by color (see
/// fill_for_color), crossed edges are polylines through a red crossing
/// marker. Tutte layout with the outer face on a regular polygon
/// when the planarization is 2-connected, seeded spring layout otherwise.
std::string render_svg(const Instance& inst, const std::optional<Coloring>& coloring = std::nullopt);

}  // namespace fivelist
