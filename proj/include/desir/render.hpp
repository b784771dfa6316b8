#pragma once

#include <string>
#include <vector>

#include "desir/gamble.hpp"

namespace desir {

struct RenderPanel {
    std::string title;
    std::vector<Gamble> generators;
};

/// SVG 1.1 document with one panel per entry: axes, the generators as dots
/// and the region desext(generators). The origin is drawn filled when it lies
/// in the cone. Output depends only on the input. Throws DimensionError unless
/// every gamble has exactly two components.
std::string render_svg(const std::vector<RenderPanel>& panels);

} // namespace desir
