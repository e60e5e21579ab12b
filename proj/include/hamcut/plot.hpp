#pragma once

#include <string>

#include "hamcut/io.hpp"

namespace hamcut {

// 2-D figure: family-colored atom lines (or points), the solution line, the
// witness point v and its two rays. Output is deterministic SVG 1.1.
// Throws WrongDimension unless the instance is 2-dimensional.
std::string render_svg(const Instance<Rat>& inst, const SolutionView* solution);

}  // namespace hamcut
