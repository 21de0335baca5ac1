#pragma once

#include "pshnd/newton.hpp"

#include <span>
#include <string>

namespace pshnd {

// Deterministic 600x600 rendering of a diagram: A to the right, B up,
// bidegrees as filled circles, extreme edges as solid segments, and the
// boundary of the spanned convex region as a dashed chain (vertical entry,
// staircase through the extreme sets, horizontal exit). Coordinates are
// printed with two decimals, so identical inputs give identical bytes.
std::string svg_diagram(const NewtonDiagram& diagram,
                        std::span<const ExtremeSetRecord> records);

}  // namespace pshnd
