#pragma once

#include <span>
#include <string>

#include "resland/pspec.hpp"

namespace resland {

/// Filled pseudospectrum bands (one shade per eps level), contour lines and
/// black eigenvalue dots. The first line after the XML prolog is a comment
/// carrying the library version; everything else is deterministic.
std::string render_svg(const ComplexMatrix& a, const PseudospectrumGrid& grid, std::span<const double> levels,
                       int width_px = 600);

} // namespace resland
