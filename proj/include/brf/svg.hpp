#pragma once

#include <string>

#include "brf/core.hpp"
#include "brf/solver.hpp"

namespace brf {

/// Deterministic picture of an instance in raw coordinates: minimal members
/// as faint outlines, A points as open circles, B points as filled circles;
/// with a solution, the independent set is filled translucently and every
/// hitting point is drawn as a cross. Pixel positions are computed with
/// exact arithmetic and rounded to fixed millipixels, so output bytes never
/// vary across runs or platforms.
std::string render_svg(const Instance& inst, const Solution* sol);

}  // namespace brf
