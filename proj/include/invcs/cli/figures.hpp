#pragma once

#include <optional>
#include <string>

#include "invcs/cli/sweep.hpp"

namespace invcs::cli {

inline constexpr int kFigureCount = 10;

/// Sweep reproducing figure `id` (1..10):
///   1, 2   hydrogen inverse / dual states, variances over real z in [0, 1]
///   3, 4   hydrogen inverse / dual states, Q over [-1, 1]^2
///   5, 6   SU(1,1) inverse / dual states, variances over real z, kappa 0.5, 1, 1.5
///   7      SU(1,1) inverse states, kappa 1/2, Q over [-1, 1]^2
///   8      slice of 7 at Re z = 0.8
///   9, 10  SU(1,1) dual states, kappa 1 and 3, Q over [-3, 3]^2
/// `grid` replaces the default grid when given. Throws InvalidParameter for a bad id.
SweepSpec figure_spec(int id, const std::optional<Grid>& grid = std::nullopt);

std::string figure_caption(int id);

}  // namespace invcs::cli
