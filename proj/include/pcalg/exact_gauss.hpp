#pragma once

#include "pcalg/rational.hpp"

#include <optional>
#include <vector>

namespace pcalg {

/// Dense matrix over Q as a row-major vector of rows.
using RatMatrix = std::vector<std::vector<Rat>>;

/// Rank via exact Gaussian elimination (in place on a copy).
int rank(RatMatrix m);

/// Solves M x = rhs exactly. Returns std::nullopt when inconsistent. When
/// the system is underdetermined, free variables are set to zero.
std::optional<std::vector<Rat>> solve_exact(RatMatrix m, std::vector<Rat> rhs);

} // namespace pcalg
