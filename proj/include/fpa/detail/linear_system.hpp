#pragma once

// Exact Gaussian elimination over Q for the small dense systems met in
// kernel and complement searches.

#include <optional>
#include <vector>

#include "fpa/rational.hpp"

namespace fpa::detail {

using Matrix = std::vector<std::vector<Rational>>;

/// Basis of {v : A v = 0}; A has `cols` columns. Each basis vector has a 1 in
/// its free column and 0 in every other free column; vectors are ordered by
/// free column.
std::vector<std::vector<Rational>> nullspace(Matrix a, std::size_t cols);

/// Some v with A v = b, free variables set to 0; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b, std::size_t cols);

}  // namespace fpa::detail
