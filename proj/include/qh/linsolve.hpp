#pragma once

#include <optional>
#include <vector>

#include "qh/rational.hpp"

namespace qh {

/// Exact Gaussian elimination over Q for A x = b (A given row-wise, possibly
/// rank-deficient). Returns the particular solution with all free variables
/// pinned to zero, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b);

}  // namespace qh
