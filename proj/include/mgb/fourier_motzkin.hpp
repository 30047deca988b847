#pragma once

// Exact feasibility for small linear systems by Fourier-Motzkin elimination.

#include <optional>
#include <vector>

#include "mgb/arith.hpp"

namespace mgb {

/// a . x >= b, or a . x == b for equalities.
struct LinearRow {
  std::vector<Rational> a;
  Rational b;
};

/// Some x satisfying every row, or nothing when the system is infeasible.
/// Intended for a handful of variables; the row count can grow quadratically
/// per eliminated variable.
std::optional<std::vector<Rational>> fm_solve(std::size_t dim, std::vector<LinearRow> ge,
                                              std::vector<LinearRow> eq = {});

}  // namespace mgb
