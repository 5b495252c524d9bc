#pragma once

#include <cstddef>
#include <vector>

#include "tropfrac/matrix.hpp"

namespace tropfrac {

// E x_I v F x_J v h <= x_I: the rows of C y <= D^sigma y whose right-hand side
// is a variable other than the anchor, merged per right-hand-side variable.
struct KleeneSystem {
  std::vector<std::size_t> I, J;  // column indices of C, ascending
  TropMatrix E, F;
  Vector h;
};

struct AnchoredSolution {
  KleeneSystem system;
  Vector z;                              // E* h
  Vector y;                              // y_anchor = 0, y_I = z, -inf elsewhere
  std::vector<std::size_t> second_rows;  // rows i with sigma(i) = anchor
  bool second_ok = false;                // those rows hold: (C y)_i <= d_{i,anchor}
};

KleeneSystem build_kleene_system(const TropMatrix& C, const TropMatrix& D, const std::vector<std::size_t>& sigma,
                                 std::size_t anchor);

// Least y with y_anchor = 0 of the first subsystem; the second is only checked.
// Throws PositiveCycleDiverges when the first subsystem has no finite least solution.
AnchoredSolution anchored_least_solution(const TropMatrix& C, const TropMatrix& D,
                                         const std::vector<std::size_t>& sigma, std::size_t anchor);

}  // namespace tropfrac
