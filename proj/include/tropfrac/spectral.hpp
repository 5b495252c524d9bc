#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropfrac/game.hpp"
#include "tropfrac/matrix.hpp"

namespace tropfrac {

// minimize (px v r) - (qx v s) subject to Ax v c <= Bx v d. No +inf anywhere.
struct LfpInstance {
  TropMatrix A, B;
  Vector c, d, p, q;
  ExtendedNumber r, s;

  std::size_t m() const { return A.rows(); }
  std::size_t n() const { return A.cols(); }
};

// C = [A,c], D = [B,d], u = [p,r], v = [q,s], all multiplied by `scale` so that
// every finite entry is an integer. lambda of this instance is scale * lambda of
// the original one.
struct HomogeneousInstance {
  TropMatrix C, D;
  Vector u, v;
  Rational M;   // max |finite entry| after scaling
  Integer scale = 1;

  std::size_t m() const { return C.rows(); }
  std::size_t n() const { return C.cols() - 1; }  // variables of the original problem
  std::size_t min_mn() const { return m() < n() ? m() : n(); }
  bool v_has_finite() const;
};

// Throws AssumptionViolated when a row of D or a column of [C;u] has no finite
// entry, DimensionMismatch on shape errors. v may be entirely -inf.
HomogeneousInstance homogenize(const LfpInstance& inst);
HomogeneousInstance make_homogeneous(const TropMatrix& C, const TropMatrix& D, const Vector& u, const Vector& v);

// (m+1) x (n+1) game with U = [C; u], V(lambda) = [D; lambda + v].
MeanPayoffGame game_at(const HomogeneousInstance& H, const Rational& lambda);

// game_at(H, lambda - 1/(min(m,n)+2)) with every payment multiplied by
// min(m,n)+2; integer when H and lambda are.
MeanPayoffGame perturbed_game(const HomogeneousInstance& H, const Rational& lambda);

// Max node m+1 replaced by a single move of weight -(2M(n+1)+1) when v is
// entirely -inf, else game_at at that lambda. Node n+1 wins here iff the
// program is unbounded below.
MeanPayoffGame penalized_game(const HomogeneousInstance& H);

// chi_{n+1} of game_at(H, lambda).
Rational phi(const HomogeneousInstance& H, const Rational& lambda);

struct PhiSign {
  bool nonneg = false;
  MaxStrategy sigma;  // witnesses phi >= 0 when nonneg
  MinStrategy tau;    // witnesses phi < 0 otherwise
};
PhiSign phi_nonneg(const HomogeneousInstance& H, const Rational& lambda);

// Partial spectral functions: one player frozen.
Rational phi_sigma(const HomogeneousInstance& H, const MaxStrategy& sigma, const Rational& lambda);
Rational phi_tau(const HomogeneousInstance& H, const MinStrategy& tau, const Rational& lambda);

// (-2M(min(m,n)+1), +2M(min(m,n)+1)).
std::pair<Rational, Rational> initial_bounds(const HomogeneousInstance& H);

// (alpha + beta*lambda)/k on [lo, hi]; lo/hi may be -inf/+inf.
struct SpectralPiece {
  ExtendedNumber lo, hi;
  Rational alpha;
  int beta = 0;
  long k = 1;
  Rational at(const Rational& lambda) const { return (alpha + beta * lambda) / k; }
};

struct GridTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rationals with denominator <= K in [lo, hi], ascending.
std::vector<Rational> farey_grid(const Rational& lo, const Rational& hi, long K);
// Upper bound on farey_grid(lo, hi, K).size(), counting p/k once per k.
std::size_t farey_grid_size(const Rational& lo, const Rational& hi, long K);

// All linear pieces of phi, from its values on the breakpoint grid.
std::vector<SpectralPiece> reconstruct(const HomogeneousInstance& H, std::size_t grid_cap = 1000000);

}  // namespace tropfrac
