#include "tropfrac/spectral.hpp"

#include <algorithm>
#include <string>

namespace tropfrac {

namespace {

void lcm_into(Integer& acc, const ExtendedNumber& x) {
  if (x.is_finite()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), x.value().get_den_mpz_t());
}

ExtendedNumber scaled(const ExtendedNumber& x, const Integer& s) {
  if (!x.is_finite()) return x;
  return ExtendedNumber(Rational(x.value() * Rational(s)));
}

void no_pos_inf(const Vector& x, const char* name) {
  for (const auto& e : x)
    if (e.is_pos_inf()) throw std::invalid_argument(std::string(name) + " contains +inf");
}

}  // namespace

bool HomogeneousInstance::v_has_finite() const {
  for (const auto& x : v)
    if (x.is_finite()) return true;
  return false;
}

HomogeneousInstance make_homogeneous(const TropMatrix& C, const TropMatrix& D, const Vector& u, const Vector& v) {
  const std::size_t m = C.rows(), cols = C.cols();
  if (D.rows() != m || D.cols() != cols || u.size() != cols || v.size() != cols)
    throw DimensionMismatch("homogeneous instance: C, D, u, v disagree in shape");
  if (m == 0 || cols < 1) throw DimensionMismatch("homogeneous instance: empty");
  if (C.semiring() != Semiring::max_plus || D.semiring() != Semiring::max_plus)
    throw std::invalid_argument("homogeneous instance: matrices must be max-plus");
  no_pos_inf(u, "u");
  no_pos_inf(v, "v");

  Integer s = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      lcm_into(s, C(i, j));
      lcm_into(s, D(i, j));
    }
  for (std::size_t j = 0; j < cols; ++j) {
    lcm_into(s, u[j]);
    lcm_into(s, v[j]);
  }

  HomogeneousInstance H;
  H.scale = s;
  H.C = TropMatrix(m, cols);
  H.D = TropMatrix(m, cols);
  H.M = 0;
  auto track = [&](const ExtendedNumber& x) {
    if (x.is_finite()) H.M = std::max(H.M, Rational(abs(x.value())));
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      H.C.set(i, j, scaled(C(i, j), s));
      H.D.set(i, j, scaled(D(i, j), s));
      track(H.C(i, j));
      track(H.D(i, j));
    }
  for (std::size_t j = 0; j < cols; ++j) {
    H.u.push_back(scaled(u[j], s));
    H.v.push_back(scaled(v[j], s));
    track(H.u[j]);
    track(H.v[j]);
  }

  std::vector<Violation> bad;
  for (std::size_t i = 0; i < m; ++i)
    if (!H.D.row_has_finite(i)) bad.push_back({Violation::Kind::empty_row_of_B, i});
  for (std::size_t j = 0; j < cols; ++j)
    if (!H.C.col_has_finite(j) && !H.u[j].is_finite()) bad.push_back({Violation::Kind::empty_column_of_A, j});
  if (!bad.empty()) throw AssumptionViolated(std::move(bad));
  return H;
}

HomogeneousInstance homogenize(const LfpInstance& inst) {
  const std::size_t m = inst.m(), n = inst.n();
  if (inst.B.rows() != m || inst.B.cols() != n || inst.c.size() != m || inst.d.size() != m || inst.p.size() != n ||
      inst.q.size() != n)
    throw DimensionMismatch("instance: A, B, c, d, p, q disagree in shape");
  no_pos_inf(inst.c, "c");
  no_pos_inf(inst.d, "d");
  if (inst.r.is_pos_inf() || inst.s.is_pos_inf()) throw std::invalid_argument("r or s is +inf");
  TropMatrix C(m, n + 1), D(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      C.set(i, j, inst.A(i, j));
      D.set(i, j, inst.B(i, j));
    }
    C.set(i, n, inst.c[i]);
    D.set(i, n, inst.d[i]);
  }
  Vector u = inst.p, v = inst.q;
  u.push_back(inst.r);
  v.push_back(inst.s);
  return make_homogeneous(C, D, u, v);
}

MeanPayoffGame game_at(const HomogeneousInstance& H, const Rational& lambda) {
  const std::size_t m = H.m(), cols = H.C.cols();
  TropMatrix U(m + 1, cols), V(m + 1, cols);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      U.set(i, j, H.C(i, j));
      V.set(i, j, H.D(i, j));
    }
  ExtendedNumber lam(lambda);
  for (std::size_t j = 0; j < cols; ++j) {
    U.set(m, j, H.u[j]);
    V.set(m, j, plus(Semiring::max_plus, lam, H.v[j]));
  }
  return MeanPayoffGame(std::move(U), std::move(V));
}

MeanPayoffGame perturbed_game(const HomogeneousInstance& H, const Rational& lambda) {
  const long f = static_cast<long>(H.min_mn()) + 2;
  MeanPayoffGame g = game_at(H, lambda - Rational(1, f));
  TropMatrix U(g.m(), g.n()), V(g.m(), g.n());
  auto times = [&](const ExtendedNumber& x) { return x.is_finite() ? ExtendedNumber(Rational(x.value() * f)) : x; };
  for (std::size_t i = 0; i < g.m(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j) {
      U.set(i, j, times(g.A()(i, j)));
      V.set(i, j, times(g.B()(i, j)));
    }
  return MeanPayoffGame(std::move(U), std::move(V));
}

MeanPayoffGame penalized_game(const HomogeneousInstance& H) {
  Rational low = -(2 * H.M * Rational(static_cast<long>(H.n() + 1)) + 1);
  if (H.v_has_finite()) return game_at(H, low);
  const std::size_t m = H.m(), cols = H.C.cols();
  TropMatrix U(m + 1, cols), V(m + 1, cols);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      U.set(i, j, H.C(i, j));
      V.set(i, j, H.D(i, j));
    }
  for (std::size_t j = 0; j < cols; ++j) U.set(m, j, H.u[j]);
  V.set(m, cols - 1, ExtendedNumber(low));
  return MeanPayoffGame(std::move(U), std::move(V));
}

Rational phi(const HomogeneousInstance& H, const Rational& lambda) { return game_value(game_at(H, lambda), H.n()); }

PhiSign phi_nonneg(const HomogeneousInstance& H, const Rational& lambda) {
  WinningReport w = winning_oracle(game_at(H, lambda));
  return {static_cast<bool>(w.winning[H.n()]), std::move(w.sigma), std::move(w.tau)};
}

Rational phi_sigma(const HomogeneousInstance& H, const MaxStrategy& sigma, const Rational& lambda) {
  return max_only_values(game_at(H, lambda), sigma)[H.n()].value();
}

Rational phi_tau(const HomogeneousInstance& H, const MinStrategy& tau, const Rational& lambda) {
  return min_only_values(game_at(H, lambda), tau)[H.n()].value();
}

std::pair<Rational, Rational> initial_bounds(const HomogeneousInstance& H) {
  Rational b = 2 * H.M * Rational(static_cast<long>(H.min_mn() + 1));
  return {Rational(-b), b};
}

std::size_t farey_grid_size(const Rational& lo, const Rational& hi, long K) {
  std::size_t total = 0;
  for (long k = 1; k <= K; ++k) {
    Integer a0 = ceil_of(lo * k), a1 = floor_of(hi * k);
    if (a1 < a0) continue;
    Integer cnt = a1 - a0 + 1;
    if (!cnt.fits_ulong_p()) return static_cast<std::size_t>(-1);
    total += cnt.get_ui();
  }
  return total;
}

std::vector<Rational> farey_grid(const Rational& lo, const Rational& hi, long K) {
  std::vector<Rational> out;
  for (long k = 1; k <= K; ++k) {
    Integer a0 = ceil_of(lo * k), a1 = floor_of(hi * k);
    for (Integer a = a0; a <= a1; ++a) {
      Integer g;
      mpz_gcd_ui(g.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
      if (g == 1 || (a == 0 && k == 1)) out.emplace_back(a, Integer(k));
    }
  }
  for (auto& q : out) q.canonicalize();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpectralPiece> reconstruct(const HomogeneousInstance& H, std::size_t grid_cap) {
  const long K = static_cast<long>(H.min_mn()) + 1;
  Rational L = 4 * H.M * K * K;
  std::size_t size = farey_grid_size(Rational(-L), L, K);
  if (size > grid_cap)
    throw GridTooLarge("spectral grid has about " + std::to_string(size) + " points, above the cap of " +
                       std::to_string(grid_cap) + "; raise the cap or shrink the coefficients");
  std::vector<Rational> xs;
  xs.reserve(size + 2);
  xs.push_back(Rational(-L - 1));
  for (auto& q : farey_grid(Rational(-L), L, K)) xs.push_back(std::move(q));
  xs.push_back(Rational(L + 1));

  // Values, reusing the last optimal pair while both partial functions agree.
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  std::optional<MaxStrategy> sigma;
  std::optional<MinStrategy> tau;
  for (const auto& x : xs) {
    if (sigma && tau) {
      Rational a = phi_sigma(H, *sigma, x);
      if (a == phi_tau(H, *tau, x)) {
        ys.push_back(a);
        continue;
      }
    }
    NodeValue nv = game_value_with_strategies(game_at(H, x), H.n());
    ys.push_back(nv.value);
    sigma = std::move(nv.sigma);
    tau = std::move(nv.tau);
  }

  std::vector<SpectralPiece> pieces;
  std::size_t start = 0;
  auto slope = [&](std::size_t i) { return Rational((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])); };
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    Rational s = slope(i);
    bool last = i + 2 == xs.size();
    if (!last && slope(i + 1) == s) continue;
    SpectralPiece p;
    p.lo = start == 0 ? ExtendedNumber::neg_inf() : ExtendedNumber(xs[start]);
    p.hi = last ? ExtendedNumber::pos_inf() : ExtendedNumber(xs[i + 1]);
    Rational c = ys[i] - s * xs[i];
    if (s == 0) {
      p.beta = 0;
      p.k = c.get_den().get_si();
      p.alpha = Rational(c.get_num());
    } else {
      if (s.get_num() != 1 || !s.get_den().fits_slong_p())
        throw std::logic_error("spectral slope " + to_string(s) + " is not of the form 1/k");
      p.beta = 1;
      p.k = s.get_den().get_si();
      p.alpha = c * p.k;
    }
    pieces.push_back(std::move(p));
    start = i + 1;
  }
  return pieces;
}

}  // namespace tropfrac
