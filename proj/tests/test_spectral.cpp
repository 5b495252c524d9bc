#include <doctest.h>

#include "brute.hpp"
#include "tropfrac/io.hpp"
#include "tropfrac/spectral.hpp"

using namespace tropfrac;

namespace {

const ExtendedNumber NI = ExtendedNumber::neg_inf();

InstanceDocument doc(const char* name) { return parse_instance(brute::read_file(brute::data_path(name))); }

LfpInstance scaled(const LfpInstance& I, long factor) {
  auto times = [&](ExtendedNumber x) { return x.is_finite() ? ExtendedNumber(Rational(x.value() * factor)) : x; };
  LfpInstance J = I;
  for (std::size_t i = 0; i < I.m(); ++i)
    for (std::size_t j = 0; j < I.n(); ++j) {
      J.A.set(i, j, times(I.A(i, j)));
      J.B.set(i, j, times(I.B(i, j)));
    }
  for (auto* v : {&J.c, &J.d, &J.p, &J.q})
    for (auto& x : *v) x = times(x);
  J.r = times(J.r);
  J.s = times(J.s);
  return J;
}

}  // namespace

TEST_CASE("homogenization of the first two examples") {
  HomogeneousInstance H1 = doc("example1.json").homogeneous();
  CHECK(H1.u == Vector{NI, NI, 0});
  CHECK(H1.v == Vector{1, 3, NI});
  HomogeneousInstance H2 = homogenize(doc("example2.json").original);
  CHECK(H2.u == Vector{2, -4, NI});
  CHECK(H2.v == Vector{NI, NI, 0});
  CHECK(H2.scale == 1);
  CHECK(H2.M == 6);
  CHECK(initial_bounds(H2) == std::pair<Rational, Rational>(-36, 36));
}

TEST_CASE("rational coefficients are scaled to integers") {
  LfpInstance I;
  I.A = TropMatrix::from_rows({{Rational(1, 2)}});
  I.B = TropMatrix::from_rows({{Rational(1, 3)}});
  I.c = {NI};
  I.d = {0};
  I.p = {0};
  I.q = {NI};
  I.r = 0;
  I.s = 0;
  HomogeneousInstance H = homogenize(I);
  CHECK(H.scale == 6);
  CHECK(H.C(0, 0) == ExtendedNumber(3));
  CHECK(H.D(0, 0) == ExtendedNumber(2));
}

TEST_CASE("games at different lambda differ only in the objective row") {
  HomogeneousInstance H = doc("example2.json").homogeneous();
  MeanPayoffGame g0 = game_at(H, 0), g1 = game_at(H, 5);
  CHECK(g0.A() == g1.A());
  for (std::size_t i = 0; i < H.m(); ++i)
    for (std::size_t j = 0; j <= H.n(); ++j) CHECK(g0.B()(i, j) == g1.B()(i, j));
  CHECK(g0.B()(H.m(), 2) == ExtendedNumber(0));
  CHECK(g1.B()(H.m(), 2) == ExtendedNumber(5));
  CHECK(g0.A()(H.m(), 1) == ExtendedNumber(-4));
}

TEST_CASE("spectral function of the examples") {
  HomogeneousInstance H2 = doc("example2.json").homogeneous();
  CHECK(phi(H2, 15) == Rational(11, 2));
  CHECK(phi(H2, 4) == Rational(3, 2));
  CHECK(phi(H2, 1) == Rational(1, 2));
  CHECK(phi(H2, 0) == 0);
  CHECK(phi_nonneg(H2, 0).nonneg);
  CHECK_FALSE(phi_nonneg(H2, -1).nonneg);
  CHECK(phi_tau(H2, MinStrategy{{7, 3, 3}}, 0) == 0);

  HomogeneousInstance H1 = doc("example1.json").homogeneous();
  CHECK(phi_nonneg(H1, -5).nonneg);
  CHECK_FALSE(phi_nonneg(H1, -6).nonneg);
}

TEST_CASE("perturbed game of the third example") {
  HomogeneousInstance H = doc("example3.json").homogeneous();
  MeanPayoffGame g = perturbed_game(H, 0);
  CHECK(g.A()(0, 0) == ExtendedNumber(-15));
  CHECK(g.A()(0, 1) == ExtendedNumber(-20));
  CHECK(g.B()(H.m(), 0) == ExtendedNumber(14));
}

TEST_CASE("phi is monotone, 1-Lipschitz and bracketed by partial functions") {
  brute::Rng rng(21);
  int checked = 0;
  while (checked < 60) {
    HomogeneousInstance H = homogenize(brute::random_instance(rng, static_cast<std::size_t>(rng.integer(1, 3)),
                                                              static_cast<std::size_t>(rng.integer(1, 3)), 4, 0.3));
    if (!H.v_has_finite()) continue;
    Rational a = brute::frac(rng.integer(-60, 60), rng.integer(1, 4)), d = brute::frac(rng.integer(0, 30), rng.integer(1, 4));
    Rational pa = phi(H, a), pb = phi(H, a + d);
    CHECK(pa == brute::phi(H, a));
    CHECK(pa <= pb);
    CHECK(pb - pa <= d);
    CHECK(phi(H, a + 1) - pa <= 1);
    MeanPayoffGame g = game_at(H, a);
    PhiSign s = phi_nonneg(H, a);
    CHECK(s.nonneg == (pa >= 0));
    NodeValue nv = game_value_with_strategies(g, H.n());
    CHECK(phi_sigma(H, nv.sigma, a) == pa);
    CHECK(phi_tau(H, nv.tau, a) == pa);
    CHECK(phi_sigma(H, nv.sigma, a + d) <= pb);
    CHECK(pb <= phi_tau(H, nv.tau, a + d));
    // Concavity of phi^sigma and convexity of phi_tau at the midpoint.
    Rational mid = a + d / 2;
    CHECK(2 * phi_sigma(H, nv.sigma, mid) >= phi_sigma(H, nv.sigma, a) + phi_sigma(H, nv.sigma, a + d));
    CHECK(2 * phi_tau(H, nv.tau, mid) <= phi_tau(H, nv.tau, a) + phi_tau(H, nv.tau, a + d));
    ++checked;
  }
}

TEST_CASE("scaling coefficients scales phi") {
  brute::Rng rng(22);
  int checked = 0;
  while (checked < 30) {
    LfpInstance I = brute::random_instance(rng, 2, 2, 4, 0.3);
    HomogeneousInstance H = homogenize(I), H3 = homogenize(scaled(I, 3));
    if (!H.v_has_finite()) continue;
    Rational x = brute::frac(rng.integer(-40, 40), rng.integer(1, 3));
    CHECK(phi(H3, 3 * x) == 3 * phi(H, x));
    auto [lo, hi] = initial_bounds(H);
    auto [lo3, hi3] = initial_bounds(H3);
    CHECK(lo3 == 3 * lo);
    CHECK(hi3 == 3 * hi);
    ++checked;
  }
}

TEST_CASE("Farey grid") {
  CHECK(farey_grid(0, 1, 3) == std::vector<Rational>{0, Rational(1, 3), Rational(1, 2), Rational(2, 3), 1});
  CHECK(farey_grid_size(0, 1, 3) == 9);
  CHECK(farey_grid_size(-2, 2, 1) == 5);
  CHECK(farey_grid(-3, 3, 4).size() <= farey_grid_size(-3, 3, 4));
}

TEST_CASE("reconstruction of the second example") {
  HomogeneousInstance H = doc("example2.json").homogeneous();
  auto pieces = reconstruct(H);
  const long K = static_cast<long>(H.min_mn()) + 1;
  CHECK(pieces.size() <= static_cast<std::size_t>(8 * 6 * K * K * K * K + 2));
  auto at = [&](const Rational& x) {
    for (const auto& p : pieces)
      if (!(p.lo.is_finite() && x < p.lo.value()) && !(p.hi.is_finite() && x > p.hi.value())) return p.at(x);
    FAIL("no piece");
    return Rational(0);
  };
  CHECK(at(0) == 0);
  CHECK(at(1) == Rational(1, 2));
  CHECK(at(15) == Rational(11, 2));
  CHECK(pieces.front().lo.is_neg_inf());
  CHECK(pieces.back().hi.is_pos_inf());
  for (std::size_t k = 1; k < pieces.size(); ++k) CHECK(pieces[k - 1].hi == pieces[k].lo);
  CHECK_THROWS_AS(reconstruct(H, 10), GridTooLarge);
}

TEST_CASE("constant objective gives a single flat piece") {
  HomogeneousInstance H =
      make_homogeneous(TropMatrix::from_rows({{0, 1}}), TropMatrix::from_rows({{NI, 2}}), {NI, NI}, {NI, 0});
  auto pieces = reconstruct(H);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].beta == 0);
}

TEST_CASE("reconstructed pieces match phi on random instances") {
  brute::Rng rng(23);
  int checked = 0;
  while (checked < 15) {
    HomogeneousInstance H = homogenize(brute::random_instance(rng, static_cast<std::size_t>(rng.integer(1, 3)),
                                                              static_cast<std::size_t>(rng.integer(1, 3)), 3, 0.3));
    if (!H.v_has_finite()) continue;
    auto pieces = reconstruct(H);
    const long K = static_cast<long>(H.min_mn()) + 1;
    for (const auto& p : pieces) {
      CHECK((p.beta == 0 || p.beta == 1));
      CHECK(p.k <= K);
      CHECK(abs(p.alpha / p.k) <= 2 * H.M);
      Rational x = 0;
      if (p.lo.is_finite() && p.hi.is_finite()) x = (p.lo.value() + p.hi.value()) / 2;
      else if (p.lo.is_finite()) x = p.lo.value() + 3;
      else if (p.hi.is_finite()) x = p.hi.value() - 3;
      CHECK(p.at(x) == phi(H, x));
    }
    ++checked;
  }
}
