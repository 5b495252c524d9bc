// Winning sets and exact values of mean payoff games.
//
// The decision "chi_j >= 0" runs Bjorklund-Vorobyov strategy improvement on
// integer weights: Max may retreat to a sink with payoff 0, strategies keep
// every cycle of G^sigma positive, and Min answers with shortest paths to the
// sink. Weights are multiplied by K = min(m,n)+1 and each Max arc gains +1, so
// a cycle of t <= min(m,n) turns is positive iff its original weight is >= 0.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "tropfrac/game.hpp"

namespace tropfrac {

namespace {

using i64 = std::int64_t;
constexpr i64 kNone = std::numeric_limits<i64>::min();
constexpr i64 kInf = std::numeric_limits<i64>::max();

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer game weights overflow 64 bits");
  return r;
}

i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer game weights overflow 64 bits");
  return r;
}

struct IntGame {
  std::size_t m = 0, n = 0;
  std::vector<i64> a, b;  // row-major m x n, kNone for -inf
  i64 A(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  i64 B(std::size_t i, std::size_t j) const { return b[i * n + j]; }
};

// Payments times the lcm of their denominators.
IntGame integer_game(const MeanPayoffGame& g, Integer& scale) {
  scale = 1;
  for (const TropMatrix* E : {&g.A(), &g.B()})
    for (std::size_t i = 0; i < g.m(); ++i)
      for (std::size_t j = 0; j < g.n(); ++j)
        if ((*E)(i, j).is_finite()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), (*E)(i, j).value().get_den_mpz_t());
  IntGame G;
  G.m = g.m();
  G.n = g.n();
  G.a.resize(G.m * G.n);
  G.b.resize(G.m * G.n);
  for (std::size_t i = 0; i < G.m; ++i)
    for (std::size_t j = 0; j < G.n; ++j) {
      auto conv = [&](const ExtendedNumber& x) -> i64 {
        if (!x.is_finite()) return kNone;
        Rational s = x.value() * Rational(scale);
        if (!s.get_num().fits_slong_p()) throw std::overflow_error("payment does not fit 64 bits");
        return s.get_num().get_si();
      };
      G.a[i * G.n + j] = conv(g.A()(i, j));
      G.b[i * G.n + j] = conv(g.B()(i, j));
    }
  return G;
}

// Same game with every B entry shifted by -p/q, all payments times q.
IntGame shifted(const IntGame& G, i64 p, i64 q) {
  IntGame H = G;
  for (auto& x : H.a)
    if (x != kNone) x = checked_mul(x, q);
  for (auto& x : H.b)
    if (x != kNone) x = checked_sub(checked_mul(x, q), p);
  return H;
}

struct Decision {
  std::vector<char> win_min, win_max;
  std::vector<std::size_t> sigma, tau;
};

Decision decide_nonnegative(const IntGame& G) {
  const std::size_t m = G.m, n = G.n;
  const i64 K = static_cast<i64>(std::min(m, n)) + 1;
  const std::size_t retreat = n;

  i64 wmax = 0;
  for (i64 x : G.a)
    if (x != kNone) wmax = std::max(wmax, x < 0 ? -x : x);
  for (i64 x : G.b)
    if (x != kNone) wmax = std::max(wmax, x < 0 ? -x : x);
  // Path sums stay below (m+n+2) * (K*wmax + 1).
  checked_mul(checked_mul(wmax, K) + 1, static_cast<i64>(m + n + 2));

  std::vector<i64> wa(m * n, kNone), wb(m * n, kNone);  // Min arc j->i, Max arc i->l
  for (std::size_t k = 0; k < m * n; ++k) {
    if (G.a[k] != kNone) wa[k] = -K * G.a[k];
    if (G.b[k] != kNone) wb[k] = K * G.b[k] + 1;
  }

  std::vector<std::size_t> sigma(m, retreat);
  std::vector<i64> vmax(m), vmin(n);
  const std::size_t round_cap = m + n + 2;
  std::size_t improvements = 0;

  for (;;) {
    // Shortest distances to the sink under sigma; every cycle is positive.
    for (std::size_t i = 0; i < m; ++i) vmax[i] = sigma[i] == retreat ? 0 : kInf;
    std::fill(vmin.begin(), vmin.end(), kInf);
    bool changed = true;
    std::size_t rounds = 0;
    while (changed) {
      if (++rounds > round_cap) throw std::logic_error("strategy improvement: cycle of nonpositive weight under sigma");
      changed = false;
      for (std::size_t j = 0; j < n; ++j) {
        i64 best = vmin[j];
        for (std::size_t i = 0; i < m; ++i) {
          i64 w = wa[i * n + j];
          if (w == kNone || vmax[i] == kInf) continue;
          if (w + vmax[i] < best) best = w + vmax[i];
        }
        if (best < vmin[j]) {
          vmin[j] = best;
          changed = true;
        }
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (sigma[i] == retreat) continue;
        std::size_t l = sigma[i];
        if (vmin[l] == kInf) continue;
        i64 c = wb[i * n + l] + vmin[l];
        if (c < vmax[i]) {
          vmax[i] = c;
          changed = true;
        }
      }
    }

    bool switched = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (vmax[i] == kInf) continue;
      i64 best = 0;
      std::size_t arg = retreat;
      for (std::size_t l = 0; l < n; ++l) {
        i64 w = wb[i * n + l];
        if (w == kNone) continue;
        i64 c = vmin[l] == kInf ? kInf : w + vmin[l];
        if (c > best) {
          best = c;
          arg = l;
        }
      }
      if (best > vmax[i]) {
        sigma[i] = arg;
        switched = true;
      }
    }
    if (!switched) break;
    if (++improvements > 1000000) throw std::logic_error("strategy improvement does not terminate");
  }

  Decision d;
  d.win_min.resize(n);
  d.win_max.resize(m);
  d.sigma.resize(m);
  d.tau.resize(n);
  for (std::size_t i = 0; i < m; ++i) {
    d.win_max[i] = vmax[i] == kInf;
    std::size_t s = sigma[i];
    if (s == retreat)
      for (std::size_t l = 0; l < n && s == retreat; ++l)
        if (G.B(i, l) != kNone) s = l;
    d.sigma[i] = s;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d.win_min[j] = vmin[j] == kInf;
    std::size_t arg = m;
    i64 best = kInf;
    for (std::size_t i = 0; i < m; ++i) {
      i64 w = wa[i * n + j];
      if (w == kNone) continue;
      if (arg == m) arg = i;
      if (vmax[i] != kInf && w + vmax[i] < best) {
        best = w + vmax[i];
        arg = i;
      }
    }
    d.tau[j] = arg;
  }
  return d;
}

MeanPayoffGame as_game(const IntGame& G) {
  TropMatrix A(G.m, G.n), B(G.m, G.n);
  for (std::size_t i = 0; i < G.m; ++i)
    for (std::size_t j = 0; j < G.n; ++j) {
      if (G.A(i, j) != kNone) A.set(i, j, ExtendedNumber(Rational(G.A(i, j))));
      if (G.B(i, j) != kNone) B.set(i, j, ExtendedNumber(Rational(G.B(i, j))));
    }
  return MeanPayoffGame(std::move(A), std::move(B));
}

i64 to_i64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("threshold does not fit 64 bits");
  return z.get_si();
}

}  // namespace

WinningReport winning_oracle(const MeanPayoffGame& g) {
  Integer scale;
  IntGame G = integer_game(g, scale);
  Decision d = decide_nonnegative(G);
  return {d.win_min, d.win_max, MaxStrategy{d.sigma}, MinStrategy{d.tau}};
}

NodeValue game_value_with_strategies(const MeanPayoffGame& g, std::size_t j) {
  if (j >= g.n()) throw std::out_of_range("game_value: node");
  Integer scale;
  IntGame G = integer_game(g, scale);
  MeanPayoffGame base = as_game(G);
  i64 W = 0;
  for (i64 x : G.a)
    if (x != kNone) W = std::max(W, x < 0 ? -x : x);
  for (i64 x : G.b)
    if (x != kNone) W = std::max(W, x < 0 ? -x : x);

  // chi in [lo, ub]; both ends tighten through the one-player values of the
  // strategies returned at each threshold.
  Rational lo(-2 * W), ub(2 * W);
  std::optional<MaxStrategy> sigma_lo;
  std::optional<MinStrategy> tau_ub;
  auto query = [&](const Rational& t) {
    return decide_nonnegative(shifted(G, to_i64(t.get_num()), to_i64(t.get_den())));
  };
  auto lower = [&](const Decision& d) { return max_only_values(base, MaxStrategy{d.sigma})[j].value(); };
  auto upper = [&](const Decision& d) { return min_only_values(base, MinStrategy{d.tau})[j].value(); };

  for (int guard = 0;; ++guard) {
    if (guard > 4096) throw std::logic_error("game_value: dichotomy does not converge");
    if (lo == ub) break;
    Decision d = query(ub);
    if (d.win_min[j]) {
      lo = ub;
      sigma_lo = MaxStrategy{d.sigma};
      break;
    }
    ub = upper(d);
    tau_ub = MinStrategy{d.tau};
    if (lo == ub) break;
    Rational third = (ub - lo) / 3;
    Rational t = simplest_between(Rational(lo + third), Rational(ub - third));
    d = query(t);
    if (d.win_min[j]) {
      Rational v = lower(d);
      if (lo < v) {
        lo = v;
        sigma_lo = MaxStrategy{d.sigma};
      } else if (lo < t) {
        lo = t;
        sigma_lo.reset();
      }
    } else {
      Rational v = upper(d);
      if (v < ub) {
        ub = v;
        tau_ub = MinStrategy{d.tau};
      }
    }
  }
  if (!sigma_lo) sigma_lo = MaxStrategy{query(lo).sigma};
  if (!tau_ub) {
    // chi = 2W: every Min strategy attains it.
    tau_ub = MinStrategy{query(lo).tau};
  }
  return {Rational(lo / Rational(scale)), *sigma_lo, *tau_ub};
}

Rational game_value(const MeanPayoffGame& g, std::size_t j) { return game_value_with_strategies(g, j).value; }

}  // namespace tropfrac
