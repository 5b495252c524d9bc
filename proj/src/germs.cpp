#include "tropfrac/germs.hpp"

#include <algorithm>
#include <set>

namespace tropfrac {

Germ Germ::make(const ExtendedNumber& a, const ExtendedNumber& b) {
  if (a.is_neg_inf() && b.is_neg_inf()) return bottom();
  if (!a.is_finite() || !b.is_finite())
    throw std::invalid_argument("germ (" + a.str() + "," + b.str() + ") is neither finite nor bottom");
  return Germ(a.value(), b.value());
}

Rational Germ::at(const Rational& eps) const {
  if (!finite_) throw std::logic_error("bottom germ has no real value");
  return a_ + eps * b_;
}

std::string Germ::str() const {
  if (!finite_) return "(-inf,-inf)";
  return "(" + to_string(a_) + "," + to_string(b_) + ")";
}

bool operator==(const Germ& x, const Germ& y) {
  if (x.finite_ != y.finite_) return false;
  return !x.finite_ || (x.a_ == y.a_ && x.b_ == y.b_);
}

std::strong_ordering operator<=>(const Germ& x, const Germ& y) {
  if (!x.finite_ || !y.finite_) return x.finite_ <=> y.finite_;
  if (int c = cmp(x.a_, y.a_)) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(x.b_, y.b_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Germ germ_add(const Germ& x, const Germ& y) { return x < y ? y : x; }

Germ germ_mul(const Germ& x, const Germ& y) {
  if (x.is_bottom() || y.is_bottom()) return Germ::bottom();
  return Germ(Rational(x.a().value() + y.a().value()), Rational(x.b().value() + y.b().value()));
}

std::ostream& operator<<(std::ostream& os, const Germ& g) { return os << g.str(); }

void validate(const GermGame& g) {
  const std::size_t m = g.m(), n = g.n();
  if (m == 0 || n == 0 || g.B.size() != m) throw DimensionMismatch("germ game: empty or ragged");
  for (std::size_t i = 0; i < m; ++i)
    if (g.A[i].size() != n || g.B[i].size() != n) throw DimensionMismatch("germ game: ragged rows");
  std::vector<Violation> bad;
  for (std::size_t i = 0; i < m; ++i)
    if (std::all_of(g.B[i].begin(), g.B[i].end(), [](const Germ& x) { return x.is_bottom(); }))
      bad.push_back({Violation::Kind::empty_row_of_B, i});
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) any = any || !g.A[i][j].is_bottom();
    if (!any) bad.push_back({Violation::Kind::empty_column_of_A, j});
  }
  if (!bad.empty()) throw AssumptionViolated(std::move(bad));
}

namespace {

Germ negate(const Germ& x) { return Germ(Rational(-x.a().value()), Rational(-x.b().value())); }

// Every choice vector: choices[k] lists the admissible successors of node k.
template <class F>
void for_each_choice(const std::vector<std::vector<std::size_t>>& choices, F f) {
  std::vector<std::size_t> idx(choices.size(), 0), pick(choices.size());
  for (;;) {
    for (std::size_t k = 0; k < choices.size(); ++k) pick[k] = choices[k][idx[k]];
    f(pick);
    std::size_t k = 0;
    while (k < choices.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == choices.size()) return;
  }
}

struct Choices {
  std::vector<std::vector<std::size_t>> max, min;
  double pairs = 1;
};

Choices choices_of(const GermGame& g) {
  validate(g);
  Choices c;
  c.max.resize(g.m());
  c.min.resize(g.n());
  for (std::size_t i = 0; i < g.m(); ++i)
    for (std::size_t l = 0; l < g.n(); ++l)
      if (!g.B[i][l].is_bottom()) c.max[i].push_back(l);
  for (std::size_t j = 0; j < g.n(); ++j)
    for (std::size_t i = 0; i < g.m(); ++i)
      if (!g.A[i][j].is_bottom()) c.min[j].push_back(i);
  for (auto& v : c.max) c.pairs *= static_cast<double>(v.size());
  for (auto& v : c.min) c.pairs *= static_cast<double>(v.size());
  if (c.pairs > 1e6) throw TooLarge("germ game has more than 1e6 strategy pairs");
  return c;
}

// Min nodes on the cycle reached from j; the per-turn mean is the germ sum over it.
Germ outcome(const GermGame& g, std::size_t j, const std::vector<std::size_t>& tau,
             const std::vector<std::size_t>& sigma) {
  std::vector<std::size_t> seen(g.n(), static_cast<std::size_t>(-1));
  std::size_t step = 0, x = j;
  while (seen[x] == static_cast<std::size_t>(-1)) {
    seen[x] = step++;
    x = sigma[tau[x]];
  }
  Germ sum(0, 0);
  long turns = 0;
  std::size_t y = x;
  do {
    std::size_t i = tau[y];
    sum = germ_mul(sum, germ_mul(negate(g.A[i][y]), g.B[i][sigma[i]]));
    ++turns;
    y = sigma[i];
  } while (y != x);
  return Germ(Rational(sum.a().value() / turns), Rational(sum.b().value() / turns));
}

}  // namespace

Germ germ_play_outcome(const GermGame& g, std::size_t j, const MinStrategy& tau, const MaxStrategy& sigma) {
  validate(g);
  if (j >= g.n() || tau.succ.size() != g.n() || sigma.succ.size() != g.m())
    throw std::invalid_argument("germ_play_outcome: bad node or strategy length");
  for (std::size_t k = 0; k < g.n(); ++k)
    if (tau.succ[k] >= g.m() || g.A[tau.succ[k]][k].is_bottom()) throw std::invalid_argument("tau picks a missing arc");
  for (std::size_t k = 0; k < g.m(); ++k)
    if (sigma.succ[k] >= g.n() || g.B[k][sigma.succ[k]].is_bottom())
      throw std::invalid_argument("sigma picks a missing arc");
  return outcome(g, j, tau.succ, sigma.succ);
}

Germ germ_brute_force_value(const GermGame& g, std::size_t j) {
  if (j >= g.n()) throw std::out_of_range("germ_brute_force_value: node");
  Choices c = choices_of(g);
  std::optional<Germ> best;
  for_each_choice(c.min, [&](const std::vector<std::size_t>& tau) {
    std::optional<Germ> inner;
    for_each_choice(c.max, [&](const std::vector<std::size_t>& sigma) {
      Germ o = outcome(g, j, tau, sigma);
      if (!inner || *inner < o) inner = o;
    });
    if (!best || *inner < *best) best = inner;
  });
  return *best;
}

MaxStrategy germ_optimal_max_strategy(const GermGame& g) {
  Choices c = choices_of(g);
  std::vector<Germ> value;
  for (std::size_t j = 0; j < g.n(); ++j) value.push_back(germ_brute_force_value(g, j));
  std::optional<MaxStrategy> arg;
  for_each_choice(c.max, [&](const std::vector<std::size_t>& sigma) {
    if (arg) return;
    bool secures = true;
    for_each_choice(c.min, [&](const std::vector<std::size_t>& tau) {
      for (std::size_t j = 0; secures && j < g.n(); ++j) secures = !(outcome(g, j, tau, sigma) < value[j]);
    });
    if (secures) arg = MaxStrategy{sigma};
  });
  if (!arg) throw std::logic_error("germ game without a uniformly optimal Max strategy");
  return *arg;
}

MeanPayoffGame perturb(const GermGame& g, const Rational& eps) {
  validate(g);
  TropMatrix A(g.m(), g.n()), B(g.m(), g.n());
  for (std::size_t i = 0; i < g.m(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j) {
      if (!g.A[i][j].is_bottom()) A.set(i, j, ExtendedNumber(g.A[i][j].at(eps)));
      if (!g.B[i][j].is_bottom()) B.set(i, j, ExtendedNumber(g.B[i][j].at(eps)));
    }
  return MeanPayoffGame(std::move(A), std::move(B));
}

std::optional<Rational> germ_validity_radius(const GermGame& g) {
  Choices c = choices_of(g);
  Rational M = 0;
  for (const auto* E : {&g.A, &g.B})
    for (const auto& row : *E)
      for (const auto& x : row)
        if (!x.is_bottom()) M = std::max(M, Rational(abs(x.b().value())));
  std::set<Rational> means;
  for_each_choice(c.min, [&](const std::vector<std::size_t>& tau) {
    for_each_choice(c.max, [&](const std::vector<std::size_t>& sigma) {
      for (std::size_t j = 0; j < g.n(); ++j) means.insert(outcome(g, j, tau, sigma).a().value());
    });
  });
  if (M == 0 || means.size() < 2) return std::nullopt;
  std::optional<Rational> delta;
  for (auto it = std::next(means.begin()); it != means.end(); ++it) {
    Rational d = *it - *std::prev(it);
    if (!delta || d < *delta) delta = d;
  }
  return Rational(*delta / (4 * M));
}

GermGame germ_game_at(const HomogeneousInstance& H, const Rational& lambda) {
  MeanPayoffGame base = game_at(H, lambda);
  GermGame g;
  g.A.assign(base.m(), std::vector<Germ>(base.n()));
  g.B = g.A;
  for (std::size_t i = 0; i < base.m(); ++i)
    for (std::size_t j = 0; j < base.n(); ++j) {
      Rational tilt = i + 1 == base.m() ? -1 : 0;
      if (base.A()(i, j).is_finite()) g.A[i][j] = Germ(base.A()(i, j).value(), 0);
      if (base.B()(i, j).is_finite()) g.B[i][j] = Germ(base.B()(i, j).value(), tilt);
    }
  return g;
}

}  // namespace tropfrac
