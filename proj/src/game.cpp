#include "tropfrac/game.hpp"

#include <string>

#include "tropfrac/kleene_system.hpp"

namespace tropfrac {

namespace {

std::string describe(const std::vector<Violation>& v) {
  std::string s = "game assumption violated:";
  for (const auto& x : v)
    s += x.kind == Violation::Kind::empty_row_of_B ? " B row " + std::to_string(x.index + 1) + " has no move;"
                                                   : " A column " + std::to_string(x.index + 1) + " has no move;";
  return s;
}

}  // namespace

AssumptionViolated::AssumptionViolated(std::vector<Violation> v)
    : std::invalid_argument(describe(v)), violations(std::move(v)) {}

std::vector<Violation> validate(const TropMatrix& A, const TropMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw DimensionMismatch("game: A and B differ in shape");
  std::vector<Violation> out;
  for (std::size_t i = 0; i < B.rows(); ++i)
    if (!B.row_has_finite(i)) out.push_back({Violation::Kind::empty_row_of_B, i});
  for (std::size_t j = 0; j < A.cols(); ++j)
    if (!A.col_has_finite(j)) out.push_back({Violation::Kind::empty_column_of_A, j});
  return out;
}

MeanPayoffGame::MeanPayoffGame(TropMatrix A, TropMatrix B) : A_(std::move(A)), B_(std::move(B)) {
  if (A_.semiring() != Semiring::max_plus || B_.semiring() != Semiring::max_plus)
    throw std::invalid_argument("game matrices must be max-plus");
  if (A_.rows() == 0 || A_.cols() == 0) throw std::invalid_argument("game needs at least one node per player");
  auto v = validate(A_, B_);
  if (!v.empty()) throw AssumptionViolated(std::move(v));
}

void MeanPayoffGame::check(const MaxStrategy& sigma) const {
  if (sigma.succ.size() != m()) throw std::invalid_argument("Max strategy has wrong length");
  for (std::size_t i = 0; i < m(); ++i)
    if (sigma.succ[i] >= n() || !B_(i, sigma.succ[i]).is_finite())
      throw std::invalid_argument("Max strategy picks a missing arc at node " + std::to_string(i + 1));
}

void MeanPayoffGame::check(const MinStrategy& tau) const {
  if (tau.succ.size() != n()) throw std::invalid_argument("Min strategy has wrong length");
  for (std::size_t j = 0; j < n(); ++j)
    if (tau.succ[j] >= m() || !A_(tau.succ[j], j).is_finite())
      throw std::invalid_argument("Min strategy picks a missing arc at node " + std::to_string(j + 1));
}

Rational MeanPayoffGame::max_abs_payment() const {
  Rational w(0);
  for (const TropMatrix* E : {&A_, &B_})
    for (std::size_t i = 0; i < m(); ++i)
      for (std::size_t j = 0; j < n(); ++j)
        if ((*E)(i, j).is_finite()) w = std::max(w, Rational(abs((*E)(i, j).value())));
  return w;
}

Vector dynamic_operator(const MeanPayoffGame& g, const Vector& x) {
  return residual_apply(g.A(), trop_matvec(g.B(), x));
}

TropMatrix restrict_max(const MeanPayoffGame& g, const MaxStrategy& sigma) {
  g.check(sigma);
  TropMatrix R(g.n(), g.n(), Semiring::min_plus);
  for (std::size_t i = 0; i < g.m(); ++i) {
    std::size_t l = sigma.succ[i];
    for (std::size_t j = 0; j < g.n(); ++j) {
      if (!g.A()(i, j).is_finite()) continue;
      ExtendedNumber w(Rational(g.B()(i, l).value() - g.A()(i, j).value()));
      R.set(j, l, min_of(R(j, l), w));
    }
  }
  return R;
}

TropMatrix restrict_min(const MeanPayoffGame& g, const MinStrategy& tau) {
  g.check(tau);
  TropMatrix R(g.n(), g.n(), Semiring::max_plus);
  for (std::size_t j = 0; j < g.n(); ++j) {
    std::size_t i = tau.succ[j];
    for (std::size_t l = 0; l < g.n(); ++l)
      if (g.B()(i, l).is_finite()) R.set(j, l, ExtendedNumber(Rational(g.B()(i, l).value() - g.A()(i, j).value())));
  }
  return R;
}

Rational play_outcome(const MeanPayoffGame& g, std::size_t j, const MinStrategy& tau, const MaxStrategy& sigma) {
  g.check(tau);
  g.check(sigma);
  if (j >= g.n()) throw std::out_of_range("play_outcome: start node");
  std::vector<long> first_turn(g.n(), -1);
  std::vector<Rational> weight_at(g.n());
  Rational total(0);
  long turn = 0;
  while (first_turn[j] < 0) {
    first_turn[j] = turn;
    weight_at[j] = total;
    std::size_t i = tau.succ[j];
    std::size_t l = sigma.succ[i];
    total += g.B()(i, l).value() - g.A()(i, j).value();
    ++turn;
    j = l;
  }
  return (total - weight_at[j]) / Rational(turn - first_turn[j]);
}

Rational brute_force_value(const MeanPayoffGame& g, std::size_t j) {
  if (j >= g.n()) throw std::out_of_range("brute_force_value: node");
  std::vector<std::vector<std::size_t>> tau_opts(g.n()), sigma_opts(g.m());
  double pairs = 1;
  for (std::size_t l = 0; l < g.n(); ++l) {
    for (std::size_t i = 0; i < g.m(); ++i)
      if (g.A()(i, l).is_finite()) tau_opts[l].push_back(i);
    pairs *= static_cast<double>(tau_opts[l].size());
  }
  for (std::size_t i = 0; i < g.m(); ++i) {
    for (std::size_t l = 0; l < g.n(); ++l)
      if (g.B()(i, l).is_finite()) sigma_opts[i].push_back(l);
    pairs *= static_cast<double>(sigma_opts[i].size());
  }
  if (pairs > 1e6) throw TooLarge("brute_force_value: more than 1e6 strategy pairs");

  // Odometer over choice indices.
  auto next = [](std::vector<std::size_t>& idx, const std::vector<std::vector<std::size_t>>& opts) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (++idx[k] < opts[k].size()) return true;
      idx[k] = 0;
    }
    return false;
  };
  std::vector<std::size_t> ti(g.n(), 0);
  std::optional<Rational> best_min;
  do {
    MinStrategy tau{std::vector<std::size_t>(g.n())};
    for (std::size_t l = 0; l < g.n(); ++l) tau.succ[l] = tau_opts[l][ti[l]];
    std::vector<std::size_t> si(g.m(), 0);
    std::optional<Rational> best_max;
    do {
      MaxStrategy sigma{std::vector<std::size_t>(g.m())};
      for (std::size_t i = 0; i < g.m(); ++i) sigma.succ[i] = sigma_opts[i][si[i]];
      Rational r = play_outcome(g, j, tau, sigma);
      if (!best_max || *best_max < r) best_max = r;
    } while (next(si, sigma_opts));
    if (!best_min || *best_max < *best_min) best_min = best_max;
  } while (next(ti, tau_opts));
  return *best_min;
}

Vector max_only_values(const MeanPayoffGame& g, const MaxStrategy& sigma) {
  return cycle_time_vector(restrict_max(g, sigma), MeanMode::min);
}

Vector min_only_values(const MeanPayoffGame& g, const MinStrategy& tau) {
  return cycle_time_vector(restrict_min(g, tau), MeanMode::max);
}

bool satisfies(const TropMatrix& A, const TropMatrix& B, const Vector& x) {
  return leq(trop_matvec(A, x), trop_matvec(B, x));
}

std::optional<Vector> feasibility_witness(const MeanPayoffGame& g, std::size_t i) {
  if (i >= g.n()) throw std::out_of_range("feasibility_witness: node");
  WinningReport rep = winning_oracle(g);
  if (!rep.winning[i]) return std::nullopt;
  AnchoredSolution sol;
  try {
    sol = anchored_least_solution(g.A(), g.B(), rep.sigma.succ, i);
  } catch (const PositiveCycleDiverges&) {
    throw InternalCertificateMismatch("feasibility_witness: least solution diverges for a winning strategy");
  }
  if (!sol.second_ok || !satisfies(g.A(), g.B(), sol.y))
    throw InternalCertificateMismatch("feasibility_witness: constructed vector fails substitution");
  return sol.y;
}

GameValueReport game_value_report(const MeanPayoffGame& g) {
  GameValueReport r;
  WinningReport w = winning_oracle(g);
  r.winning = w.winning;
  r.sigma = w.sigma;
  r.tau = w.tau;
  for (std::size_t j = 0; j < g.n(); ++j) r.chi.push_back(game_value(g, j));
  return r;
}

}  // namespace tropfrac
