#include "tropfrac/solver.hpp"

#include <algorithm>

#include "tropfrac/digraph.hpp"

namespace tropfrac {

const char* status_name(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::unbounded: return "unbounded";
    default: return "infeasible";
  }
}

const char* method_name(Method m) {
  switch (m) {
    case Method::newton: return "newton";
    case Method::bisection: return "bisection";
    default: return "negative-newton";
  }
}

Method parse_method(const std::string& s) {
  if (s == "newton") return Method::newton;
  if (s == "bisection") return Method::bisection;
  if (s == "negative-newton") return Method::negative_newton;
  throw std::invalid_argument("unknown method '" + s + "' (expected newton, bisection or negative-newton)");
}

bool solvable_with_finite(const TropMatrix& C, const TropMatrix& D, const std::vector<char>& forced,
                          std::size_t target) {
  const std::size_t rows = C.rows(), cols = C.cols();
  enum State : char { alive, dead_neg, freed };
  std::vector<char> col(cols, alive), row(rows, 1);
  for (std::size_t j = 0; j < cols; ++j)
    if (forced[j]) col[j] = dead_neg;
  if (col[target] == dead_neg) return false;

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < rows; ++i) {
      if (!row[i]) continue;
      bool rhs = false;
      for (std::size_t j = 0; j < cols && !rhs; ++j) rhs = col[j] == alive && D(i, j).is_finite();
      if (rhs) continue;
      // Right side is -inf: every variable on the left must be -inf too.
      for (std::size_t j = 0; j < cols; ++j)
        if (col[j] == alive && C(i, j).is_finite()) {
          if (j == target) return false;
          col[j] = dead_neg;
        }
      row[i] = 0;
      changed = true;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (col[j] != alive) continue;
      bool lhs = false;
      for (std::size_t i = 0; i < rows && !lhs; ++i) lhs = row[i] && C(i, j).is_finite();
      if (lhs) continue;
      // Unconstrained from above: large enough to settle every row it enters.
      if (j == target) return true;
      col[j] = freed;
      for (std::size_t i = 0; i < rows; ++i)
        if (row[i] && D(i, j).is_finite()) row[i] = 0;
      changed = true;
    }
  }

  std::vector<std::size_t> rs, cs;
  for (std::size_t i = 0; i < rows; ++i)
    if (row[i]) rs.push_back(i);
  std::size_t t = 0;
  for (std::size_t j = 0; j < cols; ++j)
    if (col[j] == alive) {
      if (j == target) t = cs.size();
      cs.push_back(j);
    }
  TropMatrix A(rs.size(), cs.size()), B(rs.size(), cs.size());
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b) {
      A.set(a, b, C(rs[a], cs[b]));
      B.set(a, b, D(rs[a], cs[b]));
    }
  return winning_oracle(MeanPayoffGame(std::move(A), std::move(B))).winning[t];
}

Precheck precheck(const HomogeneousInstance& H) {
  std::vector<char> forced(H.u.size());
  for (std::size_t j = 0; j < H.u.size(); ++j) forced[j] = H.u[j].is_finite();
  if (solvable_with_finite(H.C, H.D, forced, H.n()))
    return {Precheck::Kind::unbounded, 0, "a feasible point makes px v r = -inf"};
  if (!H.v_has_finite()) return {Precheck::Kind::infeasible, 0, "qx v s = -inf at every point"};
  auto [lo, hi] = initial_bounds(H);
  if (!phi_nonneg(H, hi).nonneg) return {Precheck::Kind::infeasible, hi, "phi(lambda+) < 0"};
  if (phi_nonneg(H, lo).nonneg) {
    if (phi_nonneg(H, Rational(lo - 1)).nonneg) return {Precheck::Kind::unbounded, lo, "phi(lambda- - 1) >= 0"};
    return {Precheck::Kind::optimal_at_lower_bound, lo, ""};
  }
  return {Precheck::Kind::proceed, hi, ""};
}

NewtonStep newton_step(const HomogeneousInstance& H, const MaxStrategy& sigma) {
  const std::size_t m = H.m();
  if (sigma.succ.size() != m + 1) throw std::invalid_argument("newton_step: sigma has the wrong length");
  const std::size_t l = sigma.succ[m];
  if (l >= H.v.size() || !H.v[l].is_finite()) throw std::invalid_argument("newton_step: sigma(m+1) picks a missing arc");
  std::vector<std::size_t> rows(sigma.succ.begin(), sigma.succ.begin() + static_cast<std::ptrdiff_t>(m));
  NewtonStep st;
  st.anchor = l;
  st.solution = anchored_least_solution(H.C, H.D, rows, l);
  if (!st.solution.second_ok) throw SecondSubsystemViolated("newton_step: least solution breaks a row with sigma(i) = l");
  ExtendedNumber uy;
  for (std::size_t j = 0; j < H.u.size(); ++j) uy = max_of(uy, plus(Semiring::max_plus, H.u[j], st.solution.y[j]));
  st.lambda = uy.is_finite() ? ExtendedNumber(Rational(uy.value() - H.v[l].value())) : ExtendedNumber::neg_inf();
  return st;
}

std::optional<MaxStrategy> left_optimal_max_strategy(const HomogeneousInstance& H, const Rational& lambda) {
  MeanPayoffGame g = perturbed_game(H, lambda);
  if (!winning_oracle(g).winning[H.n()]) return std::nullopt;
  // Optimal, not merely winning: phi^sigma must agree with phi just left of lambda.
  return game_value_with_strategies(g, H.n()).sigma;
}

ExtendedNumber min_zero_phi_tau(const HomogeneousInstance& H, const MinStrategy& tau) {
  MeanPayoffGame g = game_at(H, 0);
  g.check(tau);
  const std::size_t n1 = g.n(), m1 = g.m(), N = n1 + m1;
  const std::size_t obj = n1 + m1 - 1;
  WeightedDigraph D(N);
  for (std::size_t j = 0; j < n1; ++j) D.add_arc(j, n1 + tau.succ[j], Rational(-g.A()(tau.succ[j], j).value()));
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t l = 0; l < n1; ++l)
      if (g.B()(i, l).is_finite()) D.add_arc(n1 + i, l, g.B()(i, l).value());
  auto acc = reachable_from(D, n1 - 1);
  if (!acc[obj]) return ExtendedNumber::pos_inf();

  // Longest path from each accessible node to obj, obj not expanded. Other
  // accessible cycles are negative, so this settles within N rounds.
  std::vector<ExtendedNumber> dist(N, ExtendedNumber::neg_inf());
  dist[obj] = ExtendedNumber(0);
  auto relax_from = [&](std::size_t x) {
    ExtendedNumber best = ExtendedNumber::neg_inf();
    for (std::size_t a : D.out(x)) {
      const Arc& arc = D.arcs()[a];
      if (!acc[arc.target]) continue;
      best = max_of(best, plus(Semiring::max_plus, ExtendedNumber(arc.weight), dist[arc.target]));
    }
    return best;
  };
  for (std::size_t round = 0;; ++round) {
    if (round > N + 1) throw std::logic_error("min_zero_phi_tau: nonnegative cycle avoiding the objective node");
    bool changed = false;
    for (std::size_t x = 0; x < N; ++x) {
      if (!acc[x] || x == obj) continue;
      ExtendedNumber b = relax_from(x);
      if (dist[x] < b) {
        dist[x] = b;
        changed = true;
      }
    }
    if (!changed) break;
  }
  ExtendedNumber cycle = relax_from(obj);
  if (!cycle.is_finite()) return ExtendedNumber::pos_inf();
  return ExtendedNumber(Rational(-cycle.value()));
}

Integer newton_cap(const HomogeneousInstance& H) {
  Rational c = 4 * H.M * Rational(static_cast<long>(H.min_mn() + 1)) + 1;
  return ceil_of(c);
}

std::size_t bisection_cap(const HomogeneousInstance& H) {
  Rational g = 4 * H.M * Rational(static_cast<long>(H.min_mn() + 1));
  if (g <= 1) return 1;
  Integer gi = ceil_of(g), p = 1;
  std::size_t bits = 0;
  while (p < gi) {
    p *= 2;
    ++bits;
  }
  return bits + 1;
}

namespace {

Rational unscale(const HomogeneousInstance& H, const Rational& x) { return x / Rational(H.scale); }

Vector unscale(const HomogeneousInstance& H, const Vector& y) {
  Vector out;
  for (const auto& x : y) out.push_back(x.is_finite() ? ExtendedNumber(unscale(H, x.value())) : x);
  return out;
}

void finish_optimal(const HomogeneousInstance& H, const Rational& lambda, SolveOutcome& out) {
  OptimalityCertificate cert = make_optimality_certificate(H, lambda);
  out.status = Status::optimal;
  out.lambda = cert.lambda;
  out.witness = cert.witness;
  out.optimality = std::move(cert);
}

void finish_unbounded(const HomogeneousInstance& H, std::string reason, SolveOutcome& out) {
  auto cert = make_unboundedness_certificate(H);
  if (!cert) throw CertificateSynthesisFailed("unboundedness concluded but node n+1 loses the penalized game");
  out.status = Status::unbounded;
  out.unboundedness = std::move(cert);
  out.reason = std::move(reason);
}

// Runs precheck; returns lambda+ when the chosen method must run.
std::optional<Rational> start(const HomogeneousInstance& H, SolveOutcome& out) {
  Precheck p = precheck(H);
  switch (p.kind) {
    case Precheck::Kind::infeasible:
      out.status = Status::infeasible;
      out.reason = p.reason;
      return std::nullopt;
    case Precheck::Kind::unbounded:
      finish_unbounded(H, p.reason, out);
      return std::nullopt;
    case Precheck::Kind::optimal_at_lower_bound:
      finish_optimal(H, p.lambda, out);
      return std::nullopt;
    default:
      return p.lambda;
  }
}

Integer as_integer(std::size_t k) { return Integer(static_cast<unsigned long>(k)); }

}  // namespace

SolveOutcome bisection_solve(const HomogeneousInstance& H, const SolveOptions& opt) {
  SolveOutcome out;
  auto plus_bound = start(H, out);
  if (!plus_bound) return out;
  Rational hi = *plus_bound, lo = initial_bounds(H).first;
  const std::size_t cap = bisection_cap(H);
  while (hi - lo > 1) {
    if (++out.iterations > cap)
      throw IterationCapExceeded("bisection exceeded " + std::to_string(cap) + " oracle calls");
    Rational mid(ceil_of((hi + lo) / 2));
    bool ok = phi_nonneg(H, mid).nonneg;
    ++out.oracle_calls;
    TraceEntry e;
    e.lambda = unscale(H, mid);
    e.nonneg = ok;
    if (opt.trace_phi) e.phi = unscale(H, phi(H, mid));
    out.trace.push_back(std::move(e));
    (ok ? hi : lo) = mid;
  }
  finish_optimal(H, hi, out);
  return out;
}

SolveOutcome positive_newton_solve(const HomogeneousInstance& H, const SolveOptions& opt) {
  SolveOutcome out;
  auto plus_bound = start(H, out);
  if (!plus_bound) return out;
  Rational lambda = *plus_bound;
  if (opt.lambda0) {
    lambda = Rational(ceil_of(*opt.lambda0 * Rational(H.scale)));
    ++out.oracle_calls;
    if (!phi_nonneg(H, lambda).nonneg)
      throw std::invalid_argument("lambda0 = " + to_string(*opt.lambda0) + " is below the optimum (phi < 0)");
  }
  const Integer cap = newton_cap(H);
  for (;;) {
    if (as_integer(++out.iterations) > cap)
      throw IterationCapExceeded("positive Newton exceeded " + cap.get_str() + " iterations");
    TraceEntry e;
    e.lambda = unscale(H, lambda);
    if (opt.trace_phi) e.phi = unscale(H, phi(H, lambda));
    auto sigma = left_optimal_max_strategy(H, lambda);
    ++out.oracle_calls;
    if (!sigma) {
      out.trace.push_back(std::move(e));
      finish_optimal(H, lambda, out);
      return out;
    }
    NewtonStep st = newton_step(H, *sigma);
    e.sigma = std::move(*sigma);
    e.anchor = st.anchor;
    e.least = unscale(H, st.solution.y);
    out.trace.push_back(std::move(e));
    if (st.lambda.is_neg_inf()) {
      finish_unbounded(H, "Newton step reached -inf", out);
      return out;
    }
    const Rational& next = st.lambda.value();
    if (next == lambda) {
      finish_optimal(H, lambda, out);
      return out;
    }
    if (next > lambda) throw std::logic_error("positive Newton step increased lambda");
    lambda = next;
  }
}

SolveOutcome negative_newton_solve(const HomogeneousInstance& H, const SolveOptions& opt) {
  SolveOutcome out;
  auto plus_bound = start(H, out);
  if (!plus_bound) return out;
  Rational lambda = initial_bounds(H).first;
  const Integer cap = newton_cap(H);
  for (;;) {
    if (as_integer(++out.iterations) > cap)
      throw IterationCapExceeded("negative Newton exceeded " + cap.get_str() + " iterations");
    PhiSign s = phi_nonneg(H, lambda);
    ++out.oracle_calls;
    TraceEntry e;
    e.lambda = unscale(H, lambda);
    e.nonneg = s.nonneg;
    if (opt.trace_phi) e.phi = unscale(H, phi(H, lambda));
    if (s.nonneg) {
      out.trace.push_back(std::move(e));
      finish_optimal(H, lambda, out);
      return out;
    }
    ExtendedNumber next = min_zero_phi_tau(H, s.tau);
    e.tau = std::move(s.tau);
    out.trace.push_back(std::move(e));
    if (next.is_pos_inf() || next.value() > *plus_bound) {
      out.status = Status::infeasible;
      out.reason = "phi_tau < 0 up to lambda+";
      return out;
    }
    if (next.value() <= lambda) throw std::logic_error("negative Newton step did not increase lambda");
    lambda = next.value();
  }
}

SolveOutcome solve(const HomogeneousInstance& H, Method method, const SolveOptions& opt) {
  switch (method) {
    case Method::bisection: return bisection_solve(H, opt);
    case Method::negative_newton: return negative_newton_solve(H, opt);
    default: return positive_newton_solve(H, opt);
  }
}

SolveOutcome solve(const LfpInstance& inst, Method method, const SolveOptions& opt) {
  return solve(homogenize(inst), method, opt);
}

}  // namespace tropfrac
