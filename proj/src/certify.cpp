#include "tropfrac/certify.hpp"

#include "tropfrac/digraph.hpp"

namespace tropfrac {

namespace {

// Min node j is vertex j, Max node i is vertex n+1+i.
struct Bipartite {
  std::size_t min_nodes, max_nodes;
  std::size_t max_vertex(std::size_t i) const { return min_nodes + i; }
};

ExtendedNumber times(const ExtendedNumber& x, const Integer& s) {
  return x.is_finite() ? ExtendedNumber(Rational(x.value() * Rational(s))) : x;
}

// Accessible components from `start`; returns the offending mean if any
// accessible cyclic component violates `ok`.
template <class Ok>
std::optional<Rational> first_bad_mean(const WeightedDigraph& D, std::size_t start, MeanMode mode, Ok ok) {
  SccAccess sa = scc_and_access(D, start);
  auto means = cycle_means(D, sa.scc, mode);
  for (std::size_t c = 0; c < sa.scc.count(); ++c) {
    if (!means[c]) continue;
    if (!sa.access[sa.scc.members[c].front()]) continue;
    if (!ok(*means[c])) return means[c];
  }
  return std::nullopt;
}

CheckResult reject(std::string cond, std::string why) { return {false, std::move(cond), std::move(why)}; }

}  // namespace

CheckResult check_optimality(const HomogeneousInstance& H, const OptimalityCertificate& cert) {
  if (!H.v_has_finite()) throw std::invalid_argument("objective denominator is -inf everywhere; nothing to certify");
  const Rational lam = cert.lambda * Rational(H.scale);
  MeanPayoffGame g = game_at(H, lam);
  const std::size_t m1 = g.m(), n1 = g.n();
  if (cert.tau.succ.size() != n1)
    throw std::invalid_argument("tau has " + std::to_string(cert.tau.succ.size()) + " entries, expected " +
                                std::to_string(n1));
  g.check(cert.tau);

  Bipartite bp{n1, m1};
  auto build = [&](bool drop_objective) {
    WeightedDigraph D(n1 + m1);
    const std::size_t skip = m1 - 1;
    for (std::size_t j = 0; j < n1; ++j) {
      std::size_t i = cert.tau.succ[j];
      if (drop_objective && i == skip) continue;
      D.add_arc(j, bp.max_vertex(i), Rational(-g.A()(i, j).value()));
    }
    for (std::size_t i = 0; i < m1; ++i) {
      if (drop_objective && i == skip) continue;
      for (std::size_t l = 0; l < n1; ++l)
        if (g.B()(i, l).is_finite()) D.add_arc(bp.max_vertex(i), l, g.B()(i, l).value());
    }
    return D;
  };

  const std::size_t start = n1 - 1;
  if (auto bad = first_bad_mean(build(false), start, MeanMode::max, [](const Rational& x) { return x <= 0; }))
    return reject("a", "an accessible cycle has positive mean weight " + to_string(*bad));
  if (auto bad = first_bad_mean(build(true), start, MeanMode::max, [](const Rational& x) { return x < 0; }))
    return reject("b", "an accessible cycle avoiding the objective node has nonnegative mean weight " +
                           to_string(*bad));

  if (cert.witness) {
    const Vector& w = *cert.witness;
    if (w.size() != n1)
      throw std::invalid_argument("witness has " + std::to_string(w.size()) + " entries, expected " +
                                  std::to_string(n1));
    Vector y;
    for (const auto& x : w) {
      if (x.is_pos_inf()) throw std::invalid_argument("witness contains +inf");
      y.push_back(times(x, H.scale));
    }
    if (!y.back().is_finite()) return reject("c", "witness has y_{n+1} = -inf");
    if (!satisfies(g.A(), g.B(), y)) return reject("c", "witness violates U y <= V(lambda) y");
  } else if (!phi_nonneg(H, lam).nonneg) {
    return reject("c", "phi(lambda) < 0");
  }
  return {true, "", ""};
}

CheckResult check_unboundedness(const HomogeneousInstance& H, const UnboundednessCertificate& cert) {
  const std::size_t m = H.m(), n1 = H.C.cols();
  const auto& s = cert.sigma.succ;
  if (s.size() != m + 1)
    throw std::invalid_argument("sigma has " + std::to_string(s.size()) + " entries, expected " +
                                std::to_string(m + 1));
  for (std::size_t i = 0; i < m; ++i)
    if (s[i] >= n1 || !H.D(i, s[i]).is_finite())
      throw std::invalid_argument("sigma(" + std::to_string(i + 1) + ") picks a missing arc");
  const bool objective_moves = H.v_has_finite();
  if (objective_moves && (s[m] >= n1 || !H.v[s[m]].is_finite()))
    throw std::invalid_argument("sigma(" + std::to_string(m + 1) + ") picks a missing arc");

  Bipartite bp{n1, m + 1};
  WeightedDigraph D(n1 + m + 1);
  for (std::size_t j = 0; j < n1; ++j) {
    for (std::size_t i = 0; i < m; ++i)
      if (H.C(i, j).is_finite()) D.add_arc(j, bp.max_vertex(i), Rational(-H.C(i, j).value()));
    if (H.u[j].is_finite()) D.add_arc(j, bp.max_vertex(m), Rational(-H.u[j].value()));
  }
  for (std::size_t i = 0; i < m; ++i) D.add_arc(bp.max_vertex(i), s[i], H.D(i, s[i]).value());
  if (objective_moves) D.add_arc(bp.max_vertex(m), s[m], H.v[s[m]].value());

  const std::size_t start = n1 - 1;
  SccAccess sa = scc_and_access(D, start);
  const std::size_t obj = bp.max_vertex(m);
  if (sa.access[obj] && sa.scc.members[sa.scc.component[obj]].size() > 1)
    return reject("avoid", "an accessible cycle passes through the objective node");
  auto means = cycle_means(D, sa.scc, MeanMode::min);
  for (std::size_t c = 0; c < sa.scc.count(); ++c)
    if (means[c] && sa.access[sa.scc.members[c].front()] && *means[c] < 0)
      return reject("nonnegative", "an accessible cycle has negative mean weight " + to_string(*means[c]));
  return {true, "", ""};
}

OptimalityCertificate make_optimality_certificate(const HomogeneousInstance& H, const Rational& lambda_scaled) {
  const std::size_t target = H.n();
  WinningReport w = winning_oracle(perturbed_game(H, lambda_scaled));
  if (w.winning[target])
    throw CertificateSynthesisFailed("lambda = " + to_string(lambda_scaled) + " is not the minimal zero");
  auto y = feasibility_witness(game_at(H, lambda_scaled), target);
  if (!y) throw CertificateSynthesisFailed("phi < 0 at lambda = " + to_string(lambda_scaled));
  Rational inv = Rational(1) / Rational(H.scale);
  OptimalityCertificate cert;
  cert.lambda = lambda_scaled * inv;
  cert.tau = std::move(w.tau);
  Vector wit;
  for (const auto& x : *y) wit.push_back(x.is_finite() ? ExtendedNumber(Rational(x.value() * inv)) : x);
  cert.witness = std::move(wit);
  CheckResult r = check_optimality(H, cert);
  if (!r.accepted) throw CertificateSynthesisFailed("generated certificate rejected (" + r.condition + "): " + r.reason);
  return cert;
}

std::optional<UnboundednessCertificate> make_unboundedness_certificate(const HomogeneousInstance& H) {
  WinningReport w = winning_oracle(penalized_game(H));
  if (!w.winning[H.n()]) return std::nullopt;
  UnboundednessCertificate cert{std::move(w.sigma)};
  CheckResult r = check_unboundedness(H, cert);
  if (!r.accepted)
    throw CertificateSynthesisFailed("generated unboundedness certificate rejected (" + r.condition + "): " + r.reason);
  return cert;
}

}  // namespace tropfrac
