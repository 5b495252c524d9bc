// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "brute.hpp"
#include "tropfrac/certify.hpp"
#include "tropfrac/germs.hpp"
#include "tropfrac/io.hpp"
#include "tropfrac/solver.hpp"

using namespace tropfrac;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

InstanceDocument load(const std::string& name) { return parse_instance(brute::read_file(brute::data_path(name))); }

Rational q(const char* s) { return parse_rational(s); }
ExtendedNumber e(const char* s) { return ExtendedNumber::parse(s); }

std::string trace_text(const SolveOutcome& r) {
  std::string s;
  for (const auto& t : r.trace) s += (s.empty() ? "" : ",") + to_string(t.lambda);
  return s;
}

// Caps observed across every random run below.
struct CapLog {
  std::size_t newton_runs = 0, bisection_runs = 0;
  void record(const HomogeneousInstance& H, Method m, const SolveOutcome& r) {
    if (m == Method::newton) {
      expect(Integer(static_cast<unsigned long>(r.iterations)) <= newton_cap(H), "Newton iterations above cap");
      ++newton_runs;
    } else if (m == Method::bisection) {
      expect(r.oracle_calls <= bisection_cap(H), "bisection oracle calls above cap");
      ++bisection_runs;
    }
  }
} caps;

std::string criterion1() {
  HomogeneousInstance H = load("example2.json").homogeneous();
  SolveOptions opt;
  opt.lambda0 = 15;
  opt.trace_phi = true;
  SolveOutcome r = positive_newton_solve(H, opt);
  const std::vector<Rational> lam{15, 4, 1, 0}, ph{q("11/2"), q("3/2"), q("1/2"), 0};
  expect(r.trace.size() == 4, "trace " + trace_text(r));
  for (std::size_t k = 0; k < 4; ++k) {
    expect(r.trace[k].lambda == lam[k], "trace " + trace_text(r));
    expect(r.trace[k].phi && *r.trace[k].phi == ph[k], "phi at iterate " + std::to_string(k));
  }
  expect(r.status == Status::optimal && *r.lambda == 0, "lambda* != 0");
  return "trace 15,4,1,0; phi 11/2,3/2,1/2,0; lambda* = 0";
}

std::string criterion2() {
  InstanceDocument doc = load("example1.json");
  HomogeneousInstance H = doc.homogeneous();
  SolveOptions opt;
  opt.lambda0 = 3;
  SolveOutcome r = positive_newton_solve(H, opt);
  expect(trace_text(r) == "3,-4,-5", "trace " + trace_text(r));
  const Vector& y0 = *r.trace[0].least;
  const Vector& y1 = *r.trace[1].least;
  expect(y0[0] == e("-inf") && y0[2] == e("-1"), "first least solution (x1,x3) = (" + y0[0].str() + "," + y0[2].str() + ")");
  expect(y1[0] == e("-1") && y1[2] == e("-2"), "second least solution (x1,x3) = (" + y1[0].str() + "," + y1[2].str() + ")");
  expect(doc.maximize && -*r.lambda == 5, "maximum != 5");
  return "trace 3,-4,-5; (x1,x3) = (-inf,-1) then (-1,-2); maximum 5";
}

std::string criterion3() {
  HomogeneousInstance H = load("example3.json").homogeneous();
  NewtonStep st = newton_step(H, MaxStrategy{{3, 1, 0, 3, 0}});
  expect(st.anchor == 0, "anchor");
  expect(st.solution.z == Vector{e("-1"), e("-2")}, "E*h");
  const Vector& y = st.solution.y;
  expect(y[1] == e("-1") && y[2] == e("-inf") && y[3] == e("-2"), "least solution");
  expect(st.lambda == e("-4"), "lambda1 = " + st.lambda.str());
  SolveOptions opt;
  opt.lambda0 = 0;
  SolveOutcome r = positive_newton_solve(H, opt);
  expect(trace_text(r) == "0,-4" && *r.lambda == -4, "trace " + trace_text(r));
  return "E*h = (-1,-2); (y2,y3,y4) = (-1,-inf,-2); lambda1 = -4 terminal";
}

std::string criterion4() {
  HomogeneousInstance H = load("example2.json").homogeneous();
  OptimalityCertificate c{0, MinStrategy{{7, 3, 3}}, Vector{e("-2"), e("2"), e("0")}};
  expect(check_optimality(H, c).accepted, "example certificate rejected");
  c.lambda = -1;
  CheckResult r = check_optimality(H, c);
  expect(!r.accepted && r.condition == "c", "lambda* = -1 not rejected on (c): " + r.condition);
  return "tau=(8,4,4) accepted at 0, rejected on (c) at -1";
}

std::string criterion5() {
  std::size_t games = 0;
  // Exhaustive 2x2, payments in {-2..2}.
  for (int code = 0; code < 390625; ++code) {
    int c = code;
    TropMatrix A(2, 2), B(2, 2);
    for (std::size_t k = 0; k < 8; ++k, c /= 5) {
      ExtendedNumber x(c % 5 - 2);
      if (k < 4) A.set(k / 2, k % 2, x);
      else B.set((k - 4) / 2, k % 2, x);
    }
    MeanPayoffGame g(A, B);
    for (std::size_t j = 0; j < 2; ++j)
      expect(game_value(g, j) == brute_force_value(g, j), "2x2 game " + std::to_string(code));
    ++games;
  }
  brute::Rng rng(5);
  for (int t = 0; t < 500; ++t) {
    MeanPayoffGame g = brute::random_game(rng, 3, 3, 5, 0.3);
    for (std::size_t j = 0; j < 3; ++j) {
      Rational v = game_value(g, j);
      expect(v == brute_force_value(g, j) && v == brute::game_value(g.A(), g.B(), j), "random 3x3 game " + std::to_string(t));
    }
    ++games;
  }
  return std::to_string(games) + " games agree";
}

std::string criterion6() {
  brute::Rng rng(6);
  std::size_t counts[3] = {0, 0, 0}, brute_checked = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t m = static_cast<std::size_t>(rng.integer(1, 8)), n = static_cast<std::size_t>(rng.integer(1, 8));
    LfpInstance inst = brute::random_instance(rng, m, n, 10, t % 2 ? 0.5 : 0.0);
    HomogeneousInstance H = homogenize(inst);
    std::optional<SolveOutcome> first;
    for (Method meth : {Method::newton, Method::bisection, Method::negative_newton}) {
      SolveOutcome r = solve(H, meth);
      caps.record(H, meth, r);
      if (!first) {
        first = r;
        continue;
      }
      expect(r.status == first->status && r.lambda == first->lambda,
             "instance " + std::to_string(t) + ": " + method_name(meth) + " disagrees");
    }
    if (m <= 3 && n <= 3) {
      brute::Answer b = brute::solve(H);
      expect(static_cast<int>(b.kind) == static_cast<int>(first->status) &&
                 (b.kind != brute::Kind::optimal || b.lambda == *first->lambda * Rational(H.scale)),
             "instance " + std::to_string(t) + ": brute-force classification disagrees");
      ++brute_checked;
    }
    ++counts[static_cast<int>(first->status)];
  }
  return std::to_string(counts[0]) + " optimal, " + std::to_string(counts[1]) + " unbounded, " +
         std::to_string(counts[2]) + " infeasible; all three methods agree, " +
         std::to_string(brute_checked) + " match brute force";
}

MaxStrategy random_sigma(brute::Rng& rng, const MeanPayoffGame& g) {
  MaxStrategy s;
  for (std::size_t i = 0; i < g.m(); ++i) {
    std::vector<std::size_t> opts;
    for (std::size_t l = 0; l < g.n(); ++l)
      if (g.B()(i, l).is_finite()) opts.push_back(l);
    s.succ.push_back(opts[static_cast<std::size_t>(rng.integer(0, static_cast<long>(opts.size()) - 1))]);
  }
  return s;
}

MinStrategy random_tau(brute::Rng& rng, const MeanPayoffGame& g) {
  MinStrategy s;
  for (std::size_t j = 0; j < g.n(); ++j) {
    std::vector<std::size_t> opts;
    for (std::size_t i = 0; i < g.m(); ++i)
      if (g.A()(i, j).is_finite()) opts.push_back(i);
    s.succ.push_back(opts[static_cast<std::size_t>(rng.integer(0, static_cast<long>(opts.size()) - 1))]);
  }
  return s;
}

std::string criterion7() {
  brute::Rng rng(7);
  int done = 0;
  while (done < 50) {
    std::size_t m = static_cast<std::size_t>(rng.integer(1, 4)), n = static_cast<std::size_t>(rng.integer(1, 4));
    HomogeneousInstance H = homogenize(brute::random_instance(rng, m, n, 5, done % 2 ? 0.4 : 0.0));
    if (!H.v_has_finite()) continue;
    auto [lo, hi] = initial_bounds(H);
    const long K = static_cast<long>(H.min_mn()) + 1;
    // Monotone and 1-Lipschitz on a sample.
    std::vector<Rational> xs;
    for (int k = 0; k < 24; ++k) xs.push_back(brute::frac(rng.integer(-3 * K * 20, 3 * K * 20), K * 3) * (H.M + 1) / 10);
    std::sort(xs.begin(), xs.end());
    std::vector<Rational> ys;
    for (const auto& x : xs) ys.push_back(phi(H, x));
    for (std::size_t k = 1; k < xs.size(); ++k) {
      expect(ys[k - 1] <= ys[k], "phi decreases");
      expect(ys[k] - ys[k - 1] <= xs[k] - xs[k - 1], "phi not 1-Lipschitz");
    }
    // Partial spectral functions bracket phi.
    MeanPayoffGame g0 = game_at(H, 0);
    for (int k = 0; k < 10; ++k) {
      MaxStrategy s = random_sigma(rng, g0);
      MinStrategy t = random_tau(rng, g0);
      Rational x = xs[static_cast<std::size_t>(k) % xs.size()];
      Rational p = phi(H, x);
      expect(phi_sigma(H, s, x) <= p && p <= phi_tau(H, t, x), "phi^sigma <= phi <= phi_tau fails");
    }
    // Reconstruction.
    auto pieces = reconstruct(H);
    for (const auto& pc : pieces) {
      expect(pc.beta == 0 || pc.beta == 1, "beta");
      expect(pc.k >= 1 && pc.k <= K, "k");
      expect(abs(pc.alpha / pc.k) <= 2 * H.M, "|alpha/k| > 2M");
    }
    auto grid = farey_grid(Rational(-4 * H.M * K * K), Rational(4 * H.M * K * K), K);
    for (int k = 0; k < 100; ++k) {
      const Rational& x = grid[static_cast<std::size_t>(rng.integer(0, static_cast<long>(grid.size()) - 1))];
      bool found = false;
      for (const auto& pc : pieces)
        if (!(pc.lo.is_finite() && x < pc.lo.value()) && !(pc.hi.is_finite() && x > pc.hi.value())) {
          expect(pc.at(x) == phi(H, x), "piece disagrees with phi at " + to_string(x));
          found = true;
          break;
        }
      expect(found, "no piece covers " + to_string(x));
    }
    ++done;
  }
  return "50 instances: monotone, 1-Lipschitz, bracketed, pieces exact";
}

// Whether sigma attains the germ value at Min node j against every Min strategy.
bool secures(const GermGame& g, const MaxStrategy& sigma, std::size_t j) {
  const Germ value = germ_brute_force_value(g, j);
  std::vector<std::vector<std::size_t>> opts(g.n());
  for (std::size_t l = 0; l < g.n(); ++l)
    for (std::size_t i = 0; i < g.m(); ++i)
      if (!g.A[i][l].is_bottom()) opts[l].push_back(i);
  MinStrategy tau;
  tau.succ.resize(g.n());
  std::function<bool(std::size_t)> rec = [&](std::size_t l) {
    if (l == g.n()) return !(germ_play_outcome(g, j, tau, sigma) < value);
    for (std::size_t i : opts[l]) {
      tau.succ[l] = i;
      if (!rec(l + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

std::string criterion8() {
  // Exhaustive 2x2 germ games.
  std::size_t games = 0, checked = 0;
  std::vector<Germ> a_vals{Germ(0, 0), Germ(1, 0)}, b_vals;
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y) b_vals.push_back(Germ(x, y));
  const Rational eps[2] = {Rational(1, 16), Rational(1, 32)};
  for (int ca = 0; ca < 16; ++ca)
    for (int cb = 0; cb < 6561; ++cb) {
      GermGame g;
      g.A.assign(2, std::vector<Germ>(2));
      g.B = g.A;
      for (int k = 0, c = ca; k < 4; ++k, c /= 2) g.A[k / 2][k % 2] = a_vals[static_cast<std::size_t>(c % 2)];
      for (int k = 0, c = cb; k < 4; ++k, c /= 9) g.B[k / 2][k % 2] = b_vals[static_cast<std::size_t>(c % 9)];
      auto radius = germ_validity_radius(g);
      for (std::size_t j = 0; j < 2; ++j) {
        Germ v = germ_brute_force_value(g, j);
        for (const auto& ep : eps) {
          if (radius && !(ep < *radius)) continue;
          expect(v.at(ep) == brute_force_value(perturb(g, ep), j), "germ game " + std::to_string(ca) + "/" + std::to_string(cb));
          ++checked;
        }
      }
      ++games;
    }
  // Germ-optimal strategies against the perturbed-game strategies.
  brute::Rng rng(8);
  int instances = 0, steps = 0, differ = 0;
  std::string first_difference;
  while (instances < 50) {
    std::size_t m = static_cast<std::size_t>(rng.integer(1, 3)), n = static_cast<std::size_t>(rng.integer(1, 2));
    HomogeneousInstance H = homogenize(brute::random_instance(rng, m, n, 4, instances % 2 ? 0.4 : 0.0));
    if (precheck(H).kind != Precheck::Kind::proceed) continue;
    Rational lam = initial_bounds(H).second;
    for (int guard = 0; guard < 64; ++guard) {
      auto left = left_optimal_max_strategy(H, lam);
      if (!left) break;
      GermGame gg = germ_game_at(H, lam);
      expect(secures(gg, *left, H.n()), "solver strategy is not germ-optimal at lambda " + to_string(lam));
      NewtonStep a = newton_step(H, *left), b = newton_step(H, germ_optimal_max_strategy(gg));
      if (a.lambda != b.lambda) {
        if (!differ)
          first_difference = "instance " + std::to_string(instances) + " at lambda " + to_string(lam) + ": solver " +
                             a.lambda.str() + ", germ " + b.lambda.str();
        ++differ;
      }
      ++steps;
      if (!a.lambda.is_finite() || a.lambda.value() == lam) break;
      lam = a.lambda.value();
    }
    ++instances;
  }
  std::string detail = std::to_string(games) + " germ games (" + std::to_string(checked) + " eps checks); solver strategy germ-optimal in " +
                       std::to_string(steps) + " Newton steps; ";
  expect(differ == 0, detail + std::to_string(differ) + " steps where a different germ-optimal strategy gives another newton_step value, first " +
                          first_difference);
  return detail + "newton_step values agree";
}

std::string criterion9() {
  // Criterion 6 already recorded its runs; add a suite with larger coefficients.
  brute::Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    std::size_t m = static_cast<std::size_t>(rng.integer(1, 6)), n = static_cast<std::size_t>(rng.integer(1, 6));
    HomogeneousInstance H = homogenize(brute::random_instance(rng, m, n, 100, t % 3 ? 0.3 : 0.0));
    for (Method meth : {Method::newton, Method::bisection}) caps.record(H, meth, solve(H, meth));
  }
  return std::to_string(caps.newton_runs) + " Newton and " + std::to_string(caps.bisection_runs) +
         " bisection runs within their caps";
}

std::string criterion10() {
  brute::Rng rng(10);
  auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0;
  for (int t = 0; t < 20; ++t) {
    LfpInstance inst = brute::random_instance(rng, 50, 50, 500, 0.0);
    SolveOutcome r = solve(inst, Method::newton);
    total += r.iterations;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double avg = static_cast<double>(total) / 20;
  char buf[128];
  std::snprintf(buf, sizeof buf, "average %.2f Newton iterations, %.1f s", avg, secs);
  expect(avg < 30, buf);
  expect(secs < 60, buf);
  return buf;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> criteria{
      {"Example 2 golden Newton run", criterion1},
      {"Example 1 golden Newton run", criterion2},
      {"Example 3 Newton step", criterion3},
      {"certificate acceptance", criterion4},
      {"oracle equivalence", criterion5},
      {"method agreement", criterion6},
      {"spectral structure", criterion7},
      {"perturbation and germ consistency", criterion8},
      {"iteration caps", criterion9},
      {"scaling smoke test", criterion10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = criteria[k].second();
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2zu %s  %s: %s (%.1fs)\n", k + 1, ok ? "PASS" : "FAIL", criteria[k].first, detail.c_str(), secs);
    std::fflush(stdout);
    failed += !ok;
  }
  return failed ? 1 : 0;
}
