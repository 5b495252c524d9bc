#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropfrac/certify.hpp"
#include "tropfrac/kleene_system.hpp"
#include "tropfrac/spectral.hpp"

namespace tropfrac {

enum class Status { optimal, unbounded, infeasible };
enum class Method { newton, bisection, negative_newton };

const char* status_name(Status s);
const char* method_name(Method m);
// "newton", "bisection", "negative-newton"; throws std::invalid_argument.
Method parse_method(const std::string& s);

struct IterationCapExceeded : std::logic_error {
  using std::logic_error::logic_error;
};
struct SecondSubsystemViolated : std::logic_error {
  using std::logic_error::logic_error;
};

// One iterate. Values are in original units.
struct TraceEntry {
  Rational lambda;
  std::optional<Rational> phi;          // exact phi(lambda) when requested
  std::optional<bool> nonneg;           // sign probe, when one was made
  std::optional<MaxStrategy> sigma;     // positive Newton: left-optimal strategy
  std::optional<std::size_t> anchor;    // sigma(m+1)
  std::optional<Vector> least;          // least solution y of the Newton step, y_anchor = 0
  std::optional<MinStrategy> tau;       // negative Newton: strategy at lambda
};

struct SolveOutcome {
  Status status = Status::infeasible;
  std::optional<Rational> lambda;  // optimal only
  std::optional<Vector> witness;   // optimal only: homogeneous y, y_{n+1} = 0
  std::optional<OptimalityCertificate> optimality;
  std::optional<UnboundednessCertificate> unboundedness;
  std::string reason;  // why infeasible / unbounded was concluded
  std::vector<TraceEntry> trace;
  std::size_t iterations = 0;  // loop iterations of the chosen method
  std::size_t oracle_calls = 0;
};

struct Precheck {
  enum class Kind { proceed, infeasible, unbounded, optimal_at_lower_bound } kind = Kind::proceed;
  Rational lambda;  // H units: lambda+ for proceed, lambda- for optimal_at_lower_bound
  std::string reason;
};

// Degenerate rules, the supp(u) test, then the signs of phi at lambda+, lambda-, lambda- - 1.
Precheck precheck(const HomogeneousInstance& H);

// Does C y <= D y have a solution with y_j = -inf on every `forced` column and
// y_target finite? Columns without constraints are pushed to +inf-like values.
bool solvable_with_finite(const TropMatrix& C, const TropMatrix& D, const std::vector<char>& forced,
                          std::size_t target);

struct NewtonStep {
  ExtendedNumber lambda;  // H units; -inf when u y = -inf
  std::size_t anchor = 0;
  AnchoredSolution solution;
};

// Least-solution step for a Max strategy sigma over game_at. Throws
// PositiveCycleDiverges or SecondSubsystemViolated when sigma is not winning.
NewtonStep newton_step(const HomogeneousInstance& H, const MaxStrategy& sigma);

// Optimal strategy of node n+1 in perturbed_game(H, lambda), or nullopt when
// lambda (H units) is the minimal zero.
std::optional<MaxStrategy> left_optimal_max_strategy(const HomogeneousInstance& H, const Rational& lambda);

// Min zero of phi_tau in H units, +inf when phi_tau < 0 everywhere. tau must
// witness phi(lambda) < 0 at some lambda, so that the cycles avoiding Max node
// m+1 are negative; throws std::logic_error otherwise.
ExtendedNumber min_zero_phi_tau(const HomogeneousInstance& H, const MinStrategy& tau);

struct SolveOptions {
  std::optional<Rational> lambda0;  // positive Newton start, original units; must have phi >= 0
  bool trace_phi = false;           // record exact phi at every iterate
};

// Iteration caps: 4M(min(m,n)+1)+1 for Newton, ceil(log2(4M(min(m,n)+1)))+1 for bisection.
Integer newton_cap(const HomogeneousInstance& H);
std::size_t bisection_cap(const HomogeneousInstance& H);

SolveOutcome bisection_solve(const HomogeneousInstance& H, const SolveOptions& opt = {});
SolveOutcome positive_newton_solve(const HomogeneousInstance& H, const SolveOptions& opt = {});
SolveOutcome negative_newton_solve(const HomogeneousInstance& H, const SolveOptions& opt = {});

SolveOutcome solve(const HomogeneousInstance& H, Method method, const SolveOptions& opt = {});
SolveOutcome solve(const LfpInstance& inst, Method method, const SolveOptions& opt = {});

}  // namespace tropfrac
