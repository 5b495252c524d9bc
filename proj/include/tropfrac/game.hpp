#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropfrac/digraph.hpp"
#include "tropfrac/matrix.hpp"

namespace tropfrac {

// sigma: Max node i -> Min node; tau: Min node j -> Max node. 0-based.
struct MaxStrategy {
  std::vector<std::size_t> succ;
  friend bool operator==(const MaxStrategy&, const MaxStrategy&) = default;
};
struct MinStrategy {
  std::vector<std::size_t> succ;
  friend bool operator==(const MinStrategy&, const MinStrategy&) = default;
};

struct Violation {
  enum class Kind { empty_row_of_B, empty_column_of_A };
  Kind kind;
  std::size_t index;
};

struct AssumptionViolated : std::invalid_argument {
  explicit AssumptionViolated(std::vector<Violation> v);
  std::vector<Violation> violations;
};

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalCertificateMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// Empty when every row of B and every column of A has a finite entry.
std::vector<Violation> validate(const TropMatrix& A, const TropMatrix& B);

// Min node j moves to Max node i paying -a_ij; Max node i moves to Min node l receiving b_il.
class MeanPayoffGame {
 public:
  // Throws AssumptionViolated.
  MeanPayoffGame(TropMatrix A, TropMatrix B);

  std::size_t m() const { return A_.rows(); }
  std::size_t n() const { return A_.cols(); }
  const TropMatrix& A() const { return A_; }
  const TropMatrix& B() const { return B_; }

  // Throw std::invalid_argument when a strategy picks a missing arc.
  void check(const MaxStrategy& sigma) const;
  void check(const MinStrategy& tau) const;
  // Largest |finite payment|.
  Rational max_abs_payment() const;

 private:
  TropMatrix A_, B_;
};

// f_j(x) = min_k (-a_kj + max_l (b_kl + x_l)).
Vector dynamic_operator(const MeanPayoffGame& g, const Vector& x);

// Min-plus n x n matrix of the min-only map x -> A#(B^sigma x).
TropMatrix restrict_max(const MeanPayoffGame& g, const MaxStrategy& sigma);
// Max-plus n x n matrix of the max-only map x -> (A^tau)#(Bx).
TropMatrix restrict_min(const MeanPayoffGame& g, const MinStrategy& tau);

// Mean weight per turn of the cycle reached from Min node j.
Rational play_outcome(const MeanPayoffGame& g, std::size_t j, const MinStrategy& tau, const MaxStrategy& sigma);

// min over tau, max over sigma of play_outcome. Throws TooLarge past 1e6 strategy pairs.
Rational brute_force_value(const MeanPayoffGame& g, std::size_t j);

struct WinningReport {
  std::vector<char> winning;      // Min nodes j with chi_j >= 0
  std::vector<char> winning_max;  // Max nodes with value >= 0
  // Every cycle of G^sigma reachable from a winning node has weight >= 0.
  MaxStrategy sigma;
  // Every cycle of G^tau reachable from a losing node has weight < 0.
  MinStrategy tau;
};

WinningReport winning_oracle(const MeanPayoffGame& g);

// Exact chi_j.
Rational game_value(const MeanPayoffGame& g, std::size_t j);

struct NodeValue {
  Rational value;
  MaxStrategy sigma;  // chi^sigma_j = value
  MinStrategy tau;    // chi_tau_j = value
};
NodeValue game_value_with_strategies(const MeanPayoffGame& g, std::size_t j);

struct GameValueReport {
  std::vector<Rational> chi;
  std::vector<char> winning;
  MaxStrategy sigma;
  MinStrategy tau;
};
GameValueReport game_value_report(const MeanPayoffGame& g);

// One-player values per turn at every Min node.
Vector max_only_values(const MeanPayoffGame& g, const MaxStrategy& sigma);  // chi^sigma
Vector min_only_values(const MeanPayoffGame& g, const MinStrategy& tau);    // chi_tau

// x with Ax <= Bx and x_i = 0, or nullopt when Min node i is losing.
// Throws InternalCertificateMismatch if the constructed vector fails substitution.
std::optional<Vector> feasibility_witness(const MeanPayoffGame& g, std::size_t i);

// Ax <= Bx by direct substitution.
bool satisfies(const TropMatrix& A, const TropMatrix& B, const Vector& x);

}  // namespace tropfrac
