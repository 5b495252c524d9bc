#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tropfrac/game.hpp"
#include "tropfrac/spectral.hpp"

namespace tropfrac {

// a + eps*b for infinitesimal eps > 0. Either both parts are finite or the
// germ is the bottom element (-inf, -inf).
class Germ {
 public:
  Germ() = default;  // bottom
  Germ(Rational a, Rational b) : finite_(true), a_(std::move(a)), b_(std::move(b)) {}
  static Germ bottom() { return Germ(); }
  // Throws std::invalid_argument on a half-infinite pair or on +inf.
  static Germ make(const ExtendedNumber& a, const ExtendedNumber& b);

  bool is_bottom() const { return !finite_; }
  ExtendedNumber a() const { return finite_ ? ExtendedNumber(a_) : ExtendedNumber::neg_inf(); }
  ExtendedNumber b() const { return finite_ ? ExtendedNumber(b_) : ExtendedNumber::neg_inf(); }
  // a + eps*b; throws on bottom.
  Rational at(const Rational& eps) const;
  std::string str() const;

  friend bool operator==(const Germ&, const Germ&);
  friend std::strong_ordering operator<=>(const Germ&, const Germ&);  // lexicographic, bottom least

 private:
  bool finite_ = false;
  Rational a_, b_;
};

Germ germ_add(const Germ& x, const Germ& y);  // lex max
Germ germ_mul(const Germ& x, const Germ& y);  // componentwise sum
std::ostream& operator<<(std::ostream& os, const Germ& g);

// Same move structure as MeanPayoffGame: Min node j pays -A[i][j] moving to
// Max node i, which receives B[i][l] moving to Min node l.
struct GermGame {
  std::vector<std::vector<Germ>> A, B;  // m x n
  std::size_t m() const { return A.size(); }
  std::size_t n() const { return A.empty() ? 0 : A.front().size(); }
};

// Throws AssumptionViolated / DimensionMismatch.
void validate(const GermGame& g);

// Mean germ weight per turn of the cycle reached from Min node j.
Germ germ_play_outcome(const GermGame& g, std::size_t j, const MinStrategy& tau, const MaxStrategy& sigma);
// min over tau of max over sigma, lexicographically. Throws TooLarge past 1e6 pairs.
Germ germ_brute_force_value(const GermGame& g, std::size_t j);
// First sigma in enumeration order securing germ_brute_force_value at every Min node.
MaxStrategy germ_optimal_max_strategy(const GermGame& g);

// The real game with payments a + eps*b.
MeanPayoffGame perturb(const GermGame& g, const Rational& eps);

// delta / 4M: delta is the least gap between distinct first parts of cycle means
// over all strategy pairs, M the largest |second part| of a payment. nullopt when
// every eps > 0 is admissible.
std::optional<Rational> germ_validity_radius(const GermGame& g);

// game_at(H, lambda) with second parts 0, except -1 on the moves of Max node m+1.
GermGame germ_game_at(const HomogeneousInstance& H, const Rational& lambda);

}  // namespace tropfrac
