#pragma once

// Slow reference implementations used as test oracles, plus random generators.

#include <random>
#include <string>
#include <vector>

#include "tropfrac/digraph.hpp"
#include "tropfrac/game.hpp"
#include "tropfrac/spectral.hpp"

namespace brute {

using tropfrac::ExtendedNumber;
using tropfrac::HomogeneousInstance;
using tropfrac::LfpInstance;
using tropfrac::MeanPayoffGame;
using tropfrac::Rational;
using tropfrac::TropMatrix;
using tropfrac::Vector;

// p/q in lowest terms; mpq_class(p, q) alone does not reduce.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string data_path(const std::string& name);
std::string read_file(const std::string& path);

// min over Min strategies, max over Max strategies, of the mean weight per turn
// of the cycle reached from Min node j. Independent of the library's enumeration.
Rational game_value(const TropMatrix& A, const TropMatrix& B, std::size_t j);

// Sign of phi(lambda) by game_value on the homogeneous game.
Rational phi(const HomogeneousInstance& H, const Rational& lambda);

enum class Kind { optimal, unbounded, infeasible };
struct Answer {
  Kind kind;
  Rational lambda;  // H units, optimal only
};
// Classification and integer lambda* of an integer instance, from brute-force game values.
Answer solve(const HomogeneousInstance& H);

// Every elementary cycle of a digraph, as vertex lists.
std::vector<std::vector<std::size_t>> elementary_cycles(const tropfrac::WeightedDigraph& D);
// Largest / smallest mean over elementary cycles accessible from `start`; nullopt when none.
std::optional<Rational> extreme_accessible_mean(const tropfrac::WeightedDigraph& D, std::size_t start, bool largest,
                                                std::optional<std::size_t> forbidden = std::nullopt);

// Least z with E z v h <= z by iterating z <- h v E z from h, or nullopt after `rounds`.
std::optional<Vector> kleene_iterate(const TropMatrix& E, const Vector& h, std::size_t rounds);

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(gen) < p; }
  ExtendedNumber entry(long bound, double neg_inf_density) {
    if (neg_inf_density > 0 && chance(neg_inf_density)) return ExtendedNumber::neg_inf();
    return ExtendedNumber(integer(-bound, bound));
  }
};

// Random game satisfying both assumptions.
MeanPayoffGame random_game(Rng& r, std::size_t m, std::size_t n, long bound, double density);

// Random original-form instance; rows of [B,d] and columns of [A,c;p,r] keep a finite entry.
LfpInstance random_instance(Rng& r, std::size_t m, std::size_t n, long bound, double density);

}  // namespace brute
