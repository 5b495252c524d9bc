#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "tropfrac/extended.hpp"

namespace tropfrac {

using Vector = std::vector<ExtendedNumber>;

// Dense matrix over R u {-inf,+inf}. A max_plus matrix holds no +inf entry and
// a min_plus matrix holds no -inf entry.
class TropMatrix {
 public:
  TropMatrix() = default;
  // Filled with the semiring zero.
  TropMatrix(std::size_t rows, std::size_t cols, Semiring s = Semiring::max_plus);
  static TropMatrix from_rows(const std::vector<Vector>& rows, Semiring s = Semiring::max_plus);
  static TropMatrix from_rows(std::initializer_list<std::initializer_list<ExtendedNumber>> rows,
                              Semiring s = Semiring::max_plus);
  static TropMatrix identity(std::size_t n, Semiring s = Semiring::max_plus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Semiring semiring() const { return semiring_; }

  const ExtendedNumber& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, ExtendedNumber x);

  Vector row(std::size_t i) const;
  bool row_has_finite(std::size_t i) const;
  bool col_has_finite(std::size_t j) const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Semiring semiring_ = Semiring::max_plus;
  std::vector<ExtendedNumber> data_;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Least solution has a +inf coordinate: a positive cycle reaches supp(h).
struct PositiveCycleDiverges : std::runtime_error {
  explicit PositiveCycleDiverges(std::vector<std::size_t> nodes);
  std::vector<std::size_t> nodes;
};

// (Ex)_i = max_j (e_ij + x_j) or min_j, following E's semiring.
Vector trop_matvec(const TropMatrix& E, const Vector& x);

// (E#y)_j = min_i (-e_ij + y_i) with (-inf)+(+inf) = +inf. E must be max_plus.
Vector residual_apply(const TropMatrix& E, const Vector& y);
// The min-plus matrix -E^T.
TropMatrix residual_matrix(const TropMatrix& E);

// E*h = h v Eh v E^2h v ..., the least z with Ez v h <= z. Throws PositiveCycleDiverges.
Vector kleene_least_solution(const TropMatrix& E, const Vector& h);
// Same, with +inf on the diverging coordinates.
Vector kleene_least_solution_raw(const TropMatrix& E, const Vector& h);

// Componentwise x <= y.
bool leq(const Vector& x, const Vector& y);

}  // namespace tropfrac
