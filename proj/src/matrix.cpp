#include "tropfrac/matrix.hpp"

#include <string>

namespace tropfrac {

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, Semiring s)
    : rows_(rows), cols_(cols), semiring_(s), data_(rows * cols, ExtendedNumber::bottom(s)) {}

TropMatrix TropMatrix::from_rows(const std::vector<Vector>& rows, Semiring s) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  TropMatrix E(rows.size(), c, s);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged rows in matrix literal");
    for (std::size_t j = 0; j < c; ++j) E.set(i, j, rows[i][j]);
  }
  return E;
}

TropMatrix TropMatrix::from_rows(std::initializer_list<std::initializer_list<ExtendedNumber>> rows, Semiring s) {
  std::vector<Vector> v;
  for (auto& r : rows) v.emplace_back(r);
  return from_rows(v, s);
}

TropMatrix TropMatrix::identity(std::size_t n, Semiring s) {
  TropMatrix E(n, n, s);
  for (std::size_t i = 0; i < n; ++i) E.set(i, i, ExtendedNumber(0));
  return E;
}

void TropMatrix::set(std::size_t i, std::size_t j, ExtendedNumber x) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("TropMatrix index");
  if (semiring_ == Semiring::max_plus && x.is_pos_inf())
    throw std::invalid_argument("max-plus matrix cannot hold +inf");
  if (semiring_ == Semiring::min_plus && x.is_neg_inf())
    throw std::invalid_argument("min-plus matrix cannot hold -inf");
  data_[i * cols_ + j] = std::move(x);
}

Vector TropMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool TropMatrix::row_has_finite(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(i, j).is_finite()) return true;
  return false;
}

bool TropMatrix::col_has_finite(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, j).is_finite()) return true;
  return false;
}

PositiveCycleDiverges::PositiveCycleDiverges(std::vector<std::size_t> ns)
    : std::runtime_error("Kleene star diverges: a positive cycle reaches the support of h"), nodes(std::move(ns)) {}

Vector trop_matvec(const TropMatrix& E, const Vector& x) {
  if (E.cols() != x.size())
    throw DimensionMismatch("trop_matvec: " + std::to_string(E.cols()) + " columns vs vector of " +
                            std::to_string(x.size()));
  Semiring s = E.semiring();
  Vector out(E.rows(), ExtendedNumber::bottom(s));
  for (std::size_t i = 0; i < E.rows(); ++i)
    for (std::size_t j = 0; j < E.cols(); ++j) out[i] = join(s, out[i], plus(s, E(i, j), x[j]));
  return out;
}

TropMatrix residual_matrix(const TropMatrix& E) {
  if (E.semiring() != Semiring::max_plus) throw std::invalid_argument("residual of a non max-plus matrix");
  TropMatrix R(E.cols(), E.rows(), Semiring::min_plus);
  for (std::size_t i = 0; i < E.rows(); ++i)
    for (std::size_t j = 0; j < E.cols(); ++j) R.set(j, i, -E(i, j));
  return R;
}

Vector residual_apply(const TropMatrix& E, const Vector& y) {
  if (E.rows() != y.size())
    throw DimensionMismatch("residual_apply: " + std::to_string(E.rows()) + " rows vs vector of " +
                            std::to_string(y.size()));
  return trop_matvec(residual_matrix(E), y);
}

Vector kleene_least_solution_raw(const TropMatrix& E, const Vector& h) {
  const std::size_t n = E.rows();
  if (E.cols() != n || h.size() != n) throw DimensionMismatch("kleene: E must be square and match h");
  if (E.semiring() != Semiring::max_plus) throw std::invalid_argument("kleene: E must be max-plus");

  Vector z = h;
  std::vector<char> inf(n, 0);
  for (std::size_t k = 0; k < n; ++k) inf[k] = z[k].is_pos_inf();

  // Longest paths into supp(h), in-place relaxation.
  bool changed = true;
  for (std::size_t round = 0; round < n && changed; ++round) {
    changed = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (inf[k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!E(k, j).is_finite() || !z[j].is_finite()) continue;
        ExtendedNumber cand = plus(Semiring::max_plus, E(k, j), z[j]);
        if (z[k] < cand) {
          z[k] = std::move(cand);
          changed = true;
        }
      }
    }
  }
  if (changed) {
    // Still relaxable after n rounds: those nodes sit upstream of a positive cycle.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n && !inf[k]; ++j)
        if (E(k, j).is_finite() && z[j].is_finite() && z[k] < plus(Semiring::max_plus, E(k, j), z[j])) inf[k] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (inf[k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (inf[j] && E(k, j).is_finite()) {
          inf[k] = 1;
          grew = true;
          break;
        }
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (inf[k]) z[k] = ExtendedNumber::pos_inf();
  return z;
}

Vector kleene_least_solution(const TropMatrix& E, const Vector& h) {
  Vector z = kleene_least_solution_raw(E, h);
  std::vector<std::size_t> bad;
  for (std::size_t k = 0; k < z.size(); ++k)
    if (z[k].is_pos_inf()) bad.push_back(k);
  if (!bad.empty()) throw PositiveCycleDiverges(std::move(bad));
  return z;
}

bool leq(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("leq: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] < x[i]) return false;
  return true;
}

}  // namespace tropfrac
