#include "tropfrac/kleene_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropfrac {

KleeneSystem build_kleene_system(const TropMatrix& C, const TropMatrix& D, const std::vector<std::size_t>& sigma,
                                 std::size_t anchor) {
  const std::size_t rows = C.rows(), cols = C.cols();
  if (D.rows() != rows || D.cols() != cols || sigma.size() != rows)
    throw DimensionMismatch("kleene system: C, D and sigma disagree in shape");
  if (anchor >= cols) throw std::out_of_range("kleene system: anchor column");

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<char> in_I(cols, 0), in_J(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (sigma[i] >= cols || !D(i, sigma[i]).is_finite()) throw std::invalid_argument("kleene system: bad strategy");
    if (sigma[i] != anchor) in_I[sigma[i]] = 1;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (sigma[i] == anchor) continue;
    for (std::size_t j = 0; j < cols; ++j)
      if (j != anchor && !in_I[j] && C(i, j).is_finite()) in_J[j] = 1;
  }
  KleeneSystem S;
  std::vector<std::size_t> pos(cols, none);
  for (std::size_t j = 0; j < cols; ++j) {
    if (in_I[j]) {
      pos[j] = S.I.size();
      S.I.push_back(j);
    } else if (in_J[j]) {
      pos[j] = S.J.size();
      S.J.push_back(j);
    }
  }
  S.E = TropMatrix(S.I.size(), S.I.size());
  S.F = TropMatrix(S.I.size(), S.J.size());
  S.h.assign(S.I.size(), ExtendedNumber::neg_inf());

  for (std::size_t i = 0; i < rows; ++i) {
    if (sigma[i] == anchor) continue;
    std::size_t k = pos[sigma[i]];
    const Rational& dk = D(i, sigma[i]).value();
    for (std::size_t j = 0; j < cols; ++j) {
      if (!C(i, j).is_finite()) continue;
      ExtendedNumber w(Rational(C(i, j).value() - dk));
      if (j == anchor) {
        S.h[k] = max_of(S.h[k], w);
      } else if (in_I[j]) {
        S.E.set(k, pos[j], max_of(S.E(k, pos[j]), w));
      } else {
        S.F.set(k, pos[j], max_of(S.F(k, pos[j]), w));
      }
    }
  }
  return S;
}

AnchoredSolution anchored_least_solution(const TropMatrix& C, const TropMatrix& D,
                                         const std::vector<std::size_t>& sigma, std::size_t anchor) {
  AnchoredSolution out;
  out.system = build_kleene_system(C, D, sigma, anchor);
  out.z = kleene_least_solution(out.system.E, out.system.h);
  out.y.assign(C.cols(), ExtendedNumber::neg_inf());
  out.y[anchor] = ExtendedNumber(0);
  for (std::size_t k = 0; k < out.system.I.size(); ++k) out.y[out.system.I[k]] = out.z[k];

  out.second_ok = true;
  for (std::size_t i = 0; i < C.rows(); ++i) {
    if (sigma[i] != anchor) continue;
    out.second_rows.push_back(i);
    ExtendedNumber lhs;
    for (std::size_t j = 0; j < C.cols(); ++j) lhs = max_of(lhs, plus(Semiring::max_plus, C(i, j), out.y[j]));
    if (D(i, anchor) < lhs) out.second_ok = false;
  }
  return out;
}

}  // namespace tropfrac
