#include "wakimoto/schur.hpp"

#include <utility>

#include "wakimoto/errors.hpp"

namespace wakimoto {

namespace {

Rational x_at(const std::vector<Rational>& xs, int k) {
  return (k >= 1 && static_cast<std::size_t>(k) <= xs.size()) ? xs[static_cast<std::size_t>(k - 1)]
                                                                : Rational(0);
}

}  // namespace

Rational schur_rec(int r, const std::vector<Rational>& xs) {
  if (r < 0) throw DomainError("Schur index must be >= 0");
  std::vector<Rational> s(static_cast<std::size_t>(r) + 1);
  s[0] = Rational(1);
  for (int n = 1; n <= r; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += x_at(xs, k) * s[static_cast<std::size_t>(n - k)];
    s[static_cast<std::size_t>(n)] = acc / Rational(n);
  }
  return s[static_cast<std::size_t>(r)];
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return det;
}

Rational schur_det(int r, const std::vector<Rational>& xs) {
  if (r < 0) throw DomainError("Schur index must be >= 0");
  if (r == 0) return Rational(1);
  const auto n = static_cast<std::size_t>(r);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= i) {
        m[i][j] = x_at(xs, static_cast<int>(j - i + 1));
      } else if (j + 1 == i) {
        m[i][j] = Rational(-(r - static_cast<int>(i)));
      }
    }
  }
  return determinant(std::move(m)) / factorial(r);
}

Rational schur_at_minus_chi(int ell, const ChiSeries& chi) {
  if (ell < 0) throw DomainError("Schur index must be >= 0");
  std::vector<Rational> xs;
  xs.reserve(static_cast<std::size_t>(ell));
  for (int k = 1; k <= ell; ++k) xs.push_back(-chi.coeff(-k));
  return schur_rec(ell, xs);
}

}  // namespace wakimoto
