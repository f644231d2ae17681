#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "wakimoto/rational.hpp"

namespace wakimoto {

/// Truncated Laurent series chi(z) = sum_m chi_m z^(-m-1).
///
/// chi_m is the coefficient of z^(-m-1): positive m are pole terms beyond the
/// simple pole, chi_0 is the residue, negative m form the regular tail.
/// Only finitely many coefficients are nonzero; zeros are never stored.
class ChiSeries {
 public:
  using Coeffs = std::map<std::int64_t, Rational>;

  ChiSeries() = default;
  explicit ChiSeries(const Coeffs& coeffs);

  /// Convenience for chi = (ell + 1)/z + sum_{n>=1} tail[n-1] z^(n-1).
  static ChiSeries with_residue(const Rational& chi0, const std::map<std::int64_t, Rational>& tail = {});

  const Rational& coeff(std::int64_t m) const;
  const Coeffs& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  /// Returns a copy with chi_m replaced (removed when value is zero).
  ChiSeries with(std::int64_t m, const Rational& value) const;

  friend bool operator==(const ChiSeries&, const ChiSeries&) = default;

 private:
  Coeffs coeffs_;
};

/// max({m > 0 : chi_m != 0} u {0})
std::int64_t pole_order(const ChiSeries& chi);

/// ell = chi_0 - 1 when chi has no pole beyond 1/z and chi_0 is an integer.
std::optional<std::int64_t> ell_of(const ChiSeries& chi);

/// Parses {"coeffs": [{"m": <int>, "value": "<rational>"}, ...]}.
/// Throws ParseError naming the offending field.
ChiSeries parse_chi(std::string_view json_text);

std::string chi_to_json(const ChiSeries& chi);

}  // namespace wakimoto
