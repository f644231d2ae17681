#pragma once

#include <vector>

#include "wakimoto/chi_series.hpp"
#include "wakimoto/rational.hpp"

namespace wakimoto {

/// Schur polynomials S_r defined by exp(sum_n x_n y^n / n) = sum_r S_r y^r.
/// Missing trailing variables are zero.

/// Production path: r S_r = sum_{k=1}^r x_k S_{r-k}.
Rational schur_rec(int r, const std::vector<Rational>& xs);

/// (1/r!) det of the r x r matrix with first row (x_1..x_r), subdiagonal
/// (-r+1, ..., -1) and shifted x's above the diagonal.
Rational schur_det(int r, const std::vector<Rational>& xs);

/// S_ell(-chi_{-1}, -chi_{-2}, ...)
Rational schur_at_minus_chi(int ell, const ChiSeries& chi);

/// Exact determinant by fraction-field Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace wakimoto
