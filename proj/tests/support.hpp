#pragma once

// Shared fixtures for the unit and acceptance suites.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wakimoto/chi_series.hpp"
#include "wakimoto/fermion.hpp"
#include "wakimoto/rational.hpp"

namespace fixtures {

using wakimoto::ChiSeries;
using wakimoto::Rational;

struct NamedChi {
  std::string name;
  ChiSeries chi;
};

inline ChiSeries chi_of(std::initializer_list<std::pair<std::int64_t, Rational>> coeffs) {
  ChiSeries::Coeffs c;
  for (const auto& [m, v] : coeffs) c.emplace(m, v);
  return ChiSeries(c);
}

/// Ten series covering every classifier branch, some with pole terms or tails.
inline std::vector<NamedChi> sample_chis() {
  return {
      {"1/z", chi_of({{0, 1}})},
      {"(1/2)/z", chi_of({{0, Rational(1, 2)}})},
      {"2/z + 1", chi_of({{0, 2}, {-1, 1}})},
      {"3/z + z", chi_of({{0, 3}, {-2, 1}})},
      {"z^-2", chi_of({{1, 1}})},
      {"5 z^-3 + 2/z - 1/3", chi_of({{2, 5}, {0, 2}, {-1, Rational(-1, 3)}})},
      {"2/z", chi_of({{0, 2}})},
      {"3/z + 1 + z", chi_of({{0, 3}, {-1, 1}, {-2, 1}})},
      {"-3/z", chi_of({{0, -3}})},
      {"-1/z + (2/7) z", chi_of({{0, -1}, {-2, Rational(2, 7)}})},
  };
}

inline Rational random_rational(std::mt19937_64& rng, int num_bound = 5, int den_bound = 4) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return Rational(num(rng), den(rng));
}

/// chi = (ell+1)/z + random rational tail chi_{-1}, ..., chi_{-length}.
inline ChiSeries random_shape_chi(std::mt19937_64& rng, std::int64_t ell, int length) {
  std::map<std::int64_t, Rational> tail;
  for (int n = 1; n <= length; ++n) tail[n] = random_rational(rng);
  return ChiSeries::with_residue(Rational(ell + 1), tail);
}

/// Nonzero random combination of 1..max_terms basis states.
inline wakimoto::FermionVec random_vector(std::mt19937_64& rng, const std::vector<wakimoto::FermionState>& basis,
                                          int max_terms = 5) {
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> terms(1, max_terms);
  wakimoto::FermionVec v;
  while (v.is_zero()) {
    const int t = terms(rng);
    for (int j = 0; j < t; ++j) v.add(basis[pick(rng)], random_rational(rng));
  }
  return v;
}

}  // namespace fixtures
