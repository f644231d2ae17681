#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wakimoto/chi_series.hpp"
#include "wakimoto/fermion.hpp"
#include "wakimoto/rational.hpp"
#include "wakimoto/sparse_vector.hpp"

namespace wakimoto {

enum class OpLabel { GPlus, GMinus, PsiPlus, PsiMinus };

struct WordLetter {
  OpLabel label;
  HalfOdd mode;
  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};

/// Product of mode operators, written left to right and applied right to
/// left: letters.front() acts last.
struct OperatorWord {
  std::vector<WordLetter> letters;

  bool empty() const { return letters.empty(); }
  /// "G+(-3/2) G+(1/2)" or "1" for the empty word.
  std::string to_string() const;
  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
};

/// The module F~_chi: the kernel of Psi-(1/2) with the superalgebra action
///   G+(i-1/2) = -i Psi+(i-1/2)
///   G-(i-1/2) = -i Psi-(i-1/2) + sum_m chi_m Psi-(i-1/2-m)
/// and S(n), T(n) acting by the scalars -(n+1) chi_n / 4 and -chi_n / 2.
/// The central element acts by -3.
class SuperModule {
 public:
  explicit SuperModule(ChiSeries chi) : chi_(std::move(chi)) {}

  const ChiSeries& chi() const { return chi_; }

  FermionVec g_plus(int i, const FermionVec& v) const;
  FermionVec g_minus(int i, const FermionVec& v) const;
  /// Dispatches on the label; G modes are given as r = i - 1/2.
  FermionVec apply(OpLabel label, HalfOdd mode, const FermionVec& v) const;
  FermionVec apply(const OperatorWord& word, const FermionVec& v) const;

  Rational scalar_T(int n) const;
  Rational scalar_S(int n) const;

  /// XY v + YX v for two odd generators.
  FermionVec anticommutator(OpLabel x, HalfOdd r, OpLabel y, HalfOdd s, const FermionVec& v) const;

  /// {G+(r), G-(s)} v == (2 S(r+s) + (r-s) T(r+s) - (r^2 - 1/4) delta_{r+s,0}) v
  bool anticommutator_check(HalfOdd r, HalfOdd s, const FermionVec& v) const;

  /// Recovers (S(n), T(n)) from {G+(1/2), G-(n-1/2)} and {G+(3/2), G-(n-3/2)}
  /// acting on v. Throws InternalError if either does not act as a scalar on v.
  std::pair<Rational, Rational> scalars_from_anticommutators(int n, const FermionVec& v) const;

  /// G+/G- modes that can map some vector of doubled weight <= bound2 to a
  /// vector that is not entirely beyond bound2.
  std::vector<ModeOperator<FermionState>> mode_operators(int bound2) const;

 private:
  ChiSeries chi_;
};

/// Omega_s for s >= 1; throws DomainError otherwise.
FermionState omega(int s);

/// Outcome of the constructive extraction: word * v = scalar * Omega_s,
/// with s = 0 standing for the vacuum.
struct Extraction {
  OperatorWord word;
  int s = 0;
  Rational scalar;
  FermionState lambda_bar;  // only the minus modes are set
  FermionState mu_bar;      // only the plus modes are set

  bool is_vacuum() const { return s == 0; }
  FermionState target() const { return omega_state(s); }
};

/// Builds a word of G+ modes sending any nonzero v in F~ to a nonzero
/// multiple of some Omega_s or of the vacuum. Among admissible choices the
/// longest lambda is taken with the lexicographically largest entries, then
/// the shortest mu with the lexicographically largest entries.
/// Throws DomainError for v = 0 or v outside F~, InternalError if the word
/// fails to produce the promised vector.
Extraction extract_omega(const FermionVec& v);

/// Vacuum coefficient of G-(1/2) ... G-(ell-1/2) Omega_ell.
/// Requires chi = (ell+1)/z + regular tail (DomainError otherwise).
Rational gminus_string_on_omega(int ell, const SuperModule& module);

/// w = G-(3/2) ... G-(ell-1/2) Omega_ell, ell >= 1, same shape requirement.
FermionVec singular_w(int ell, const SuperModule& module);

/// Word moving Omega_from to a multiple of Omega_to (Omega_0 is the vacuum):
/// G-(to+3/2) ... G-(from+1/2) when to < from, and
/// G+(-to-1/2) ... G+(-from-3/2) when to > from.
OperatorWord ladder_word(int from, int to);

/// G-(-N-1/2) ... G-(-3/2) G-(-1/2)
OperatorWord cyclicity_word(int n);

/// G+(-ell+1/2) ... G+(-3/2), lifting w back to a multiple of Omega_ell.
OperatorWord lift_word(int ell);

}  // namespace wakimoto
