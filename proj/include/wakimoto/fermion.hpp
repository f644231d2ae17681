#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wakimoto/rational.hpp"
#include "wakimoto/sparse_vector.hpp"

namespace wakimoto {

/// Half-odd-integer r, stored as the odd integer 2r.
class HalfOdd {
 public:
  /// Throws DomainError when `doubled` is even.
  static HalfOdd from_doubled(int doubled);
  /// r = n + 1/2
  static HalfOdd from_floor(int n) { return HalfOdd(2 * n + 1); }
  /// Throws DomainError unless r is a half-odd-integer.
  static HalfOdd from_rational(const Rational& r);

  int doubled() const { return doubled_; }
  /// n with r = n + 1/2
  int floor() const { return (doubled_ - 1) / 2; }
  Rational value() const { return Rational(doubled_, 2); }
  std::string to_string() const { return value().to_string(); }
  HalfOdd operator-() const { return HalfOdd(-doubled_); }

  friend auto operator<=>(const HalfOdd&, const HalfOdd&) = default;

 private:
  explicit HalfOdd(int doubled) : doubled_(doubled) {}
  int doubled_;
};

enum class Species { Plus, Minus };

/// Basis vector v_{lambda,mu} = Psi-(-lambda_1)...Psi-(-lambda_r) Psi+(-mu_1)...Psi+(-mu_s)|0>
/// of the Clifford Fock space F.
///
/// Bit k of each mask marks the creation mode k + 1/2, so mode sets are
/// limited to 1/2 .. 127/2. A state lies in the subspace Ker Psi-(1/2) exactly
/// when mu does not contain 1/2; "ambient" states are the others.
class FermionState {
 public:
  static constexpr int kMaxModeIndex = 63;

  FermionState() = default;
  FermionState(std::uint64_t minus_bits, std::uint64_t plus_bits) : minus_(minus_bits), plus_(plus_bits) {}

  /// Builds from strictly decreasing mode lists (entries >= 1/2).
  static FermionState from_modes(const std::vector<HalfOdd>& lambda, const std::vector<HalfOdd>& mu);

  std::uint64_t minus_bits() const { return minus_; }
  std::uint64_t plus_bits() const { return plus_; }

  std::vector<HalfOdd> lambda() const;
  std::vector<HalfOdd> mu() const;

  /// 2 * (sum(lambda) + sum(mu)), the doubled L^f(0) eigenvalue.
  int weight2() const;
  Rational weight() const { return Rational(weight2(), 2); }
  /// len(mu) - len(lambda), the J^f(0) eigenvalue.
  int charge() const;
  bool in_tilde() const { return (plus_ & 1u) == 0; }
  bool is_vacuum() const { return minus_ == 0 && plus_ == 0; }

  /// "Psi-(-1/2) Psi+(-3/2) |0>"
  std::string to_string() const;

  friend bool operator==(const FermionState&, const FermionState&) = default;
  friend std::strong_ordering operator<=>(const FermionState& a, const FermionState& b);

 private:
  std::uint64_t minus_ = 0;
  std::uint64_t plus_ = 0;
};

using FermionVec = SparseVector<FermionState>;

/// Omega_s = Psi+(-s-1/2) ... Psi+(-3/2)|0>; s = 0 gives the vacuum.
FermionState omega_state(int s);

/// Signed result of a single Clifford generator on a basis state.
struct SignedState {
  int sign;
  FermionState state;
};

std::optional<SignedState> apply_psi(Species species, HalfOdd mode, const FermionState& s);
FermionVec apply_psi(Species species, HalfOdd mode, const FermionVec& v);

/// True iff Psi-(1/2) v = 0.
bool check_tilde(const FermionVec& v);

/// All basis states with weight <= max_weight, sorted by (weight, charge, lambda, mu).
/// Non-ambient enumeration covers Ker Psi-(1/2); ambient covers all of F.
std::vector<FermionState> enumerate_basis(const Rational& max_weight, bool ambient = false);

/// Number of basis states per (weight, charge) up to max_weight.
std::map<std::pair<Rational, int>, std::size_t> graded_dimension(const Rational& max_weight,
                                                                 bool ambient = false);

}  // namespace wakimoto
