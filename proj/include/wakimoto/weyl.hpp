#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "wakimoto/chi_series.hpp"
#include "wakimoto/rational.hpp"
#include "wakimoto/span_engine.hpp"
#include "wakimoto/sparse_vector.hpp"

namespace wakimoto {

/// Monomial a(-n_1)...a(-n_r) a*(-k_1)...a*(-k_s)|0> of the Weyl Fock space,
/// n_i >= 1, k_j >= 0, stored as descending multisets.
///
/// Vacuum laws: a(n)|0> = 0 for n >= 0 and a*(n)|0> = 0 for n >= 1, with
/// a(z) = sum a(n) z^(-n-1), a*(z) = sum a*(n) z^(-n), [a(n), a*(m)] = delta_{n+m,0}.
class WeylState {
 public:
  WeylState() = default;
  /// Throws DomainError on out-of-range modes; the lists are sorted internally.
  WeylState(std::vector<int> a_modes, std::vector<int> astar_modes);

  const std::vector<int>& a_modes() const { return a_; }
  const std::vector<int>& astar_modes() const { return astar_; }

  int weight() const;
  int weight2() const { return 2 * weight(); }
  /// |astar_modes| - |a_modes|; h(0) acts on the monomial as -2 charge - chi_0.
  int charge() const { return static_cast<int>(astar_.size()) - static_cast<int>(a_.size()); }
  bool is_vacuum() const { return a_.empty() && astar_.empty(); }

  int count_a(int n) const;
  int count_astar(int n) const;
  WeylState with_a(int n) const;
  WeylState with_astar(int n) const;
  WeylState without_a(int n) const;
  WeylState without_astar(int n) const;

  /// "a(-1) a*(0) a*(0) |0>"
  std::string to_string() const;

  friend bool operator==(const WeylState&, const WeylState&) = default;
  friend std::strong_ordering operator<=>(const WeylState& a, const WeylState& b);

 private:
  std::vector<int> a_;
  std::vector<int> astar_;
};

using WeylVec = SparseVector<WeylState>;

WeylVec apply_a(int n, const WeylVec& v);
WeylVec apply_astar(int n, const WeylVec& v);

/// States with weight <= max_weight and charge in [charge_lo, charge_hi],
/// sorted by (weight, charge, a modes, a* modes).
std::vector<WeylState> enumerate_weyl_basis(int max_weight, int charge_lo, int charge_hi);

enum class AffineGenerator { E, H, F };

/// Wakimoto module W_{-chi}: the critical-level sl2-hat action
///   e(z) = a(z)
///   h(z) = -2 :a*(z) a(z): - chi(z)
///   f(z) = -:a*(z)^2 a(z): - 2 d/dz a*(z) - a*(z) chi(z)
/// on the Weyl Fock space, with e, h, f expanded in z^(-n-1).
class WakimotoModule {
 public:
  static constexpr int kLevel = -2;

  explicit WakimotoModule(ChiSeries chi) : chi_(std::move(chi)) {}
  const ChiSeries& chi() const { return chi_; }

  WeylVec e(int n, const WeylVec& v) const { return apply_a(n, v); }
  /// h(n) = -2 sum_m :a*(m) a(n-m): - chi_n
  WeylVec h(int n, const WeylVec& v) const;
  /// f(n) = -sum :a*(m1) a*(m2) a(n-m1-m2): + 2n a*(n) - sum_j chi_j a*(n-j)
  WeylVec f(int n, const WeylVec& v) const;
  WeylVec apply(AffineGenerator g, int n, const WeylVec& v) const;

  /// e(n), h(n), f(n) that can keep some vector of weight <= bound inside
  /// weight <= bound without acting as a pure scalar.
  std::vector<ModeOperator<WeylState>> mode_operators(int bound) const;

  /// Positive-mode annihilators relevant on vectors of weight <= weight:
  /// e(n) for n >= 0, h(n) and f(n) for n >= 1.
  std::vector<ModeOperator<WeylState>> positive_operators(int weight) const;

 private:
  ChiSeries chi_;
};

/// Failure description for one bracket identity on one basis vector.
struct RelationFailure {
  std::string relation;
  int m = 0;
  int n = 0;
  WeylState vector;
};

/// Checks on every vector in `basis`:
///   [h(m),e(n)] = 2e(m+n), [h(m),f(n)] = -2f(m+n),
///   [e(m),f(n)] = h(m+n) + m k delta, [h(m),h(n)] = 2 m k delta,
///   [e(m),e(n)] = [f(m),f(n)] = 0, with k = -2.
std::optional<RelationFailure> affine_relation_check(const WakimotoModule& module, int m, int n,
                                                     const std::vector<WeylState>& basis);

struct SingularCandidate {
  int weight = 0;
  int charge = 0;
  WeylVec vector;
  bool cyclic = true;
};

struct ProbeEvidence {
  ClosureConfig cfg;
  std::size_t basis_size = 0;
  bool all_cyclic = true;
  std::vector<WeylState> non_cyclic_witnesses;
  std::vector<SingularCandidate> singular_candidates;
  bool vacuum_generates_truncation = true;

  /// A non-cyclic basis vector or a non-cyclic singular vector was found.
  bool reducible_evidence() const;
};

/// Cyclicity probes from every basis vector with weight <= cutoff and charge
/// in the window, plus a singular-vector search in every (weight, charge)
/// piece. Requires cfg.charge_window.
ProbeEvidence wakimoto_probe(const ChiSeries& chi, const ClosureConfig& cfg);

}  // namespace wakimoto
