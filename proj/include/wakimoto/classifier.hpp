#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wakimoto/chi_series.hpp"
#include "wakimoto/fermion.hpp"
#include "wakimoto/rational.hpp"
#include "wakimoto/span_engine.hpp"

namespace wakimoto {

enum class Irreducibility { Irreducible, Reducible };

/// Decision branches. PoleOrder, Residue and SchurNonzero are the three
/// irreducible conditions; NegativeEll and SchurZero are reducible.
enum class VerdictCase { PoleOrder, Residue, SchurNonzero, NegativeEll, SchurZero };

/// "i", "ii", "iii", "neg_ell", "schur_zero"
const char* case_name(VerdictCase c);

/// Replayable witness data. Which fields are set depends on the case:
///   PoleOrder     pole, pole_coeff
///   Residue       residue
///   SchurNonzero  ell, schur_value
///   SchurZero     ell, schur_value, generator (Omega_ell), singular (w),
///                 annihilation range [1, annihilation_max]
///   NegativeEll   ell, q, generator (vacuum), excluded (Psi-(-q-1/2)|0>)
struct Certificate {
  std::optional<std::int64_t> pole;
  std::optional<Rational> pole_coeff;
  std::optional<Rational> residue;
  std::optional<std::int64_t> ell;
  std::optional<Rational> schur_value;
  std::optional<std::int64_t> q;
  std::optional<FermionState> generator;
  std::optional<FermionVec> singular;
  int annihilation_max = 0;
  std::optional<FermionState> excluded;
  /// Configuration the negative (non-membership) checks should run at.
  ClosureConfig cfg;
};

struct Verdict {
  Irreducibility status;
  VerdictCase kase;
  Certificate certificate;

  bool reducible() const { return status == Irreducibility::Reducible; }
};

/// Total and pure: exactly one case for every chi.
Verdict classify(const ChiSeries& chi);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::string> offending;
};

struct VerificationReport {
  VerdictCase kase;
  ClosureConfig cfg;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Replays the certificate on the truncated module F~_chi. The cutoff is
/// raised to the weight of the certificate's witness vectors when needed;
/// the report carries the configuration actually used. Cyclicity probes for
/// irreducible verdicts start from every basis vector of weight <=
/// probe_weight (default: the cutoff). Never throws on a failed check.
VerificationReport verify_certificate(const ChiSeries& chi, const Verdict& verdict, const ClosureConfig& cfg,
                                      std::optional<Rational> probe_weight = std::nullopt);

}  // namespace wakimoto
