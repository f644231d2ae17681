#include "wakimoto/classifier.hpp"

#include <algorithm>

#include "wakimoto/errors.hpp"
#include "wakimoto/schur.hpp"
#include "wakimoto/super_module.hpp"

namespace wakimoto {

namespace {

constexpr int kDefaultCutoff = 4;

ClosureConfig certificate_cfg(const Rational& witness_weight) {
  ClosureConfig cfg;
  cfg.weight_cutoff = std::max(Rational(kDefaultCutoff), witness_weight);
  return cfg;
}

Rational omega_weight(std::int64_t ell) { return Rational(omega_state(static_cast<int>(ell)).weight2(), 2); }

CheckResult check(std::string name, bool passed, std::string detail = {}) {
  return CheckResult{std::move(name), passed, std::move(detail), {}};
}

}  // namespace

const char* case_name(VerdictCase c) {
  switch (c) {
    case VerdictCase::PoleOrder: return "i";
    case VerdictCase::Residue: return "ii";
    case VerdictCase::SchurNonzero: return "iii";
    case VerdictCase::NegativeEll: return "neg_ell";
    case VerdictCase::SchurZero: return "schur_zero";
  }
  return "?";
}

Verdict classify(const ChiSeries& chi) {
  Certificate cert;
  const std::int64_t p = pole_order(chi);
  if (p >= 1) {
    cert.pole = p;
    cert.pole_coeff = chi.coeff(p);
    return {Irreducibility::Irreducible, VerdictCase::PoleOrder, cert};
  }
  const Rational& chi0 = chi.coeff(0);
  if (chi0 == Rational(1) || !chi0.is_integer()) {
    cert.residue = chi0;
    return {Irreducibility::Irreducible, VerdictCase::Residue, cert};
  }
  const std::int64_t ell = *ell_of(chi);
  cert.ell = ell;
  if (ell <= -1) {
    const std::int64_t q = -ell - 1;
    cert.q = q;
    cert.generator = FermionState{};
    cert.excluded = FermionState(std::uint64_t{1} << q, 0);
    cert.cfg = certificate_cfg(cert.excluded->weight());
    return {Irreducibility::Reducible, VerdictCase::NegativeEll, cert};
  }
  // ell >= 1 here: ell = 0 is chi_0 = 1, handled above.
  const Rational s = schur_at_minus_chi(static_cast<int>(ell), chi);
  cert.schur_value = s;
  if (!s.is_zero()) return {Irreducibility::Irreducible, VerdictCase::SchurNonzero, cert};

  const SuperModule module(chi);
  cert.generator = omega(static_cast<int>(ell));
  cert.singular = singular_w(static_cast<int>(ell), module);
  cert.annihilation_max = std::max<int>(kDefaultCutoff, static_cast<int>(ell) + 2);
  cert.cfg = certificate_cfg(omega_weight(ell));
  return {Irreducibility::Reducible, VerdictCase::SchurZero, cert};
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport verify_certificate(const ChiSeries& chi, const Verdict& verdict, const ClosureConfig& cfg_in,
                                      std::optional<Rational> probe_weight) {
  VerificationReport report{verdict.kase, cfg_in, {}};
  ClosureConfig& cfg = report.cfg;
  cfg.charge_window.reset();
  const Certificate& cert = verdict.certificate;
  const SuperModule module(chi);

  // Recomputing the verdict guards against certificates built for another chi.
  const Verdict fresh = classify(chi);
  report.checks.push_back(check("verdict_matches_chi", fresh.kase == verdict.kase && fresh.status == verdict.status,
                                std::string("recomputed case ") + case_name(fresh.kase)));

  try {
    switch (verdict.kase) {
      case VerdictCase::PoleOrder:
        report.checks.push_back(check("pole_coefficient_nonzero",
                                      cert.pole && *cert.pole >= 1 && cert.pole_coeff &&
                                          !cert.pole_coeff->is_zero() && chi.coeff(*cert.pole) == *cert.pole_coeff));
        break;
      case VerdictCase::Residue:
        report.checks.push_back(check("residue_is_one_or_non_integer",
                                      cert.residue && *cert.residue == chi.coeff(0) &&
                                          (*cert.residue == Rational(1) || !cert.residue->is_integer())));
        break;
      case VerdictCase::SchurNonzero: {
        const bool have = cert.ell && cert.schur_value;
        const int ell = have ? static_cast<int>(*cert.ell) : 0;
        const bool nonzero = have && !cert.schur_value->is_zero() &&
                             schur_at_minus_chi(ell, chi) == *cert.schur_value;
        report.checks.push_back(check("schur_value_nonzero", nonzero));
        if (have && ell >= 1) {
          const Rational expected = Rational(ell % 2 == 0 ? 1 : -1) * factorial(ell) * *cert.schur_value;
          const Rational got = gminus_string_on_omega(ell, module);
          report.checks.push_back(check("gminus_string_matches_schur", got == expected,
                                        "vacuum coefficient " + got.to_string()));
        }
        break;
      }
      case VerdictCase::SchurZero: {
        if (!cert.ell || !cert.singular || !cert.generator) {
          report.checks.push_back(check("certificate_complete", false, "missing ell, w or Omega_ell"));
          break;
        }
        const int ell = static_cast<int>(*cert.ell);
        cfg.weight_cutoff = std::max(cfg.weight_cutoff, omega_weight(ell));
        const Rational string_value = gminus_string_on_omega(ell, module);
        report.checks.push_back(check("gminus_string_vanishes", string_value.is_zero(),
                                      "vacuum coefficient " + string_value.to_string()));

        const FermionVec& w = *cert.singular;
        const FermionState lead = FermionState(0, std::uint64_t{1} << ell);
        const Rational expected_lead = Rational((ell - 1) % 2 == 0 ? 1 : -1) * factorial(ell - 1);
        report.checks.push_back(check("singular_vector_leading_term", w.coeff(lead) == expected_lead,
                                      lead.to_string() + " coefficient " + w.coeff(lead).to_string()));

        CheckResult ann = check("singular_vector_annihilated", true,
                                "G+(n-1/2), G-(n-1/2) for n = 1.." + std::to_string(cert.annihilation_max));
        for (int n = 1; n <= cert.annihilation_max; ++n) {
          if (!module.g_plus(n, w).is_zero()) ann.offending.push_back("G+(" + HalfOdd::from_floor(n - 1).to_string() + ")");
          if (!module.g_minus(n, w).is_zero()) ann.offending.push_back("G-(" + HalfOdd::from_floor(n - 1).to_string() + ")");
        }
        ann.passed = ann.offending.empty() && !w.is_zero();
        report.checks.push_back(std::move(ann));

        const auto ops = module.mode_operators(cfg.intermediate_bound2());
        const bool reaches = cyclic_probe<FermionState>(FermionVec(*cert.generator), FermionState{}, ops, cfg);
        CheckResult proper = check("vacuum_outside_generated_submodule", !reaches);
        if (reaches) proper.offending.push_back(FermionState{}.to_string());
        report.checks.push_back(std::move(proper));
        break;
      }
      case VerdictCase::NegativeEll: {
        if (!cert.excluded) {
          report.checks.push_back(check("certificate_complete", false, "missing excluded vector"));
          break;
        }
        cfg.weight_cutoff = std::max(cfg.weight_cutoff, cert.excluded->weight());
        const auto ops = module.mode_operators(cfg.intermediate_bound2());
        const SpanBasis<FermionState> span = closure<FermionState>({FermionVec(FermionState{})}, ops, cfg);
        const bool inside = span.contains(FermionVec(*cert.excluded));
        CheckResult excl = check("excluded_vector_outside_vacuum_submodule", !inside,
                                 cert.excluded->to_string());
        if (inside) excl.offending.push_back(cert.excluded->to_string());
        report.checks.push_back(std::move(excl));
        const std::size_t full = enumerate_basis(cfg.weight_cutoff).size();
        report.checks.push_back(check("vacuum_submodule_proper", span.dimension() < full,
                                      std::to_string(span.dimension()) + " of " + std::to_string(full)));
        break;
      }
    }
  } catch (const Error& e) {
    report.checks.push_back(check("certificate_replay", false, e.what()));
    return report;
  }

  if (!verdict.reducible()) {
    const Rational start = probe_weight.value_or(cfg.weight_cutoff);
    const auto ops = module.mode_operators(cfg.intermediate_bound2());
    CheckResult cyc = check("cyclic_from_every_basis_vector", true);
    const auto basis = enumerate_basis(start);
    for (const FermionState& b : basis) {
      if (!cyclic_probe<FermionState>(FermionVec(b), FermionState{}, ops, cfg)) cyc.offending.push_back(b.to_string());
    }
    cyc.passed = cyc.offending.empty();
    cyc.detail = std::to_string(basis.size() - cyc.offending.size()) + " of " + std::to_string(basis.size()) +
                 " basis vectors of weight <= " + start.to_string() + " regenerate the vacuum";
    report.checks.push_back(std::move(cyc));
  }
  return report;
}

}  // namespace wakimoto
