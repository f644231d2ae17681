#include "reports.hpp"

#include <random>

#include "wakimoto/errors.hpp"
#include "wakimoto/fermion.hpp"
#include "wakimoto/schur.hpp"

namespace wakimoto::reports {

namespace {

constexpr int kSuperModeBound2 = 7;  // |r|, |s| <= 7/2
constexpr int kWeylModeBound = 3;
constexpr int kRandomSamples = 20;

Json failure_list_entry(const std::string& relation, const std::string& modes, const std::string& vector) {
  return Json{{"relation", relation}, {"modes", modes}, {"vector", vector}};
}

Json clifford_suite(const Rational& cutoff, int mode_bound2) {
  const auto basis = enumerate_basis(cutoff, true);
  std::size_t count = 0;
  Json failures = Json::array();
  const std::pair<Species, Species> pairs[] = {
      {Species::Plus, Species::Minus}, {Species::Plus, Species::Plus}, {Species::Minus, Species::Minus}};
  for (const auto& [x, y] : pairs) {
    for (int r = -mode_bound2; r <= mode_bound2; r += 2) {
      for (int s = -mode_bound2; s <= mode_bound2; s += 2) {
        const HalfOdd hr = HalfOdd::from_doubled(r);
        const HalfOdd hs = HalfOdd::from_doubled(s);
        const bool contract = x != y && r + s == 0;
        for (const FermionState& b : basis) {
          const FermionVec v(b);
          const FermionVec lhs = apply_psi(x, hr, apply_psi(y, hs, v)) + apply_psi(y, hs, apply_psi(x, hr, v));
          ++count;
          if (!(lhs == (contract ? v : FermionVec{})) && failures.size() < 10) {
            failures.push_back(failure_list_entry(x == y ? "same species" : "opposite species",
                                                  hr.to_string() + "," + hs.to_string(), b.to_string()));
          }
        }
      }
    }
  }
  return Json{{"checks", count}, {"failures", failures}, {"passed", failures.empty()}};
}

Json super_suite(const SuperModule& module, const Rational& cutoff) {
  const auto basis = enumerate_basis(cutoff);
  std::size_t count = 0;
  Json failures = Json::array();
  for (int r = -kSuperModeBound2; r <= kSuperModeBound2; r += 2) {
    for (int s = -kSuperModeBound2; s <= kSuperModeBound2; s += 2) {
      const HalfOdd hr = HalfOdd::from_doubled(r);
      const HalfOdd hs = HalfOdd::from_doubled(s);
      for (const FermionState& b : basis) {
        const FermionVec v(b);
        ++count;
        std::string bad;
        if (!module.anticommutator_check(hr, hs, v)) bad = "{G+,G-}";
        if (!module.anticommutator(OpLabel::GPlus, hr, OpLabel::GPlus, hs, v).is_zero()) bad = "{G+,G+}";
        if (!module.anticommutator(OpLabel::GMinus, hr, OpLabel::GMinus, hs, v).is_zero()) bad = "{G-,G-}";
        if (!bad.empty() && failures.size() < 10) {
          failures.push_back(failure_list_entry(bad, hr.to_string() + "," + hs.to_string(), b.to_string()));
        }
      }
    }
  }
  Json scalars = Json::array();
  const FermionVec vac(FermionState{});
  bool scalars_ok = true;
  for (int n = -3; n <= 3; ++n) {
    const auto [s, t] = module.scalars_from_anticommutators(n, vac);
    const bool ok = s == module.scalar_S(n) && t == module.scalar_T(n);
    scalars_ok = scalars_ok && ok;
    scalars.push_back(Json{{"n", n}, {"S", s.to_string()}, {"T", t.to_string()}, {"matches", ok}});
  }
  return Json{{"checks", count},
              {"failures", failures},
              {"scalars", scalars},
              {"passed", failures.empty() && scalars_ok}};
}

Json weyl_suite(const ChiSeries& chi, const ClosureConfig& cfg) {
  const WakimotoModule module(chi);
  const auto [lo, hi] = cfg.charge_window.value_or(std::pair<int, int>{-3, 3});
  const auto basis = enumerate_weyl_basis(cfg.cutoff2() / 2, lo, hi);
  Json failures = Json::array();
  std::size_t pairs = 0;
  for (int m = -kWeylModeBound; m <= kWeylModeBound; ++m) {
    for (int n = -kWeylModeBound; n <= kWeylModeBound; ++n) {
      ++pairs;
      if (auto f = affine_relation_check(module, m, n, basis)) {
        failures.push_back(failure_list_entry(f->relation, std::to_string(m) + "," + std::to_string(n),
                                              f->vector.to_string()));
      }
    }
  }
  return Json{{"basis_size", basis.size()},
              {"mode_pairs", pairs},
              {"level", WakimotoModule::kLevel},
              {"failures", failures},
              {"passed", failures.empty()}};
}

Json random_suite(const SuperModule& module, const Rational& cutoff, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto basis = enumerate_basis(cutoff);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::uniform_int_distribution<int> terms(1, 4);
  std::uniform_int_distribution<int> mode(-(kSuperModeBound2 + 1) / 2, (kSuperModeBound2 - 1) / 2);
  Json failures = Json::array();
  for (int k = 0; k < kRandomSamples; ++k) {
    FermionVec v;
    const int t = terms(rng);
    for (int j = 0; j < t; ++j) v.add(basis[pick(rng)], Rational(num(rng), den(rng)));
    const HalfOdd r = HalfOdd::from_floor(mode(rng));
    const HalfOdd s = HalfOdd::from_floor(mode(rng));
    if (!module.anticommutator_check(r, s, v)) {
      failures.push_back(failure_list_entry("{G+,G-}", r.to_string() + "," + s.to_string(), "sample " + std::to_string(k)));
    }
  }
  return Json{{"samples", kRandomSamples}, {"seed", seed}, {"failures", failures}, {"passed", failures.empty()}};
}

}  // namespace

Json cfg_json(const ClosureConfig& cfg) {
  Json j{{"weight_cutoff", cfg.weight_cutoff.to_string()}, {"excursion", cfg.excursion.to_string()}};
  if (cfg.charge_window) {
    j["charge_window"] = Json::array({cfg.charge_window->first, cfg.charge_window->second});
  } else {
    j["charge_window"] = nullptr;
  }
  return j;
}

Json vector_json(const FermionVec& v) {
  Json out = Json::array();
  for (const auto& [st, c] : v.terms()) out.push_back(Json{{"state", st.to_string()}, {"value", c.to_string()}});
  return out;
}

Json vector_json(const WeylVec& v) {
  Json out = Json::array();
  for (const auto& [st, c] : v.terms()) out.push_back(Json{{"state", st.to_string()}, {"value", c.to_string()}});
  return out;
}

Json word_json(const OperatorWord& w) {
  Json out = Json::array();
  for (const WordLetter& l : w.letters) {
    const char* op = "";
    switch (l.label) {
      case OpLabel::GPlus: op = "G+"; break;
      case OpLabel::GMinus: op = "G-"; break;
      case OpLabel::PsiPlus: op = "Psi+"; break;
      case OpLabel::PsiMinus: op = "Psi-"; break;
    }
    out.push_back(Json{{"op", op}, {"mode", l.mode.to_string()}});
  }
  return out;
}

Json classify_json(const ChiSeries& chi, const Verdict& verdict) {
  const Certificate& c = verdict.certificate;
  Json data = Json::object();
  Json cert = Json::object();
  switch (verdict.kase) {
    case VerdictCase::PoleOrder:
      data["p"] = *c.pole;
      data["chi_p"] = c.pole_coeff->to_string();
      cert["pole_coefficient"] = c.pole_coeff->to_string();
      break;
    case VerdictCase::Residue:
      data["chi_0"] = c.residue->to_string();
      cert["residue"] = c.residue->to_string();
      break;
    case VerdictCase::SchurNonzero:
      data["ell"] = *c.ell;
      data["schur_value"] = c.schur_value->to_string();
      cert["schur_value"] = c.schur_value->to_string();
      break;
    case VerdictCase::SchurZero:
      data["ell"] = *c.ell;
      data["schur_value"] = c.schur_value->to_string();
      cert["schur_value"] = c.schur_value->to_string();
      cert["generator"] = c.generator->to_string();
      cert["singular_vector"] = vector_json(*c.singular);
      cert["annihilation_range"] = Json::array({1, c.annihilation_max});
      cert["cfg"] = cfg_json(c.cfg);
      break;
    case VerdictCase::NegativeEll:
      data["ell"] = *c.ell;
      data["q"] = *c.q;
      cert["generator"] = c.generator->to_string();
      cert["excluded_vector"] = c.excluded->to_string();
      cert["cfg"] = cfg_json(c.cfg);
      break;
  }
  Json out{{"verdict", verdict.reducible() ? "reducible" : "irreducible"},
           {"case", case_name(verdict.kase)},
           {"chi", Json::parse(chi_to_json(chi))},
           {"data", data},
           {"certificate", cert}};
  for (const auto& [k, v] : data.items()) out[k] = v;
  return out;
}

Json verify_json(const ChiSeries& chi, const Verdict& verdict, const VerificationReport& report) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"offending", c.offending}});
  }
  return Json{{"verdict", verdict.reducible() ? "reducible" : "irreducible"},
              {"case", case_name(report.kase)},
              {"chi", Json::parse(chi_to_json(chi))},
              {"cfg", cfg_json(report.cfg)},
              {"checks", checks},
              {"passed", report.all_passed()}};
}

Json schur_json(int r, const std::vector<Rational>& xs) {
  const Rational rec = schur_rec(r, xs);
  const Rational det = schur_det(r, xs);
  Json xj = Json::array();
  for (const Rational& x : xs) xj.push_back(x.to_string());
  return Json{{"r", r},
              {"xs", xj},
              {"value", rec.to_string()},
              {"determinant_value", det.to_string()},
              {"agree", rec == det}};
}

Json enumerate_json(const Rational& max_weight, bool ambient) {
  Json states = Json::array();
  for (const FermionState& s : enumerate_basis(max_weight, ambient)) {
    states.push_back(Json{{"state", s.to_string()}, {"weight", s.weight().to_string()}, {"charge", s.charge()}});
  }
  Json graded = Json::array();
  for (const auto& [key, count] : graded_dimension(max_weight, ambient)) {
    graded.push_back(Json{{"weight", key.first.to_string()}, {"charge", key.second}, {"count", count}});
  }
  return Json{{"max_weight", max_weight.to_string()},
              {"ambient", ambient},
              {"count", states.size()},
              {"states", states},
              {"graded_dimension", graded}};
}

Json probe_json(const ChiSeries& chi, const ProbeEvidence& ev) {
  Json witnesses = Json::array();
  for (const WeylState& w : ev.non_cyclic_witnesses) witnesses.push_back(w.to_string());
  Json singular = Json::array();
  for (const SingularCandidate& s : ev.singular_candidates) {
    singular.push_back(
        Json{{"weight", s.weight}, {"charge", s.charge}, {"cyclic", s.cyclic}, {"vector", vector_json(s.vector)}});
  }
  const Verdict verdict = classify(chi);
  return Json{{"chi", Json::parse(chi_to_json(chi))},
              {"cfg", cfg_json(ev.cfg)},
              {"basis_size", ev.basis_size},
              {"all_cyclic", ev.all_cyclic},
              {"non_cyclic_witnesses", witnesses},
              {"singular_candidates", singular},
              {"vacuum_generates_truncation", ev.vacuum_generates_truncation},
              {"reducible_evidence", ev.reducible_evidence()},
              {"classifier_verdict", verdict.reducible() ? "reducible" : "irreducible"},
              {"agrees_with_classifier", ev.reducible_evidence() == verdict.reducible()}};
}

Json relations_json(const ChiSeries& chi, const ClosureConfig& cfg, std::uint64_t seed) {
  const SuperModule module(chi);
  Json out{{"chi", Json::parse(chi_to_json(chi))},
           {"cfg", cfg_json(cfg)},
           {"seed", seed},
           {"clifford", clifford_suite(cfg.weight_cutoff, kSuperModeBound2 + 2)},
           {"superalgebra", super_suite(module, cfg.weight_cutoff)},
           {"weyl", weyl_suite(chi, cfg)},
           {"random_superalgebra", random_suite(module, cfg.weight_cutoff, seed)}};
  out["passed"] = out["clifford"]["passed"].get<bool>() && out["superalgebra"]["passed"].get<bool>() &&
                  out["weyl"]["passed"].get<bool>() && out["random_superalgebra"]["passed"].get<bool>();
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace wakimoto::reports
