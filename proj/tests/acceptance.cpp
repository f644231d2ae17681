// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "reports.hpp"
#include "support.hpp"
#include "wakimoto/classifier.hpp"
#include "wakimoto/fermion.hpp"
#include "wakimoto/schur.hpp"
#include "wakimoto/span_engine.hpp"
#include "wakimoto/super_module.hpp"
#include "wakimoto/weyl.hpp"

using namespace wakimoto;
using fixtures::chi_of;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (passed) detail = what;  // keep the first failure
    passed = false;
  }
};

HalfOdd h(int d) { return HalfOdd::from_doubled(d); }

ClosureConfig fermion_cfg(Rational cutoff, Rational excursion = Rational(2)) {
  ClosureConfig cfg;
  cfg.weight_cutoff = cutoff;
  cfg.excursion = excursion;
  return cfg;
}

// ---------------------------------------------------------------- criteria

Outcome clifford_relations() {
  Outcome o;
  std::size_t checks = 0;
  for (const bool ambient : {false, true}) {
    for (const FermionState& b : enumerate_basis(Rational(5), ambient)) {
      const FermionVec v(b);
      for (int r = -9; r <= 9; r += 2) {
        for (int s = -9; s <= 9; s += 2) {
          const FermionVec pm = apply_psi(Species::Plus, h(r), apply_psi(Species::Minus, h(s), v)) +
                                apply_psi(Species::Minus, h(s), apply_psi(Species::Plus, h(r), v));
          const FermionVec pp = apply_psi(Species::Plus, h(r), apply_psi(Species::Plus, h(s), v)) +
                                apply_psi(Species::Plus, h(s), apply_psi(Species::Plus, h(r), v));
          const FermionVec mm = apply_psi(Species::Minus, h(r), apply_psi(Species::Minus, h(s), v)) +
                                apply_psi(Species::Minus, h(s), apply_psi(Species::Minus, h(r), v));
          o.require(pm == (r + s == 0 ? v : FermionVec{}), "{Psi+,Psi-} on " + b.to_string());
          o.require(pp.is_zero() && mm.is_zero(), "{Psi,Psi} same species on " + b.to_string());
          // Single actions against the transposition oracle.
          o.require(oracle::from_engine(apply_psi(Species::Plus, h(r), v)) == oracle::apply_word({{true, r}}, v),
                    "Psi+ vs oracle on " + b.to_string());
          checks += 3;
        }
      }
    }
  }
  o.detail = o.passed ? std::to_string(checks) + " relation checks" : o.detail;
  return o;
}

Outcome basis_and_grading() {
  Outcome o;
  for (const bool ambient : {false, true}) {
    std::map<std::pair<int, int>, long> counts;
    for (const FermionState& b : enumerate_basis(Rational(6), ambient)) ++counts[{b.weight2(), b.charge()}];
    o.require(counts == oracle::fock_counts(12, ambient), ambient ? "ambient counts" : "tilde counts");
  }
  for (const FermionState& b : enumerate_basis(Rational(6))) {
    o.require(apply_psi(Species::Minus, h(1), FermionVec(b)).is_zero(), "Psi-(1/2) on " + b.to_string());
  }
  if (o.passed) o.detail = "weight <= 6, both spaces";
  return o;
}

Outcome superalgebra_relations() {
  Outcome o;
  const auto basis = enumerate_basis(Rational(4));
  for (const auto& [name, chi] : fixtures::sample_chis()) {
    const SuperModule module(chi);
    for (int r = -7; r <= 7; r += 2) {
      for (int s = -7; s <= 7; s += 2) {
        for (const FermionState& b : basis) {
          const FermionVec v(b);
          o.require(module.anticommutator_check(h(r), h(s), v), name + ": {G+,G-} on " + b.to_string());
          o.require(module.anticommutator(OpLabel::GPlus, h(r), OpLabel::GPlus, h(s), v).is_zero(),
                    name + ": {G+,G+}");
          o.require(module.anticommutator(OpLabel::GMinus, h(r), OpLabel::GMinus, h(s), v).is_zero(),
                    name + ": {G-,G-}");
        }
      }
    }
    for (int n = -3; n <= 3; ++n) {
      const auto [s, t] = module.scalars_from_anticommutators(n, FermionVec(FermionState{}));
      o.require(s == Rational(-(n + 1)) * chi.coeff(n) / Rational(4), name + ": S(" + std::to_string(n) + ")");
      o.require(t == -chi.coeff(n) / Rational(2), name + ": T(" + std::to_string(n) + ")");
    }
  }
  if (o.passed) o.detail = "10 chi, |r|,|s| <= 7/2, weight <= 4";
  return o;
}

Outcome gminus_string_identity() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> extra(0, 3);
  for (int ell = 1; ell <= 6; ++ell) {
    for (int trial = 0; trial < 50; ++trial) {
      const ChiSeries chi = fixtures::random_shape_chi(rng, ell, ell + extra(rng));
      const Rational sign(ell % 2 == 0 ? 1 : -1);
      o.require(gminus_string_on_omega(ell, SuperModule(chi)) == sign * factorial(ell) * schur_at_minus_chi(ell, chi),
                "ell = " + std::to_string(ell));
    }
  }
  for (int r = 0; r <= 12; ++r) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> xs;
      for (int n = 0; n < r; ++n) xs.push_back(fixtures::random_rational(rng));
      const Rational rec = schur_rec(r, xs);
      o.require(rec == schur_det(r, xs), "rec vs det at r = " + std::to_string(r));
      o.require(rec == oracle::schur_series(r, xs), "rec vs series at r = " + std::to_string(r));
    }
  }
  if (o.passed) o.detail = "ell 1..6 x 50 tails; r <= 12; seed " + std::to_string(kSeed);
  return o;
}

Outcome extraction() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 1);
  const auto basis = enumerate_basis(Rational(5));
  const SuperModule module(chi_of({{0, 3}, {-1, Rational(1, 2)}}));
  for (int trial = 0; trial < 200; ++trial) {
    const FermionVec v = fixtures::random_vector(rng, basis, 6);
    const Extraction ex = extract_omega(v);
    o.require(!ex.scalar.is_zero(), "zero scalar");
    o.require(module.apply(ex.word, v) == ex.scalar * FermionVec(ex.target()), "word image on trial " +
                                                                                   std::to_string(trial));
  }
  if (o.passed) o.detail = "200 vectors, seed " + std::to_string(kSeed + 1);
  return o;
}

Outcome cyclicity_and_ladders() {
  Outcome o;
  for (int ell = 0; ell <= 3; ++ell) {
    const SuperModule module(ChiSeries::with_residue(Rational(ell + 1), {{1, Rational(-2)}, {2, Rational(1, 3)}}));
    for (int n = 0; n <= 4; ++n) {
      Rational c(1);
      for (int k = 1; k <= n + 1; ++k) c *= Rational(ell + k);
      const FermionState target((std::uint64_t{1} << (n + 1)) - 1, 0);
      o.require(module.apply(cyclicity_word(n), FermionVec(FermionState{})) == c * FermionVec(target),
                "cyclicity ell = " + std::to_string(ell) + ", N = " + std::to_string(n));
    }
  }
  for (int ell = 1; ell <= 4; ++ell) {
    const SuperModule module(ChiSeries::with_residue(Rational(ell + 1), {{1, Rational(5)}, {3, Rational(-1, 2)}}));
    for (int s = 1; s <= 4; ++s) {
      if (s == ell) continue;
      Rational c(1);
      if (s > ell) {
        for (int k = ell + 1; k <= s; ++k) c *= Rational(ell - k);
      } else {
        c = factorial(ell) / factorial(s);
      }
      const FermionVec out = module.apply(ladder_word(s, ell), FermionVec(omega(s)));
      o.require(!c.is_zero() && out == c * FermionVec(omega(ell)),
                "ladder " + std::to_string(s) + " -> " + std::to_string(ell));
    }
  }
  if (o.passed) o.detail = "ell <= 3, N <= 4; s, ell <= 4";
  return o;
}

Outcome irreducible_side() {
  Outcome o;
  const ClosureConfig cfg = fermion_cfg(Rational(4));
  const std::vector<fixtures::NamedChi> cases = {
      {"1/z", chi_of({{0, 1}})},
      {"(1/2)/z", chi_of({{0, Rational(1, 2)}})},
      {"2/z + 1", chi_of({{0, 2}, {-1, 1}})},
      {"3/z + z", chi_of({{0, 3}, {-2, 1}})},
      {"z^-2", chi_of({{1, 1}})},
  };
  std::size_t probes = 0;
  for (const auto& [name, chi] : cases) {
    o.require(!classify(chi).reducible(), name + ": classifier");
    const SuperModule module(chi);
    const auto ops = module.mode_operators(cfg.intermediate_bound2());
    for (const FermionState& b : enumerate_basis(Rational(5, 2))) {
      ++probes;
      o.require(cyclic_probe<FermionState>(FermionVec(b), FermionState{}, ops, cfg),
                name + ": " + b.to_string() + " not cyclic");
    }
  }
  if (o.passed) o.detail = std::to_string(probes) + " probes at cutoff 4, excursion 2";
  return o;
}

// G+(n-1/2) and G-(n-1/2) for n = 1..top annihilate w; the vacuum is not
// reached from w at the given cutoff.
void singular_checks(Outcome& o, const std::string& name, const SuperModule& module, const FermionVec& w, int top,
                     const ClosureConfig& cfg) {
  for (int n = 1; n <= top; ++n) {
    o.require(module.g_plus(n, w).is_zero() && module.g_minus(n, w).is_zero(),
              name + ": G(" + std::to_string(n) + "-1/2) w != 0");
  }
  const auto ops = module.mode_operators(cfg.intermediate_bound2());
  o.require(!closure<FermionState>({w}, ops, cfg).contains(FermionVec(FermionState{})), name + ": vacuum reached");
}

Outcome reducible_side() {
  Outcome o;
  {
    const ChiSeries chi = chi_of({{0, 2}});
    const SuperModule module(chi);
    const FermionVec w = singular_w(1, module);
    o.require(w == FermionVec(omega(1)), "2/z: w != Omega_1");
    singular_checks(o, "2/z", module, w, 4, fermion_cfg(Rational(3)));
    o.require(verify_certificate(chi, classify(chi), fermion_cfg(Rational(3))).all_passed(), "2/z: verify");
  }
  {
    const ChiSeries chi = chi_of({{0, -3}});
    const SuperModule module(chi);
    const ClosureConfig cfg = fermion_cfg(Rational(4));
    const auto ops = module.mode_operators(cfg.intermediate_bound2());
    const auto span = closure<FermionState>({FermionVec(FermionState{})}, ops, cfg);
    const FermionVec excluded(FermionState(std::uint64_t{1} << 3, 0));  // Psi-(-7/2)|0>
    o.require(!span.contains(excluded), "-3/z: Psi-(-7/2)|0> reached");
    o.require(verify_certificate(chi, classify(chi), cfg).all_passed(), "-3/z: verify");
  }
  {
    const ChiSeries chi = chi_of({{0, 3}, {-1, 1}, {-2, 1}});
    const SuperModule module(chi);
    o.require(schur_at_minus_chi(2, chi).is_zero(), "S_2(-chi) != 0");
    const FermionVec w = singular_w(2, module);
    o.require(!w.is_zero(), "w = 0");
    singular_checks(o, "3/z + 1 + z", module, w, 4, fermion_cfg(Rational(4)));
    o.require(verify_certificate(chi, classify(chi), fermion_cfg(Rational(4))).all_passed(), "3/z + 1 + z: verify");
  }
  if (o.passed) o.detail = "2/z @3, -3/z @4, 3/z + 1 + z @4";
  return o;
}

// Every sampled nonzero vector of the span regenerates `generator` (Omega_ell,
// or the vacuum for ell = 0) through extraction followed by a ladder word.
void regenerates(Outcome& o, const std::string& name, const SuperModule& module, const SpanBasis<FermionState>& span,
                 int ell, int max_weight2, std::mt19937_64& rng) {
  const FermionVec generator(ell == 0 ? FermionState{} : omega(ell));
  std::vector<FermionVec> samples;
  const auto low = span.restricted([&](const FermionState& k) { return k.weight2() <= max_weight2; });
  for (const auto& row : low.rows()) samples.push_back(row);
  const auto rows = low.rows();
  std::uniform_int_distribution<std::size_t> pick(0, rows.empty() ? 0 : rows.size() - 1);
  for (int trial = 0; trial < 40 && !rows.empty(); ++trial) {
    FermionVec v;
    for (int k = 0; k < 3; ++k) v.axpy(fixtures::random_rational(rng), rows[pick(rng)]);
    if (!v.is_zero()) samples.push_back(v);
  }
  o.require(!samples.empty(), name + ": empty span");
  for (const FermionVec& v : samples) {
    const Extraction ex = extract_omega(v);
    const FermionVec reached = ex.scalar * FermionVec(ex.target());
    o.require(module.apply(ex.word, v) == reached, name + ": extraction");
    o.require(span.contains(reached) || ex.target().weight() > Rational(4), name + ": left the span");
    const FermionVec back = ex.s == ell ? reached : module.apply(ladder_word(ex.s, ell), reached);
    o.require(back.size() == 1 && back.leading_key() == generator.leading_key(),
              name + ": " + v.leading_key().to_string() + " does not regenerate");
  }
}

Outcome witness_submodules() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 2);
  const ClosureConfig cfg = fermion_cfg(Rational(4));
  struct Case {
    std::string name;
    ChiSeries chi;
    int ell;  // 0: generated by the vacuum
    int max_weight2;
  };
  // The Omega_2 submodule has nothing of weight <= 2 (asserted below), so it
  // is sampled up to the weight of its generator instead.
  const std::vector<Case> cases = {
      {"2/z", chi_of({{0, 2}}), 1, 4},
      {"3/z + 1 + z", chi_of({{0, 3}, {-1, 1}, {-2, 1}}), 2, 8},
      {"-3/z", chi_of({{0, -3}}), 0, 4},
  };
  for (const auto& c : cases) {
    const SuperModule module(c.chi);
    const auto ops = module.mode_operators(cfg.intermediate_bound2());
    const FermionVec gen(c.ell == 0 ? FermionState{} : omega(c.ell));
    const auto span = closure<FermionState>({gen}, ops, cfg);
    if (c.ell == 2) {
      o.require(span.restricted([](const FermionState& k) { return k.weight2() <= 4; }).empty(),
                c.name + ": unexpected vectors of weight <= 2");
    }
    regenerates(o, c.name, module, span, c.ell, c.max_weight2, rng);
  }
  if (o.passed) o.detail = "span rows + 40 combinations each";
  return o;
}

Outcome weyl_relations() {
  Outcome o;
  const auto basis = enumerate_weyl_basis(4, -3, 3);
  for (const auto& [name, chi] : fixtures::sample_chis()) {
    const WakimotoModule module(chi);
    for (int m = -3; m <= 3; ++m) {
      for (int n = -3; n <= 3; ++n) {
        if (const auto f = affine_relation_check(module, m, n, basis)) {
          o.require(false, name + ": " + f->relation + " at " + std::to_string(m) + "," + std::to_string(n));
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(basis.size()) + " basis vectors, level " + std::to_string(WakimotoModule::kLevel);
  return o;
}

Outcome correspondence() {
  Outcome o;
  ClosureConfig cfg;
  cfg.weight_cutoff = Rational(3);
  cfg.charge_window = std::make_pair(-2, 2);
  cfg.excursion = Rational(2);
  std::ostringstream summary;
  for (const Rational& c : {Rational(-1), Rational(0), Rational(1, 2), Rational(1)}) {
    const ChiSeries chi = chi_of({{0, 2}, {-1, c}});
    const ProbeEvidence ev = wakimoto_probe(chi, cfg);
    const bool classified = classify(chi).reducible();
    o.require(ev.reducible_evidence() == classified, "c = " + c.to_string());
    o.require(classified == c.is_zero(), "classifier at c = " + c.to_string());
    summary << "c=" << c.to_string() << ":" << (ev.reducible_evidence() ? "reducible" : "cyclic") << " ";
  }
  if (o.passed) o.detail = summary.str();
  return o;
}

Outcome determinism() {
  Outcome o;
  ClosureConfig cfg;
  cfg.weight_cutoff = Rational(2);
  cfg.charge_window = std::make_pair(-2, 2);
  const std::vector<ChiSeries> chis = {chi_of({{0, 2}}), chi_of({{0, -3}}), chi_of({{0, 3}, {-2, 1}}),
                                       chi_of({{1, 1}, {0, Rational(1, 2)}})};
  auto render = [&]() {
    std::string out;
    for (const ChiSeries& chi : chis) {
      const Verdict v = classify(chi);
      out += reports::dump(reports::classify_json(chi, v));
      ClosureConfig fc = cfg;
      fc.charge_window.reset();
      out += reports::dump(reports::verify_json(chi, v, verify_certificate(chi, v, fc)));
      out += reports::dump(reports::probe_json(chi, wakimoto_probe(chi, cfg)));
      out += reports::dump(reports::relations_json(chi, cfg, kSeed));
    }
    out += reports::dump(reports::schur_json(5, {Rational(1), Rational(-2, 3), Rational(4)}));
    out += reports::dump(reports::enumerate_json(Rational(3), true));
    return out;
  };
  const std::string first = render();
  const std::string second = render();
  o.require(first == second, "reports differ between runs");
  if (o.passed) o.detail = std::to_string(first.size()) + " bytes identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"clifford relations", clifford_relations},
      {"basis counts and grading", basis_and_grading},
      {"superalgebra relations and scalars", superalgebra_relations},
      {"G- string equals signed Schur value", gminus_string_identity},
      {"extraction of staircase vectors", extraction},
      {"cyclicity constants and ladders", cyclicity_and_ladders},
      {"irreducible cases are cyclic", irreducible_side},
      {"reducible cases have proper submodules", reducible_side},
      {"witness submodules regenerate their generator", witness_submodules},
      {"affine relations on the Weyl module", weyl_relations},
      {"Weyl probe agrees with classifier", correspondence},
      {"deterministic reports", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%s) [%.1fs]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
