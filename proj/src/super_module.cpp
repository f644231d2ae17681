#include "wakimoto/super_module.hpp"

#include <bit>
#include <cstdlib>
#include <set>

#include "wakimoto/errors.hpp"

namespace wakimoto {

namespace {

const char* label_name(OpLabel l) {
  switch (l) {
    case OpLabel::GPlus: return "G+";
    case OpLabel::GMinus: return "G-";
    case OpLabel::PsiPlus: return "Psi+";
    case OpLabel::PsiMinus: return "Psi-";
  }
  return "?";
}

// Index i with r = i - 1/2.
int g_index(HalfOdd r) { return (r.doubled() + 1) / 2; }

HalfOdd g_mode(int i) { return HalfOdd::from_doubled(2 * i - 1); }

void require_shape(int ell, const SuperModule& module, const char* what) {
  const auto e = ell_of(module.chi());
  if (!e || *e != ell) {
    throw DomainError(std::string(what) + ": chi must equal (ell+1)/z plus a regular tail with ell = " +
                      std::to_string(ell));
  }
}

}  // namespace

std::string OperatorWord::to_string() const {
  if (letters.empty()) return "1";
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += std::string(label_name(l.label)) + "(" + l.mode.to_string() + ")";
  }
  return out;
}

FermionVec SuperModule::g_plus(int i, const FermionVec& v) const {
  if (i == 0) return {};
  FermionVec out = apply_psi(Species::Plus, g_mode(i), v);
  out *= Rational(-i);
  return out;
}

FermionVec SuperModule::g_minus(int i, const FermionVec& v) const {
  FermionVec out;
  if (v.is_zero()) return out;
  const int top2 = max_weight2(v);
  // Leading term (chi_0 - i) Psi-(i-1/2) merged with the sum over chi_m.
  std::map<int, Rational> by_mode;  // doubled mode -> coefficient
  by_mode[2 * i - 1] += Rational(-i);
  for (const auto& [m, c] : chi_.coeffs()) {
    const std::int64_t d = 2 * (static_cast<std::int64_t>(i) - m) - 1;
    // Annihilators above the top weight of v vanish on v.
    if (d > top2) continue;
    by_mode[static_cast<int>(d)] += c;
  }
  for (const auto& [d, c] : by_mode) {
    if (c.is_zero()) continue;
    out.axpy(c, apply_psi(Species::Minus, HalfOdd::from_doubled(d), v));
  }
  return out;
}

FermionVec SuperModule::apply(OpLabel label, HalfOdd mode, const FermionVec& v) const {
  switch (label) {
    case OpLabel::GPlus: return g_plus(g_index(mode), v);
    case OpLabel::GMinus: return g_minus(g_index(mode), v);
    case OpLabel::PsiPlus: return apply_psi(Species::Plus, mode, v);
    case OpLabel::PsiMinus: return apply_psi(Species::Minus, mode, v);
  }
  throw InternalError("unknown operator label");
}

FermionVec SuperModule::apply(const OperatorWord& word, const FermionVec& v) const {
  FermionVec out = v;
  for (auto it = word.letters.rbegin(); it != word.letters.rend() && !out.is_zero(); ++it) {
    out = apply(it->label, it->mode, out);
  }
  return out;
}

Rational SuperModule::scalar_T(int n) const { return -chi_.coeff(n) / Rational(2); }

Rational SuperModule::scalar_S(int n) const { return -Rational(n + 1) * chi_.coeff(n) / Rational(4); }

FermionVec SuperModule::anticommutator(OpLabel x, HalfOdd r, OpLabel y, HalfOdd s, const FermionVec& v) const {
  return apply(x, r, apply(y, s, v)) + apply(y, s, apply(x, r, v));
}

bool SuperModule::anticommutator_check(HalfOdd r, HalfOdd s, const FermionVec& v) const {
  const FermionVec lhs = anticommutator(OpLabel::GPlus, r, OpLabel::GMinus, s, v);
  const int n = (r.doubled() + s.doubled()) / 2;
  Rational scalar = Rational(2) * scalar_S(n) + (r.value() - s.value()) * scalar_T(n);
  if (n == 0) scalar -= r.value() * r.value() - Rational(1, 4);  // (C/3)(r^2 - 1/4), C = -3
  return lhs == scalar * v;
}

std::pair<Rational, Rational> SuperModule::scalars_from_anticommutators(int n, const FermionVec& v) const {
  if (v.is_zero()) throw DomainError("scalar extraction needs a nonzero vector");
  const FermionState probe = v.leading_key();
  auto eigen = [&](HalfOdd r, HalfOdd s) {
    const FermionVec out = anticommutator(OpLabel::GPlus, r, OpLabel::GMinus, s, v);
    const Rational value = out.coeff(probe) / v.coeff(probe);
    if (!(out == value * v)) throw InternalError("anticommutator does not act as a scalar");
    Rational central;
    if (n == 0) central = -(r.value() * r.value() - Rational(1, 4));
    return value - central;
  };
  const HalfOdd r1 = HalfOdd::from_floor(0);
  const HalfOdd r2 = HalfOdd::from_floor(1);
  const HalfOdd s1 = HalfOdd::from_doubled(2 * n - 1);
  const HalfOdd s2 = HalfOdd::from_doubled(2 * n - 3);
  const Rational e1 = eigen(r1, s1);
  const Rational e2 = eigen(r2, s2);
  // e_k = 2 S + (r_k - s_k) T
  const Rational d1 = r1.value() - s1.value();
  const Rational d2 = r2.value() - s2.value();
  const Rational t = (e1 - e2) / (d1 - d2);
  const Rational s = (e1 - d1 * t) / Rational(2);
  return {s, t};
}

std::vector<ModeOperator<FermionState>> SuperModule::mode_operators(int bound2) const {
  std::vector<ModeOperator<FermionState>> ops;
  auto usable = [bound2](int d) { return std::abs(d) <= bound2; };

  // G+(i-1/2) = -i Psi+(i-1/2)
  for (int i = -(bound2 / 2) - 1; i <= bound2 / 2 + 1; ++i) {
    if (i == 0 || !usable(2 * i - 1)) continue;
    ops.push_back({"G+(" + g_mode(i).to_string() + ")",
                   [this, i](const FermionVec& v) { return g_plus(i, v); }});
  }

  // For G-, a fresh creation mode beyond the bound with nonzero coefficient
  // forces every image out of range; otherwise some term must reach a usable mode.
  std::set<std::int64_t> shifts{0};
  for (const auto& [m, c] : chi_.coeffs()) shifts.insert(m);
  std::set<int> candidates;
  for (const std::int64_t m : shifts) {
    for (std::int64_t d = -bound2; d <= bound2; ++d) {
      if (d % 2 == 0) continue;
      const std::int64_t i = (d + 1) / 2 + m;
      candidates.insert(static_cast<int>(i));
    }
  }
  for (const int i : candidates) {
    const int lead = 2 * i - 1;
    const Rational lead_coeff = chi_.coeff(0) - Rational(i);
    if (lead < 0 && !usable(lead) && !lead_coeff.is_zero()) continue;
    ops.push_back({"G-(" + g_mode(i).to_string() + ")",
                   [this, i](const FermionVec& v) { return g_minus(i, v); }});
  }
  return ops;
}

FermionState omega(int s) {
  if (s < 1) throw DomainError("Omega_s requires s >= 1");
  return omega_state(s);
}

Extraction extract_omega(const FermionVec& v) {
  if (v.is_zero()) throw DomainError("extraction needs a nonzero vector");
  for (const auto& [st, c] : v.terms()) {
    if (!st.in_tilde()) throw DomainError("extraction needs a vector in Ker Psi-(1/2)");
  }

  // lambda_bar: longest lambda, numerically largest mask among those.
  int ell = -1;
  std::uint64_t lambda_bar = 0;
  for (const auto& [st, c] : v.terms()) {
    const int len = std::popcount(st.minus_bits());
    if (len > ell || (len == ell && st.minus_bits() > lambda_bar)) {
      ell = len;
      lambda_bar = st.minus_bits();
    }
  }
  // T1 and mu_bar: shortest mu, numerically largest mask among those.
  int ell1 = 65;
  std::uint64_t mu_bar = 0;
  int s = 0;
  bool only_empty = true;
  for (const auto& [st, c] : v.terms()) {
    if (st.minus_bits() != lambda_bar) continue;
    const std::uint64_t mu = st.plus_bits();
    if (mu != 0) {
      only_empty = false;
      s = std::max(s, 63 - std::countl_zero(mu));
    }
    const int len = std::popcount(mu);
    if (len < ell1 || (len == ell1 && mu > mu_bar)) {
      ell1 = len;
      mu_bar = mu;
    }
  }

  Extraction ex;
  ex.lambda_bar = FermionState(lambda_bar, 0);
  ex.mu_bar = FermionState(0, mu_bar);
  if (!only_empty) {
    ex.s = s;
    // t = {3/2, ..., s+1/2} \ mu_bar, applied as creations G+(-t_1)...G+(-t_p).
    for (int k = s; k >= 1; --k) {
      if (!(mu_bar & (std::uint64_t{1} << k))) {
        ex.word.letters.push_back({OpLabel::GPlus, HalfOdd::from_doubled(-(2 * k + 1))});
      }
    }
  }
  for (const HalfOdd& m : ex.lambda_bar.lambda()) ex.word.letters.push_back({OpLabel::GPlus, m});

  // The word uses only G+ modes, whose action does not depend on chi.
  const SuperModule plain{ChiSeries{}};
  const FermionVec out = plain.apply(ex.word, v);
  const FermionState target = ex.target();
  if (out.size() != 1 || out.terms().begin()->first != target) {
    throw InternalError("extraction word did not produce a multiple of " + target.to_string());
  }
  ex.scalar = out.terms().begin()->second;
  return ex;
}

Rational gminus_string_on_omega(int ell, const SuperModule& module) {
  if (ell < 1) throw DomainError("ell must be >= 1");
  require_shape(ell, module, "gminus_string_on_omega");
  FermionVec v(omega(ell));
  for (int i = ell; i >= 1 && !v.is_zero(); --i) v = module.g_minus(i, v);
  const Rational vac = v.coeff(FermionState{});
  if (!(v == vac * FermionVec(FermionState{}))) {
    throw InternalError("G- string on Omega_ell left a non-vacuum component");
  }
  return vac;
}

FermionVec singular_w(int ell, const SuperModule& module) {
  if (ell < 1) throw DomainError("ell must be >= 1");
  require_shape(ell, module, "singular_w");
  FermionVec v(omega(ell));
  for (int i = ell; i >= 2; --i) v = module.g_minus(i, v);
  return v;
}

OperatorWord ladder_word(int from, int to) {
  if (from < 0 || to < 0) throw DomainError("ladder endpoints must be >= 0");
  OperatorWord w;
  if (to < from) {
    for (int k = to + 1; k <= from; ++k) w.letters.push_back({OpLabel::GMinus, HalfOdd::from_floor(k)});
  } else {
    for (int k = to; k > from; --k) w.letters.push_back({OpLabel::GPlus, HalfOdd::from_doubled(-(2 * k + 1))});
  }
  return w;
}

OperatorWord cyclicity_word(int n) {
  if (n < 0) throw DomainError("cyclicity word needs N >= 0");
  OperatorWord w;
  for (int k = n; k >= 0; --k) w.letters.push_back({OpLabel::GMinus, HalfOdd::from_doubled(-(2 * k + 1))});
  return w;
}

OperatorWord lift_word(int ell) {
  if (ell < 1) throw DomainError("ell must be >= 1");
  OperatorWord w;
  for (int k = ell - 1; k >= 1; --k) w.letters.push_back({OpLabel::GPlus, HalfOdd::from_doubled(-(2 * k + 1))});
  return w;
}

}  // namespace wakimoto
