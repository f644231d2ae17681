#include "wakimoto/weyl.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wakimoto/errors.hpp"

namespace wakimoto {

namespace {

void insert_desc(std::vector<int>& v, int n) {
  v.insert(std::upper_bound(v.begin(), v.end(), n, std::greater<>()), n);
}

void erase_one(std::vector<int>& v, int n) {
  const auto it = std::find(v.begin(), v.end(), n);
  if (it == v.end()) throw InternalError("removing an absent Weyl mode");
  v.erase(it);
}

// One factor of a normal-ordered product acting on a monomial.
struct Factor {
  bool star;  // a*(mode) when true, a(mode) otherwise
  int mode;
  bool annihilates() const { return star ? mode >= 1 : mode >= 0; }
};

// Coefficient and monomial after one factor, or nothing when it vanishes.
bool act(const Factor& f, WeylState& st, std::int64_t& coeff) {
  if (f.star) {
    if (f.mode <= 0) {
      st = st.with_astar(-f.mode);
      return true;
    }
    // a*(m), m >= 1, acts as -d/da(-m).
    const int c = st.count_a(f.mode);
    if (c == 0) return false;
    coeff *= -c;
    st = st.without_a(f.mode);
    return true;
  }
  if (f.mode <= -1) {
    st = st.with_a(-f.mode);
    return true;
  }
  // a(n), n >= 0, acts as d/da*(-n).
  const int c = st.count_astar(f.mode);
  if (c == 0) return false;
  coeff *= c;
  st = st.without_astar(f.mode);
  return true;
}

// Adds scale * :product of factors: applied to the monomial into out.
void add_normal_ordered(const std::vector<Factor>& factors, const WeylState& st, const Rational& scale,
                        WeylVec& out) {
  WeylState cur = st;
  std::int64_t coeff = 1;
  for (const Factor& f : factors) {
    if (f.annihilates() && !act(f, cur, coeff)) return;
  }
  for (const Factor& f : factors) {
    if (!f.annihilates()) act(f, cur, coeff);
  }
  out.add(cur, scale * Rational(coeff));
}

int max_or(const std::vector<int>& v, int fallback) { return v.empty() ? fallback : v.front(); }

WeylVec apply_single(const Factor& f, const WeylVec& v) {
  WeylVec out;
  for (const auto& [st, c] : v.terms()) add_normal_ordered({f}, st, c, out);
  return out;
}

}  // namespace

WeylState::WeylState(std::vector<int> a_modes, std::vector<int> astar_modes)
    : a_(std::move(a_modes)), astar_(std::move(astar_modes)) {
  for (const int n : a_) {
    if (n < 1) throw DomainError("a-creation modes must be >= 1, got " + std::to_string(n));
  }
  for (const int n : astar_) {
    if (n < 0) throw DomainError("a*-creation modes must be >= 0, got " + std::to_string(n));
  }
  std::sort(a_.begin(), a_.end(), std::greater<>());
  std::sort(astar_.begin(), astar_.end(), std::greater<>());
}

int WeylState::weight() const {
  int w = 0;
  for (const int n : a_) w += n;
  for (const int n : astar_) w += n;
  return w;
}

int WeylState::count_a(int n) const { return static_cast<int>(std::count(a_.begin(), a_.end(), n)); }
int WeylState::count_astar(int n) const { return static_cast<int>(std::count(astar_.begin(), astar_.end(), n)); }

WeylState WeylState::with_a(int n) const {
  if (n < 1) throw DomainError("a-creation modes must be >= 1");
  WeylState s = *this;
  insert_desc(s.a_, n);
  return s;
}

WeylState WeylState::with_astar(int n) const {
  if (n < 0) throw DomainError("a*-creation modes must be >= 0");
  WeylState s = *this;
  insert_desc(s.astar_, n);
  return s;
}

WeylState WeylState::without_a(int n) const {
  WeylState s = *this;
  erase_one(s.a_, n);
  return s;
}

WeylState WeylState::without_astar(int n) const {
  WeylState s = *this;
  erase_one(s.astar_, n);
  return s;
}

std::string WeylState::to_string() const {
  std::string out;
  for (const int n : a_) out += "a(" + std::to_string(-n) + ") ";
  for (const int n : astar_) out += "a*(" + std::to_string(-n) + ") ";
  return out + "|0>";
}

std::strong_ordering operator<=>(const WeylState& a, const WeylState& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (auto c = a.charge() <=> b.charge(); c != 0) return c;
  if (auto c = a.a_ <=> b.a_; c != 0) return c;
  return a.astar_ <=> b.astar_;
}

WeylVec apply_a(int n, const WeylVec& v) { return apply_single({false, n}, v); }
WeylVec apply_astar(int n, const WeylVec& v) { return apply_single({true, n}, v); }

std::vector<WeylState> enumerate_weyl_basis(int max_weight, int charge_lo, int charge_hi) {
  std::vector<WeylState> out;
  if (max_weight < 0 || charge_lo > charge_hi) return out;

  // Descending multisets of parts in [1, max_part] with sum <= budget.
  std::vector<std::vector<int>> parts_by_sum;
  std::function<void(std::vector<int>&, int, int, std::vector<std::vector<int>>&)> gen =
      [&](std::vector<int>& cur, int max_part, int budget, std::vector<std::vector<int>>& acc) {
        acc.push_back(cur);
        for (int p = std::min(max_part, budget); p >= 1; --p) {
          cur.push_back(p);
          gen(cur, p, budget - p, acc);
          cur.pop_back();
        }
      };
  std::vector<std::vector<int>> multisets;
  std::vector<int> scratch;
  gen(scratch, max_weight, max_weight, multisets);

  auto sum = [](const std::vector<int>& v) {
    int s = 0;
    for (const int x : v) s += x;
    return s;
  };
  for (const auto& a : multisets) {
    for (const auto& star_pos : multisets) {
      if (sum(a) + sum(star_pos) > max_weight) continue;
      const int base = static_cast<int>(star_pos.size()) - static_cast<int>(a.size());
      for (int zeros = std::max(0, charge_lo - base); base + zeros <= charge_hi; ++zeros) {
        std::vector<int> star = star_pos;
        star.insert(star.end(), static_cast<std::size_t>(zeros), 0);
        out.emplace_back(a, std::move(star));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeylVec WakimotoModule::h(int n, const WeylVec& v) const {
  WeylVec out;
  const Rational minus_two(-2);
  for (const auto& [st, c] : v.terms()) {
    // a*(m) a(n-m) survives only if each annihilating factor meets a partner.
    std::set<int> ms;
    for (const int k : st.a_modes()) ms.insert(k);
    for (const int k : st.astar_modes()) {
      if (n - k <= 0) ms.insert(n - k);
    }
    for (int m = n + 1; m <= 0; ++m) ms.insert(m);
    for (const int m : ms) add_normal_ordered({{true, m}, {false, n - m}}, st, minus_two * c, out);
  }
  out.axpy(-chi_.coeff(n), v);
  return out;
}

WeylVec WakimotoModule::f(int n, const WeylVec& v) const {
  WeylVec out;
  const Rational minus_one(-1);
  for (const auto& [st, c] : v.terms()) {
    const int top_a = std::max(0, max_or(st.a_modes(), 0));
    const int top_star = std::max(-1, max_or(st.astar_modes(), -1));
    const int lo = std::min(0, n - top_a - top_star);
    for (int m1 = lo; m1 <= top_a; ++m1) {
      if (m1 >= 1 && st.count_a(m1) == 0) continue;
      for (int m2 = lo; m2 <= top_a; ++m2) {
        if (m2 >= 1 && st.count_a(m2) == 0) continue;
        const int k = n - m1 - m2;
        if (k >= 0 && st.count_astar(k) == 0) continue;
        add_normal_ordered({{true, m1}, {true, m2}, {false, k}}, st, minus_one * c, out);
      }
    }
  }
  if (n != 0) out.axpy(Rational(2 * n), apply_astar(n, v));
  const int top = max_weight2(v) / 2;
  for (const auto& [j, chi_j] : chi_.coeffs()) {
    // a*(n-j) kills everything once n-j exceeds the top weight.
    if (n - j > top) continue;
    out.axpy(-chi_j, apply_astar(static_cast<int>(n - j), v));
  }
  return out;
}

WeylVec WakimotoModule::apply(AffineGenerator g, int n, const WeylVec& v) const {
  switch (g) {
    case AffineGenerator::E: return e(n, v);
    case AffineGenerator::H: return h(n, v);
    case AffineGenerator::F: return f(n, v);
  }
  throw InternalError("unknown affine generator");
}

std::vector<ModeOperator<WeylState>> WakimotoModule::mode_operators(int bound) const {
  std::vector<ModeOperator<WeylState>> ops;
  const int p = static_cast<int>(pole_order(chi_));
  auto push = [&](AffineGenerator g, const char* name, int n) {
    ops.push_back({std::string(name) + "(" + std::to_string(n) + ")",
                   [this, g, n](const WeylVec& v) { return apply(g, n, v); }});
  };
  // Modes below -bound raise every vector past the bound through a nonzero
  // creation part; e(n), h(n) above bound vanish or act as scalars; f(n)
  // reaches weight <= bound only through the pole terms of chi.
  for (int n = -bound; n <= bound; ++n) push(AffineGenerator::E, "e", n);
  for (int n = -bound; n <= bound; ++n) push(AffineGenerator::H, "h", n);
  for (int n = -bound; n <= bound + p; ++n) push(AffineGenerator::F, "f", n);
  return ops;
}

std::vector<ModeOperator<WeylState>> WakimotoModule::positive_operators(int weight) const {
  std::vector<ModeOperator<WeylState>> ops;
  const int p = static_cast<int>(pole_order(chi_));
  auto push = [&](AffineGenerator g, const char* name, int n) {
    ops.push_back({std::string(name) + "(" + std::to_string(n) + ")",
                   [this, g, n](const WeylVec& v) { return apply(g, n, v); }});
  };
  for (int n = 0; n <= weight; ++n) push(AffineGenerator::E, "e", n);
  for (int n = 1; n <= std::max(weight, p); ++n) push(AffineGenerator::H, "h", n);
  for (int n = 1; n <= weight + p; ++n) push(AffineGenerator::F, "f", n);
  return ops;
}

std::optional<RelationFailure> affine_relation_check(const WakimotoModule& module, int m, int n,
                                                     const std::vector<WeylState>& basis) {
  using G = AffineGenerator;
  const int k = WakimotoModule::kLevel;
  const bool delta = (m + n == 0);
  auto bracket = [&](G x, G y, const WeylVec& v) {
    return module.apply(x, m, module.apply(y, n, v)) - module.apply(y, n, module.apply(x, m, v));
  };
  struct Rel {
    const char* name;
    G x, y;
    std::function<WeylVec(const WeylVec&)> rhs;
  };
  const std::vector<Rel> rels = {
      {"[h,e]", G::H, G::E, [&](const WeylVec& v) { return Rational(2) * module.e(m + n, v); }},
      {"[h,f]", G::H, G::F, [&](const WeylVec& v) { return Rational(-2) * module.f(m + n, v); }},
      {"[e,f]", G::E, G::F,
       [&](const WeylVec& v) {
         WeylVec r = module.h(m + n, v);
         if (delta) r.axpy(Rational(m * k), v);
         return r;
       }},
      {"[h,h]", G::H, G::H, [&](const WeylVec& v) { return delta ? Rational(2 * m * k) * v : WeylVec{}; }},
      {"[e,e]", G::E, G::E, [](const WeylVec&) { return WeylVec{}; }},
      {"[f,f]", G::F, G::F, [](const WeylVec&) { return WeylVec{}; }},
  };
  for (const WeylState& b : basis) {
    const WeylVec v(b);
    for (const Rel& r : rels) {
      if (!(bracket(r.x, r.y, v) == r.rhs(v))) return RelationFailure{r.name, m, n, b};
    }
  }
  return std::nullopt;
}

bool ProbeEvidence::reducible_evidence() const {
  if (!non_cyclic_witnesses.empty()) return true;
  return std::any_of(singular_candidates.begin(), singular_candidates.end(),
                     [](const SingularCandidate& s) { return !s.cyclic; });
}

ProbeEvidence wakimoto_probe(const ChiSeries& chi, const ClosureConfig& cfg) {
  if (!cfg.charge_window) throw DomainError("the Weyl probe needs a charge window");
  const WakimotoModule module(chi);
  const int cutoff = cfg.cutoff2() / 2;
  const auto [lo, hi] = *cfg.charge_window;
  const auto ops = module.mode_operators(cfg.intermediate_bound2() / 2);
  const WeylState vacuum;

  ProbeEvidence ev;
  ev.cfg = cfg;
  const std::vector<WeylState> basis = enumerate_weyl_basis(cutoff, lo, hi);
  ev.basis_size = basis.size();

  for (const WeylState& b : basis) {
    if (!cyclic_probe<WeylState>(WeylVec(b), vacuum, ops, cfg)) {
      ev.all_cyclic = false;
      ev.non_cyclic_witnesses.push_back(b);
    }
  }

  for (int w = 0; w <= cutoff; ++w) {
    const auto annihilators = module.positive_operators(w);
    for (int q = lo; q <= hi; ++q) {
      std::vector<WeylState> piece;
      for (const WeylState& b : basis) {
        if (b.weight() == w && b.charge() == q) piece.push_back(b);
      }
      if (piece.empty()) continue;
      for (const WeylVec& row : joint_kernel<WeylState>(annihilators, piece).rows()) {
        if (row == WeylVec(vacuum)) continue;
        ev.singular_candidates.push_back({w, q, row, cyclic_probe<WeylState>(row, vacuum, ops, cfg)});
      }
    }
  }

  const SpanBasis<WeylState> from_vacuum = closure<WeylState>({WeylVec(vacuum)}, ops, cfg);
  ev.vacuum_generates_truncation = from_vacuum.dimension() == basis.size();
  return ev;
}

}  // namespace wakimoto
