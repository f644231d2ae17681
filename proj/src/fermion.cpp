#include "wakimoto/fermion.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "wakimoto/errors.hpp"

namespace wakimoto {

namespace {

int popcount_above(std::uint64_t mask, int k) {
  if (k >= 63) return 0;
  return std::popcount(mask >> (k + 1));
}

std::uint64_t bit(int k) {
  if (k < 0 || k > FermionState::kMaxModeIndex) {
    throw DomainError("fermion mode index " + std::to_string(k) + " outside supported range");
  }
  return std::uint64_t{1} << k;
}

int doubled_sum(std::uint64_t mask) {
  int w = 0;
  while (mask != 0) {
    const int k = std::countr_zero(mask);
    w += 2 * k + 1;
    mask &= mask - 1;
  }
  return w;
}

std::vector<HalfOdd> modes_descending(std::uint64_t mask) {
  std::vector<HalfOdd> out;
  for (int k = FermionState::kMaxModeIndex; k >= 0; --k) {
    if (mask & (std::uint64_t{1} << k)) out.push_back(HalfOdd::from_floor(k));
  }
  return out;
}

std::uint64_t mask_from(const std::vector<HalfOdd>& modes, const char* name) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i].doubled() < 1) throw DomainError(std::string(name) + " entries must be >= 1/2");
    if (i > 0 && !(modes[i] < modes[i - 1])) {
      throw DomainError(std::string(name) + " must be strictly decreasing");
    }
    m |= bit(modes[i].floor());
  }
  return m;
}

}  // namespace

HalfOdd HalfOdd::from_doubled(int doubled) {
  if (doubled % 2 == 0) throw DomainError("mode " + std::to_string(doubled) + "/2 is not half-odd");
  return HalfOdd(doubled);
}

HalfOdd HalfOdd::from_rational(const Rational& r) {
  const Rational twice = r * Rational(2);
  if (!twice.is_integer()) throw DomainError("mode " + r.to_string() + " is not half-odd");
  return from_doubled(static_cast<int>(twice.to_int()));
}

FermionState FermionState::from_modes(const std::vector<HalfOdd>& lambda, const std::vector<HalfOdd>& mu) {
  return FermionState(mask_from(lambda, "lambda"), mask_from(mu, "mu"));
}

std::vector<HalfOdd> FermionState::lambda() const { return modes_descending(minus_); }
std::vector<HalfOdd> FermionState::mu() const { return modes_descending(plus_); }

int FermionState::weight2() const { return doubled_sum(minus_) + doubled_sum(plus_); }

int FermionState::charge() const { return std::popcount(plus_) - std::popcount(minus_); }

std::string FermionState::to_string() const {
  std::string out;
  for (const HalfOdd& m : lambda()) out += "Psi-(" + (-m).to_string() + ") ";
  for (const HalfOdd& m : mu()) out += "Psi+(" + (-m).to_string() + ") ";
  return out + "|0>";
}

// Lexicographic comparison of strictly decreasing mode lists coincides with
// numeric comparison of the occupation masks.
std::strong_ordering operator<=>(const FermionState& a, const FermionState& b) {
  if (auto c = a.weight2() <=> b.weight2(); c != 0) return c;
  if (auto c = a.charge() <=> b.charge(); c != 0) return c;
  if (auto c = a.minus_ <=> b.minus_; c != 0) return c;
  return a.plus_ <=> b.plus_;
}

FermionState omega_state(int s) {
  if (s < 0) throw DomainError("Omega_s requires s >= 0");
  std::uint64_t plus = 0;
  for (int k = 1; k <= s; ++k) plus |= bit(k);
  return FermionState(0, plus);
}

std::optional<SignedState> apply_psi(Species species, HalfOdd mode, const FermionState& s) {
  std::uint64_t minus = s.minus_bits();
  std::uint64_t plus = s.plus_bits();
  const int n_minus = std::popcount(minus);
  const bool creation = mode.doubled() < 0;
  const int k = creation ? (-mode).floor() : mode.floor();
  if (k > FermionState::kMaxModeIndex) {
    // Annihilators beyond the representable range cannot meet an occupied mode.
    if (!creation) return std::nullopt;
    throw DomainError("fermion mode " + mode.to_string() + " outside supported range");
  }
  const std::uint64_t b = std::uint64_t{1} << k;
  int transpositions = 0;

  if (species == Species::Minus) {
    if (creation) {
      if (minus & b) return std::nullopt;
      transpositions = popcount_above(minus, k);
      minus |= b;
    } else {
      if (!(plus & b)) return std::nullopt;
      transpositions = n_minus + popcount_above(plus, k);
      plus &= ~b;
    }
  } else {
    if (creation) {
      if (plus & b) return std::nullopt;
      transpositions = n_minus + popcount_above(plus, k);
      plus |= b;
    } else {
      if (!(minus & b)) return std::nullopt;
      transpositions = popcount_above(minus, k);
      minus &= ~b;
    }
  }
  return SignedState{(transpositions % 2 == 0) ? 1 : -1, FermionState(minus, plus)};
}

FermionVec apply_psi(Species species, HalfOdd mode, const FermionVec& v) {
  return apply_linear(v, [&](const FermionState& s, const Rational& c, FermionVec& out) {
    if (auto r = apply_psi(species, mode, s)) out.add(r->state, r->sign > 0 ? c : -c);
  });
}

bool check_tilde(const FermionVec& v) {
  return apply_psi(Species::Minus, HalfOdd::from_floor(0), v).is_zero();
}

namespace {

// Subsets of modes {first_index + 1/2, ...} with doubled weight sum <= budget.
void subsets(int first_index, int budget, std::vector<std::pair<std::uint64_t, int>>& out) {
  std::function<void(int, std::uint64_t, int)> rec = [&](int from, std::uint64_t mask, int used) {
    out.emplace_back(mask, used);
    for (int k = from; used + 2 * k + 1 <= budget; ++k) rec(k + 1, mask | bit(k), used + 2 * k + 1);
  };
  rec(first_index, 0, 0);
}

}  // namespace

std::vector<FermionState> enumerate_basis(const Rational& max_weight, bool ambient) {
  if (max_weight.sign() < 0) throw DomainError("max_weight must be >= 0");
  const int budget = static_cast<int>((max_weight * Rational(2)).floor());
  std::vector<std::pair<std::uint64_t, int>> minus_sets;
  std::vector<std::pair<std::uint64_t, int>> plus_sets;
  subsets(0, budget, minus_sets);
  subsets(ambient ? 0 : 1, budget, plus_sets);

  std::vector<FermionState> out;
  for (const auto& [lm, lw] : minus_sets) {
    for (const auto& [pm, pw] : plus_sets) {
      if (lw + pw <= budget) out.emplace_back(lm, pm);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::pair<Rational, int>, std::size_t> graded_dimension(const Rational& max_weight, bool ambient) {
  std::map<std::pair<Rational, int>, std::size_t> out;
  for (const FermionState& s : enumerate_basis(max_weight, ambient)) ++out[{s.weight(), s.charge()}];
  return out;
}

}  // namespace wakimoto
