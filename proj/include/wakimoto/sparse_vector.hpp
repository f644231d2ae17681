#pragma once

#include <concepts>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "wakimoto/rational.hpp"

namespace wakimoto {

/// Basis keys carry a doubled conformal weight and an integer charge; their
/// operator< must order by (weight, charge, then anything total).
template <class K>
concept GradedKey = std::totally_ordered<K> && requires(const K& k) {
  { k.weight2() } -> std::convertible_to<int>;
  { k.charge() } -> std::convertible_to<int>;
};

/// Finite linear combination of basis keys with exact coefficients.
/// Zero coefficients are never stored, iteration follows the key order.
template <class K>
class SparseVector {
 public:
  using Terms = std::map<K, Rational>;

  SparseVector() = default;
  explicit SparseVector(const K& key, Rational coeff = Rational(1)) { add(key, coeff); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const K& key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const K& key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += factor * other
  void axpy(const Rational& factor, const SparseVector& other) {
    if (factor.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, factor * c);
  }

  SparseVector& operator+=(const SparseVector& o) {
    axpy(Rational(1), o);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    axpy(Rational(-1), o);
    return *this;
  }
  SparseVector& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Rational& s, SparseVector v) { return v *= s; }

  /// Largest key in the basis order; precondition: !is_zero().
  const K& leading_key() const { return terms_.rbegin()->first; }
  const Rational& leading_coeff() const { return terms_.rbegin()->second; }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Terms terms_;
};

/// Applies a basis-level action linearly. `image(key, coeff, out)` must add
/// coeff * (action on key) into out.
template <class K, class F>
SparseVector<K> apply_linear(const SparseVector<K>& v, F&& image) {
  SparseVector<K> out;
  for (const auto& [k, c] : v.terms()) image(k, c, out);
  return out;
}

template <GradedKey K>
int max_weight2(const SparseVector<K>& v) {
  int w = 0;
  for (const auto& [k, c] : v.terms()) w = std::max(w, static_cast<int>(k.weight2()));
  return w;
}

/// A labelled linear operator on a graded Fock space.
template <class K>
struct ModeOperator {
  std::string label;
  std::function<SparseVector<K>(const SparseVector<K>&)> apply;
};

}  // namespace wakimoto
