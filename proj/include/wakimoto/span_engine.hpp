#pragma once

// Truncated submodule machinery shared by the Clifford and Weyl modules.
//
// closure() computes the finite shadow of U(g).v: the least subspace that
// contains the generators and every image op(x) with x in the subspace and
// op(x) inside the weight/charge bounds. Images that leave the bounds are
// never projected back; only exact linear combinations of them whose
// out-of-bounds parts cancel are admitted. Every vector the engine produces
// is therefore a genuine element of the infinite-dimensional submodule, so
// membership answers are exact and non-membership answers are evidence
// scoped to the configuration used.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wakimoto/rational.hpp"
#include "wakimoto/sparse_vector.hpp"

namespace wakimoto {

struct ClosureConfig {
  Rational weight_cutoff{4};
  /// Inclusive charge bounds; nullopt means unbounded.
  std::optional<std::pair<int, int>> charge_window;
  /// Extra weight allowed for intermediate vectors.
  Rational excursion{2};

  /// Doubled weight bound for intermediates: 2 * (cutoff + excursion).
  int intermediate_bound2() const { return static_cast<int>(((weight_cutoff + excursion) * Rational(2)).floor()); }
  int cutoff2() const { return static_cast<int>((weight_cutoff * Rational(2)).floor()); }
  bool charge_ok(int q) const {
    return !charge_window || (q >= charge_window->first && q <= charge_window->second);
  }
};

/// Row-reduced echelon basis of a subspace. The pivot of each row is its
/// largest key; pivot coefficients are 1 and no other row has a nonzero
/// entry at a pivot, so the basis of a given subspace is unique.
template <class K>
class SpanBasis {
 public:
  using Vec = SparseVector<K>;

  std::size_t dimension() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  /// Rows in increasing pivot order.
  std::vector<Vec> rows() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(r);
    return out;
  }
  const std::map<K, Vec>& rows_by_pivot() const { return rows_; }
  bool has_pivot(const K& k) const { return rows_.count(k) != 0; }

  /// Remainder of v modulo the span (zero iff v is in the span).
  Vec reduce(Vec v) const {
    Vec rest;
    while (!v.is_zero()) {
      const K lead = v.leading_key();
      const Rational c = v.leading_coeff();
      const auto it = rows_.find(lead);
      if (it == rows_.end()) {
        rest.add(lead, c);
        v.add(lead, -c);
      } else {
        v.axpy(-c, it->second);
      }
    }
    return rest;
  }

  bool contains(const Vec& v) const {
    Vec w = v;
    while (!w.is_zero()) {
      const auto it = rows_.find(w.leading_key());
      if (it == rows_.end()) return false;
      w.axpy(-w.leading_coeff(), it->second);
    }
    return true;
  }

  /// Adds v to the span; returns the reduced new row, or zero when v was
  /// already contained.
  Vec insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.is_zero()) return r;
    r *= Rational(1) / r.leading_coeff();
    const K pivot = r.leading_key();
    for (auto& [p, row] : rows_) {
      const Rational c = row.coeff(pivot);
      if (!c.is_zero()) row.axpy(-c, r);
    }
    rows_.emplace(pivot, r);
    return r;
  }

  /// Intersection with the span of keys satisfying `keep`, valid whenever
  /// keep is downward closed in the key order (e.g. a weight cutoff).
  template <class Pred>
  SpanBasis restricted(Pred keep) const {
    SpanBasis out;
    for (const auto& [p, r] : rows_) {
      if (keep(p)) out.rows_.emplace(p, r);
    }
    return out;
  }

  friend bool operator==(const SpanBasis&, const SpanBasis&) = default;

 private:
  std::map<K, Vec> rows_;
};

/// Incremental elimination on pairs (image, source): reduces the image part
/// and carries the same combination along on the source part. A pair whose
/// image reduces to zero yields a source combination in the kernel.
template <class OutKey, class InKey>
class PairReducer {
 public:
  using Out = SparseVector<OutKey>;
  using In = SparseVector<InKey>;

  /// Returns the source combination if the image cancels, otherwise stores it.
  std::optional<In> push(Out image, In source) {
    while (!image.is_zero()) {
      const OutKey lead = image.leading_key();
      const auto it = rows_.find(lead);
      if (it == rows_.end()) {
        const Rational inv = Rational(1) / image.leading_coeff();
        image *= inv;
        source *= inv;
        rows_.emplace(lead, std::make_pair(std::move(image), std::move(source)));
        return std::nullopt;
      }
      const Rational c = image.leading_coeff();
      image.axpy(-c, it->second.first);
      source.axpy(-c, it->second.second);
    }
    return source;
  }

 private:
  std::map<OutKey, std::pair<Out, In>> rows_;
};

template <GradedKey K>
bool within_bounds(const K& k, int bound2, const ClosureConfig& cfg) {
  return k.weight2() <= bound2 && cfg.charge_ok(k.charge());
}

/// Closure of the generators under the operators at the given truncation.
///
/// Scalar-acting elements (central terms, the S(n)/T(n) of the Clifford
/// side) add nothing to a span and need not appear in `ops`.
/// `stop` is polled after every insertion; the search ends early when it
/// returns true (the partial basis is still an exact subspace of the
/// submodule). The result is restricted to weight <= cutoff.
template <GradedKey K>
SpanBasis<K> closure(const std::vector<SparseVector<K>>& generators, const std::vector<ModeOperator<K>>& ops,
                     const ClosureConfig& cfg,
                     const std::function<bool(const SpanBasis<K>&)>& stop = nullptr) {
  using Vec = SparseVector<K>;
  const int bound2 = cfg.intermediate_bound2();
  SpanBasis<K> basis;
  std::vector<Vec> queue;
  std::vector<PairReducer<K, K>> pending(ops.size());

  auto split = [&](const Vec& v) {
    std::pair<Vec, Vec> io;  // (inside, outside)
    for (const auto& [k, c] : v.terms()) (within_bounds(k, bound2, cfg) ? io.first : io.second).add(k, c);
    return io;
  };
  auto admit = [&](const Vec& v) {
    Vec r = basis.insert(v);
    if (r.is_zero()) return false;
    queue.push_back(std::move(r));
    return true;
  };

  for (const Vec& g : generators) {
    auto [in, out] = split(g);
    if (out.is_zero() && !in.is_zero()) admit(in);
  }
  if (stop && stop(basis)) return basis.restricted([&](const K& k) { return k.weight2() <= cfg.cutoff2(); });

  // Work through the queue in insertion order; each queued vector is pushed
  // through every operator exactly once.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vec v = queue[head];
    for (std::size_t i = 0; i < ops.size(); ++i) {
      Vec image = ops[i].apply(v);
      if (image.is_zero()) continue;
      auto [in, out] = split(image);
      if (out.is_zero()) {
        admit(in);
      } else if (auto cancelled = pending[i].push(std::move(out), v)) {
        // op(cancelled) lies inside the bounds.
        Vec img = ops[i].apply(*cancelled);
        admit(split(img).first);
      }
      if (stop && stop(basis)) {
        return basis.restricted([&](const K& k) { return k.weight2() <= cfg.cutoff2(); });
      }
    }
  }
  return basis.restricted([&](const K& k) { return k.weight2() <= cfg.cutoff2(); });
}

/// True iff `vacuum` lies in closure([v]).
template <GradedKey K>
bool cyclic_probe(const SparseVector<K>& v, const K& vacuum, const std::vector<ModeOperator<K>>& ops,
                  const ClosureConfig& cfg) {
  const auto found = [&](const SpanBasis<K>& b) { return b.has_pivot(vacuum); };
  return closure<K>({v}, ops, cfg, found).has_pivot(vacuum);
}

/// Joint kernel of the annihilators on span(piece): all v with op(v) = 0 for
/// every op. Images are compared exactly, without truncation.
template <GradedKey K>
SpanBasis<K> joint_kernel(const std::vector<ModeOperator<K>>& annihilators, const std::vector<K>& piece) {
  using Tagged = std::pair<std::size_t, K>;
  PairReducer<Tagged, K> reducer;
  SpanBasis<K> kernel;
  for (const K& b : piece) {
    const SparseVector<K> source(b);
    SparseVector<Tagged> image;
    for (std::size_t i = 0; i < annihilators.size(); ++i) {
      const SparseVector<K> out = annihilators[i].apply(source);
      for (const auto& [k, c] : out.terms()) image.add({i, k}, c);
    }
    if (auto ker = reducer.push(std::move(image), source)) kernel.insert(*ker);
  }
  return kernel;
}

}  // namespace wakimoto
