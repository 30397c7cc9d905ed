#pragma once

// Hermite polynomials, their conjugates, pseudo-Wronskians and the
// constants relating pseudo-Wronskians of shifted Maya diagrams.

#include <cstddef>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpw/combinatorics.hpp"
#include "hpw/exactpoly.hpp"

namespace hpw {

/// Append-only table of H_n and conj-H_n (h_n(x) = i^-n H_n(ix)).
/// Lookups take a shared lock; extension takes the exclusive lock.
/// References stay valid for the lifetime of the cache.
class HermiteCache {
 public:
  HermiteCache() {
    H_.push_back(IntPoly{1});
    H_.push_back(IntPoly{0, 2});
    h_.push_back(IntPoly{1});
    h_.push_back(IntPoly{0, 2});
  }
  HermiteCache(const HermiteCache&) = delete;
  HermiteCache& operator=(const HermiteCache&) = delete;

  static HermiteCache& global() {
    static HermiteCache cache;
    return cache;
  }

  /// H_{n+1} = 2x H_n - 2n H_{n-1}
  const IntPoly& hermite(int n) { return get(n, false); }
  /// h_{n+1} = 2x h_n + 2n h_{n-1}
  const IntPoly& conj_hermite(int n) { return get(n, true); }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return H_.size();
  }

  /// Snapshot of both tables, for persistence.
  std::pair<std::vector<IntPoly>, std::vector<IntPoly>> snapshot() const {
    std::shared_lock lock(mu_);
    return {std::vector<IntPoly>(H_.begin(), H_.end()), std::vector<IntPoly>(h_.begin(), h_.end())};
  }

  /// Appends tabulated entries beyond the current size after checking each
  /// one against the recurrence. Returns false (and appends nothing) if the
  /// tables disagree with the recurrence.
  bool preload(const std::vector<IntPoly>& H, const std::vector<IntPoly>& h) {
    if (H.size() != h.size()) return false;
    std::unique_lock lock(mu_);
    for (std::size_t n = 0; n < H.size(); ++n) {
      const auto expect_H = n < 2 ? H_[n] : step(H[n - 1], H[n - 2], static_cast<long>(n - 1), false);
      const auto expect_h = n < 2 ? h_[n] : step(h[n - 1], h[n - 2], static_cast<long>(n - 1), true);
      if (!(H[n] == expect_H) || !(h[n] == expect_h)) return false;
    }
    for (std::size_t n = H_.size(); n < H.size(); ++n) {
      H_.push_back(H[n]);
      h_.push_back(h[n]);
    }
    return true;
  }

 private:
  static IntPoly step(const IntPoly& cur, const IntPoly& prev, long n, bool conj) {
    IntPoly next = cur.shifted_up(1) * BigInt(2);
    IntPoly tail = prev * BigInt(2 * n);
    return conj ? next + tail : next - tail;
  }

  const IntPoly& get(int n, bool conj) {
    if (n < 0) throw precondition_error("Hermite index must be non-negative");
    const auto idx = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mu_);
      if (idx < H_.size()) return conj ? h_[idx] : H_[idx];
    }
    std::unique_lock lock(mu_);
    while (H_.size() <= idx) {
      const std::size_t k = H_.size() - 1;
      H_.push_back(step(H_[k], H_[k - 1], static_cast<long>(k), false));
      h_.push_back(step(h_[k], h_[k - 1], static_cast<long>(k), true));
    }
    return conj ? h_[idx] : H_[idx];
  }

  mutable std::shared_mutex mu_;
  std::deque<IntPoly> H_;
  std::deque<IntPoly> h_;
};

inline IntPoly hermite_poly(int n) { return HermiteCache::global().hermite(n); }
inline IntPoly conj_hermite_poly(int n) { return HermiteCache::global().conj_hermite(n); }

/// Wronskian det[D^j f_i] with rows in the given order.
inline IntPoly wronskian(const std::vector<IntPoly>& fs) {
  const std::size_t n = fs.size();
  PolyMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = poly_derivative(fs[i], static_cast<unsigned>(j));
  return det_fraction_free(std::move(A));
}

/// Rows: h_{s_i}, ..., h_{s_i+n-1} for s descending, then
/// H_t, DH_t, ..., D^{n-1}H_t for t ascending.
inline PolyMatrix pseudo_wronskian_matrix(const MayaDiagram& M) {
  auto& cache = HermiteCache::global();
  const std::size_t n = static_cast<std::size_t>(girth(M));
  PolyMatrix A(n, n);
  std::size_t row = 0;
  for (int s : M.s()) {
    for (std::size_t j = 0; j < n; ++j) A(row, j) = cache.conj_hermite(s + static_cast<int>(j));
    ++row;
  }
  for (auto it = M.t().rbegin(); it != M.t().rend(); ++it) {
    const IntPoly& H = cache.hermite(*it);
    for (std::size_t j = 0; j < n; ++j) A(row, j) = poly_derivative(H, static_cast<unsigned>(j));
    ++row;
  }
  return A;
}

inline IntPoly pseudo_wronskian(const MayaDiagram& M) { return det_fraction_free(pseudo_wronskian_matrix(M)); }

struct EquivalenceFactor {
  MayaDiagram M;
  int k = 0;
  std::vector<int> E;
  std::vector<int> G;
  BigInt epsilon_product = 1;
  BigInt gamma_product = 1;
  /// H_M = ratio * H_{M-k}.
  BigRat ratio = 1;
};

namespace detail {

inline BigInt epsilon(const MayaDiagram& M, int i, int lo, int hi) {
  int holes_below = 0;
  for (int m = lo; m < i; ++m)
    if (!M.contains(m)) ++holes_below;
  BigInt prod = (holes_below % 2) ? -1 : 1;
  for (int m = i + 1; m <= hi; ++m)
    if (M.contains(m)) prod *= 2 * (m - i);
  return prod;
}

inline BigInt gamma(const MayaDiagram& M, int i, int lo, int hi) {
  int filled_above = 0;
  for (int m = i + 1; m <= hi; ++m)
    if (M.contains(m)) ++filled_above;
  BigInt prod = (filled_above % 2) ? -1 : 1;
  for (int m = lo; m < i; ++m)
    if (!M.contains(m)) prod *= 2 * (m - i);
  return prod;
}

}  // namespace detail

/// Constant relating H_M and H_{M-k} for k > 0.
inline EquivalenceFactor equivalence_factor(const MayaDiagram& M, int k) {
  if (k <= 0) throw precondition_error("equivalence_factor requires k > 0");
  EquivalenceFactor f;
  f.M = M;
  f.k = k;
  const int lo = M.min_hole();
  const int hi = M.max_element();
  for (int i = 0; i < k; ++i) {
    if (M.contains(i)) {
      f.E.push_back(i);
      f.epsilon_product *= detail::epsilon(M, i, lo, hi);
    } else {
      f.G.push_back(i);
      f.gamma_product *= detail::gamma(M, i, lo, hi);
    }
  }
  if (f.epsilon_product == 0 || f.gamma_product == 0)
    throw std::logic_error("vanishing equivalence factor");
  f.ratio = make_rat(f.epsilon_product, f.gamma_product);
  return f;
}

/// c with H_M = c * H_{M-k}, for any integer k.
inline BigRat equivalence_constant(const MayaDiagram& M, int k) {
  if (k == 0) return 1;
  if (k > 0) return equivalence_factor(M, k).ratio;
  BigRat r = equivalence_factor(M.shifted(-k), -k).ratio;
  return BigRat(1) / r;
}

struct EquivalenceReport {
  MayaDiagram M;
  int k = 0;
  BigRat constant = 1;
  bool match = false;
  IntPoly lhs;  // H_M
  IntPoly rhs;  // H_{M-k}
  int lhs_degree() const { return lhs.degree(); }
};

inline bool proportional_with(const IntPoly& lhs, const BigRat& c, const IntPoly& rhs) {
  return lhs * c.get_den() == rhs * c.get_num();
}

/// Computes both determinants and checks H_M = c H_{M-k} exactly.
inline EquivalenceReport verify_equivalence(const MayaDiagram& M, int k) {
  EquivalenceReport r;
  r.M = M;
  r.k = k;
  r.constant = equivalence_constant(M, k);
  r.lhs = pseudo_wronskian(M);
  r.rhs = k == 0 ? r.lhs : pseudo_wronskian(M.shifted(-k));
  r.match = !r.lhs.is_zero() && proportional_with(r.lhs, r.constant, r.rhs);
  return r;
}

/// Wr[h_{s_1}, ..., h_{s_p}] for a diagram with no non-negative elements.
inline IntPoly pure_conjugate_wronskian(const MayaDiagram& M) {
  if (!M.t().empty()) throw precondition_error("pure conjugate Wronskian needs an empty t-list");
  std::vector<IntPoly> fs;
  for (int s : M.s()) fs.push_back(conj_hermite_poly(s));
  return wronskian(fs);
}

/// prod_{i<j} (a_j - a_i)
inline BigInt vandermonde(const std::vector<int>& a) {
  BigInt v = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) v *= a[j] - a[i];
  return v;
}

struct ConjugateIdentity {
  std::vector<int> m;        // from lambda, descending
  std::vector<int> m_conj;   // from the conjugate, descending
  BigInt lhs_constant;       // 2^{C(l',2)} V(m')
  BigInt rhs_constant;       // 2^{C(l,2)} V(m)
  IntPoly wr_hermite;        // Wr[H_{m_1}, ..., H_{m_l}]
  IntPoly wr_conjugate;      // Wr[h_{m'_1}, ..., h_{m'_l'}]
  bool holds = false;
};

/// Relates the Hermite Wronskian of lambda to the conjugate-Hermite
/// Wronskian of its conjugate partition.
inline ConjugateIdentity conjugate_wronskian_identity(const Partition& lambda) {
  ConjugateIdentity r;
  r.m = maya_from_partition(lambda).t();
  r.m_conj = maya_from_partition(conjugate(lambda)).t();
  const long l = static_cast<long>(r.m.size());
  const long lc = static_cast<long>(r.m_conj.size());
  BigInt two_l, two_lc;
  mpz_ui_pow_ui(two_l.get_mpz_t(), 2, static_cast<unsigned long>(l * (l - 1) / 2));
  mpz_ui_pow_ui(two_lc.get_mpz_t(), 2, static_cast<unsigned long>(lc * (lc - 1) / 2));
  r.lhs_constant = two_lc * vandermonde(r.m_conj);
  r.rhs_constant = two_l * vandermonde(r.m);
  std::vector<IntPoly> H, h;
  for (int v : r.m) H.push_back(hermite_poly(v));
  for (int v : r.m_conj) h.push_back(conj_hermite_poly(v));
  r.wr_hermite = wronskian(H);
  r.wr_conjugate = wronskian(h);
  r.holds = r.wr_hermite * r.lhs_constant == r.wr_conjugate * r.rhs_constant;
  return r;
}

enum class ShiftDirection { Down, Up };

struct ShiftLemmaReport {
  BigInt constant;  // H_M = constant * H_{M'}
  IntPoly lhs;
  IntPoly rhs;
  bool holds = false;
};

/// Down: 0 in M, M' = M - 1.  Up: -1 not in M, M' = M + 1.
inline ShiftLemmaReport shift_lemma_check(const MayaDiagram& M, ShiftDirection dir) {
  ShiftLemmaReport r;
  const int p = M.p();
  const int q = M.q();
  BigInt c = 1;
  MayaDiagram Mp;
  if (dir == ShiftDirection::Down) {
    if (!M.contains(0)) throw precondition_error("shift down requires 0 in M");
    if (p % 2) c = -1;
    for (int b = 0; b + 1 < q; ++b) c *= 2 * M.t()[static_cast<std::size_t>(b)];
    Mp = M.shifted(-1);
  } else {
    if (M.contains(-1)) throw precondition_error("shift up requires -1 not in M");
    if ((p + q - 1) % 2) c = -1;
    for (int a = 0; a + 1 < p; ++a) c *= 2 * M.s()[static_cast<std::size_t>(a)];
    Mp = M.shifted(1);
  }
  r.constant = c;
  r.lhs = pseudo_wronskian(M);
  r.rhs = pseudo_wronskian(Mp);
  r.holds = r.lhs == r.rhs * c;
  return r;
}

}  // namespace hpw
