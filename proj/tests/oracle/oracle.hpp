#pragma once

// Independent reference implementations used only by the tests. Nothing
// here calls the library's Hermite tables, determinant or corner code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hpw/exactpoly.hpp"

namespace oracle {

using hpw::BigInt;
using hpw::IntPoly;

/// H_n = n! sum_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!)
inline IntPoly hermite(int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  BigInt nf;
  mpz_fac_ui(nf.get_mpz_t(), static_cast<unsigned long>(n));
  for (int m = 0; 2 * m <= n; ++m) {
    BigInt mf, rf, pw;
    mpz_fac_ui(mf.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_fac_ui(rf.get_mpz_t(), static_cast<unsigned long>(n - 2 * m));
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(n - 2 * m));
    BigInt v = nf * pw / (mf * rf);
    c[static_cast<std::size_t>(n - 2 * m)] = (m % 2) ? BigInt(-v) : v;
  }
  return IntPoly(std::move(c));
}

/// i^{-n} H_n(i x): the x^{n-2m} coefficient picks up (-1)^m.
inline IntPoly conj_hermite(int n) {
  std::vector<BigInt> c = hermite(n).coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (((static_cast<std::size_t>(n) - k) / 2) % 2) c[k] = -c[k];
  return IntPoly(std::move(c));
}

inline IntPoly derivative(IntPoly p, int order) {
  for (int r = 0; r < order; ++r) {
    const auto& c = p.coeffs();
    std::vector<BigInt> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<unsigned long>(k));
    p = IntPoly(std::move(d));
  }
  return p;
}

using Matrix = std::vector<std::vector<IntPoly>>;

/// Sum over permutations; fine up to 7 x 7.
inline IntPoly leibniz_det(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return IntPoly{1};
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    IntPoly term{1};
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * a[i][perm[i]];
    total = (inversions % 2) ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// (h_a, h_{a+1}, ..., h_{a+n-1})
inline std::vector<IntPoly> conj_row(int a, int n) {
  std::vector<IntPoly> r;
  for (int k = 0; k < n; ++k) r.push_back(conj_hermite(a + k));
  return r;
}

/// (H_a, H_a', ..., H_a^{(n-1)})
inline std::vector<IntPoly> hermite_row(int a, int n) {
  std::vector<IntPoly> r;
  for (int k = 0; k < n; ++k) r.push_back(derivative(hermite(a), k));
  return r;
}

/// Plain Wronskian of Hermite polynomials with the given indices, top row first.
inline IntPoly hermite_wronskian(const std::vector<int>& idx) {
  Matrix m;
  for (int a : idx) m.push_back(hermite_row(a, static_cast<int>(idx.size())));
  return leibniz_det(m);
}

inline IntPoly conj_wronskian(const std::vector<int>& idx) {
  Matrix m;
  const int n = static_cast<int>(idx.size());
  for (int a : idx) {
    std::vector<IntPoly> row;
    for (int k = 0; k < n; ++k) row.push_back(derivative(conj_hermite(a), k));
    m.push_back(row);
  }
  return leibniz_det(m);
}

/// A Maya diagram as an explicit finite set plus "everything below lo".
struct Set {
  int lo = 0;
  std::set<int> elems;  // members in [lo, inf)
  bool contains(int m) const { return m < lo || elems.count(m) > 0; }
};

/// Pseudo-Wronskian straight from the definition: holes s of M below 0
/// (as -s-1) descending, then members t >= 0 ascending.
inline IntPoly pseudo_wronskian(const Set& M) {
  std::vector<int> s, t;
  const int top = M.elems.empty() ? M.lo : *M.elems.rbegin();
  for (int m = std::min(M.lo, 0); m < 0; ++m)
    if (!M.contains(m)) s.push_back(-m - 1);
  for (int m = 0; m <= top; ++m)
    if (M.contains(m)) t.push_back(m);
  std::sort(s.begin(), s.end(), std::greater<>());
  const int n = static_cast<int>(s.size() + t.size());
  Matrix a;
  for (int v : s) a.push_back(conj_row(v, n));
  for (int v : t) a.push_back(hermite_row(v, n));
  return leibniz_det(a);
}

/// Number of holes below k plus number of members at or above k.
inline int girth_at(const Set& M, int k) {
  int g = 0;
  const int top = M.elems.empty() ? M.lo : *M.elems.rbegin();
  for (int m = std::min(M.lo, k); m <= std::max(top, k); ++m) {
    if (m < k && !M.contains(m)) ++g;
    if (m >= k && M.contains(m)) ++g;
  }
  return g;
}

/// Minimum of girth_at over every shift that can matter.
inline int brute_min_girth(const Set& M) {
  const int top = M.elems.empty() ? M.lo : *M.elems.rbegin();
  int best = girth_at(M, M.lo);
  for (int k = M.lo - 2; k <= top + 2; ++k) best = std::min(best, girth_at(M, k));
  return best;
}

inline std::vector<int> brute_min_origins(const Set& M) {
  const int r = brute_min_girth(M);
  const int top = M.elems.empty() ? M.lo : *M.elems.rbegin();
  std::vector<int> out;
  for (int k = M.lo - 2; k <= top + 2; ++k)
    if (girth_at(M, k) == r) out.push_back(k);
  return out;
}

/// Every partition of n, parts descending.
inline std::vector<std::vector<int>> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

/// Random set with lo = lo and members drawn from [lo, hi].
inline Set random_set(std::mt19937& rng, int lo, int hi, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  Set M;
  M.lo = lo;
  for (int m = lo; m <= hi; ++m)
    if (coin(rng)) M.elems.insert(m);
  return M;
}

}  // namespace oracle
