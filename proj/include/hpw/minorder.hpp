#pragma once

// Minimal girth of a Maya diagram, Durfee symbols, and how the minimal
// girth changes when one element is inserted.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hpw/combinatorics.hpp"

namespace hpw {

/// A label n with n-1 in M and n not in M, together with its bent-diagram
/// point. girth(M - n) = i + j.
struct Corner {
  int origin = 0;
  int i = 0;
  int j = 0;
  int girth() const { return i + j; }
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct CornerReport {
  int r = 0;                    // minimal girth
  std::vector<int> origins;     // minimal girth origins, ascending
  std::vector<Corner> corners;  // every candidate origin, ascending

  /// O_g: candidate origins of girth g, ascending.
  std::vector<int> origins_of_girth(int g) const {
    std::vector<int> out;
    for (const auto& c : corners)
      if (c.girth() == g) out.push_back(c.origin);
    return out;
  }
  /// k_g = max O_g; empty when O_g is empty.
  std::optional<int> k(int g) const {
    std::optional<int> best;
    for (const auto& c : corners)
      if (c.girth() == g) best = c.origin;
    return best;
  }
  int largest_origin() const { return origins.back(); }
};

inline std::vector<Corner> corners(const MayaDiagram& M) {
  const int lo = M.min_hole();
  const int hi = M.max_element() + 1;
  std::vector<Corner> out;
  for (const auto& b : bent_diagram(M, lo, hi))
    if (M.contains(b.n - 1) && !M.contains(b.n)) out.push_back({b.n, b.i, b.j});
  return out;
}

inline CornerReport corner_report(const MayaDiagram& M) {
  CornerReport rep;
  rep.corners = corners(M);
  rep.r = rep.corners.front().girth();
  for (const auto& c : rep.corners) rep.r = std::min(rep.r, c.girth());
  rep.origins = rep.origins_of_girth(rep.r);
  return rep;
}

/// Minimal girth and its origins for the standard-form diagram of lambda.
inline CornerReport minimal_girth(const Partition& lambda) { return corner_report(maya_from_partition(lambda)); }

/// min { lambda_{j+1} + j : 0 <= j <= l }
inline int minimal_girth_formula(const Partition& lambda) {
  int best = lambda[1];
  for (int j = 1; j <= lambda.length(); ++j) best = std::min(best, lambda[j + 1] + j);
  return best;
}

struct InsideCorner {
  int i = 0;
  int j = 0;
  bool degenerate = false;  // (lambda_1, 0) or (0, l)
  friend bool operator==(const InsideCorner&, const InsideCorner&) = default;
};

/// Inside corners (lambda_{j+1}, j) ordered by j, with the two degenerate
/// endpoints included and flagged.
inline std::vector<InsideCorner> inside_corners(const Partition& lambda) {
  const int l = lambda.length();
  std::vector<InsideCorner> out;
  out.push_back({lambda[1], 0, true});
  if (l == 0) return out;
  for (int j = 1; j < l; ++j)
    if (lambda[j + 1] < lambda[j]) out.push_back({lambda[j + 1], j, false});
  out.push_back({0, l, true});
  return out;
}

struct DurfeeSymbol {
  Partition mu;
  Partition nu;
  int p = 0;
  int q = 0;
  friend bool operator==(const DurfeeSymbol&, const DurfeeSymbol&) = default;
};

/// mu_i = s_i - (p - i), nu_i = t_i - (q - i). The origin of M must sit at
/// a corner: -1 in M and 0 not in M.
inline DurfeeSymbol durfee_symbol(const MayaDiagram& M) {
  if (!M.contains(-1) || M.contains(0)) throw precondition_error("origin is not at a corner of the Maya diagram");
  DurfeeSymbol d;
  d.p = M.p();
  d.q = M.q();
  std::vector<int> mu, nu;
  for (int i = 1; i <= d.p; ++i) mu.push_back(M.s()[static_cast<std::size_t>(i - 1)] - (d.p - i));
  for (int i = 1; i <= d.q; ++i) nu.push_back(M.t()[static_cast<std::size_t>(i - 1)] - (d.q - i));
  d.mu = Partition(std::move(mu));
  d.nu = Partition(std::move(nu));
  return d;
}

/// "[6,4,2|4,2]_{3x2}"
inline std::string to_string(const DurfeeSymbol& d) {
  return "[" + detail::join(d.mu.parts()) + "|" + detail::join(d.nu.parts()) + "]_{" + std::to_string(d.p) + "x" +
         std::to_string(d.q) + "}";
}

struct InsertReport {
  char which = 'a';          // case (a)-(d)
  int r = 0;                 // minimal girth after insertion
  std::vector<int> origins;  // minimal girth origins after insertion, ascending
};

/// Minimal girth data of M u {m} from the corner data of M alone.
inline InsertReport min_order_after_insert(const MayaDiagram& M, int m) {
  if (M.contains(m)) throw precondition_error("inserted element already belongs to M");
  const CornerReport rep = corner_report(M);
  const int r = rep.r;
  const int kr = *rep.k(r);
  const std::optional<int> kr1 = rep.k(r + 1);
  auto above = [m](const std::vector<int>& v) {
    std::vector<int> out;
    for (int k : v)
      if (k > m) out.push_back(k);
    return out;
  };

  InsertReport out;
  if (m < kr) {
    out.which = 'a';
    out.r = r - 1;
    out.origins = above(rep.origins_of_girth(r));
  } else if (m == kr) {
    out.which = 'b';
    out.r = r;
    out.origins = above(rep.origins_of_girth(r + 1));
    out.origins.push_back(m + 1);
  } else if (kr1 && m < *kr1) {
    out.which = 'c';
    out.r = r;
    out.origins = above(rep.origins_of_girth(r + 1));
  } else {
    out.which = 'd';
    out.r = r + 1;
    out.origins = rep.origins_of_girth(r);
    for (int k : above(rep.origins_of_girth(r + 2))) out.origins.push_back(k);
    // The insertion itself opens a corner at m + 1 of girth |M - m|.
    if (!M.contains(m + 1) && girth(M.shifted(-m)) == r + 1) out.origins.push_back(m + 1);
  }
  std::sort(out.origins.begin(), out.origins.end());
  out.origins.erase(std::unique(out.origins.begin(), out.origins.end()), out.origins.end());
  return out;
}

struct XHermiteOrigin {
  int r_n = 0;
  int origin = 0;
  int branch = 1;  // 1 when k_{r+1} > k_r, 2 otherwise
};

/// Index j = n + l - |lambda| of the row appended to the Wronskian; the
/// degree n is admissible iff j >= 0 and j is not in M.
inline int xhermite_index(const Partition& lambda, int n) { return n + lambda.length() - lambda.size(); }

inline bool xhermite_admissible(const Partition& lambda, int n) {
  const int j = xhermite_index(lambda, n);
  return j >= 0 && !maya_from_partition(lambda).contains(j);
}

/// Minimal order of H_n^(lambda) and an origin realizing it.
inline XHermiteOrigin xhermite_min_origin(const Partition& lambda, int n) {
  if (!xhermite_admissible(lambda, n)) throw precondition_error("degree is not admissible for this partition");
  const CornerReport rep = minimal_girth(lambda);
  const int r = rep.r;
  const int kr = *rep.k(r);
  const std::optional<int> kr1 = rep.k(r + 1);
  const int j = xhermite_index(lambda, n);

  XHermiteOrigin out;
  if (kr1 && *kr1 > kr) {
    out.branch = 1;
    if (j < kr) out = {r - 1, kr, 1};
    else if (j < *kr1) out = {r, *kr1, 1};
    else out = {r + 1, kr, 1};
  } else {
    out.branch = 2;
    if (j < kr) out = {r - 1, kr, 2};
    else if (j == kr) out = {r, kr + 1, 2};
    else out = {r + 1, kr, 2};
  }
  return out;
}

}  // namespace hpw
