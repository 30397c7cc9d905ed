#pragma once

// Exceptional Hermite polynomials H_n^(lambda): construction, the
// second-order eigenvalue equation they satisfy, and their minimal-order
// pseudo-Wronskian forms.

#include <optional>
#include <stdexcept>
#include <vector>

#include "hpw/hermite.hpp"
#include "hpw/minorder.hpp"

namespace hpw {

class XHermiteFamily {
 public:
  explicit XHermiteFamily(Partition lambda) : lambda_(std::move(lambda)), M_(maya_from_partition(lambda_)) {}

  const Partition& lambda() const { return lambda_; }
  const MayaDiagram& M() const { return M_; }
  int ell() const { return lambda_.length(); }
  int size() const { return lambda_.size(); }

  /// j = n + l - |lambda|.
  int index(int n) const { return n + ell() - size(); }
  bool admissible(int n) const {
    const int j = index(n);
    return n >= 0 && j >= 0 && !M_.contains(j);
  }
  /// Admissible degrees in [0, n_max].
  std::vector<int> degrees(int n_max) const {
    std::vector<int> out;
    for (int n = 0; n <= n_max; ++n)
      if (admissible(n)) out.push_back(n);
    return out;
  }
  /// Missing degrees: 0..|lambda|-l-1 and m_i + |lambda| - l.
  std::vector<int> excluded_degrees() const {
    std::vector<int> out;
    const int last = M_.max_element() + size() - ell();
    for (int n = 0; n <= last; ++n)
      if (!admissible(n)) out.push_back(n);
    return out;
  }
  /// The denominator polynomial H_M = Wr[H_{m_l}, ..., H_{m_1}].
  const IntPoly& H_M() const {
    if (!HM_) HM_ = pseudo_wronskian(M_);
    return *HM_;
  }

 private:
  Partition lambda_;
  MayaDiagram M_;
  mutable std::optional<IntPoly> HM_;
};

/// Wr[H_{m_l}, ..., H_{m_1}, H_j] with j = n + l - |lambda|.
inline IntPoly exceptional_hermite(const Partition& lambda, int n) {
  XHermiteFamily fam(lambda);
  if (!fam.admissible(n)) throw precondition_error("degree is not admissible for this partition");
  std::vector<IntPoly> fs;
  const auto& t = fam.M().t();
  for (auto it = t.rbegin(); it != t.rend(); ++it) fs.push_back(hermite_poly(*it));
  fs.push_back(hermite_poly(fam.index(n)));
  return wronskian(fs);
}

/// M u {j}, the diagram whose pseudo-Wronskian is +-H_n^(lambda).
inline MayaDiagram xhermite_maya(const Partition& lambda, int n) {
  XHermiteFamily fam(lambda);
  if (!fam.admissible(n)) throw precondition_error("degree is not admissible for this partition");
  return fam.M().with(fam.index(n));
}

/// (-1)^{#{m_i > j}}: H_n^(lambda) = sign * H_{M u {j}}.
inline int xhermite_sign(const Partition& lambda, int n) {
  XHermiteFamily fam(lambda);
  int above = 0;
  for (int m : fam.M().t())
    if (m > fam.index(n)) ++above;
  return above % 2 ? -1 : 1;
}

namespace detail {

/// H T[y] with T[y] = y'' - 2(x + H'/H) y' + (H''/H + 2x H'/H) y.
inline IntPoly t_lambda_numerator(const IntPoly& H, const IntPoly& y) {
  const IntPoly H1 = poly_derivative(H);
  const IntPoly H2 = poly_derivative(H, 2);
  const IntPoly y1 = poly_derivative(y);
  const IntPoly y2 = poly_derivative(y, 2);
  const IntPoly x = IntPoly::x();
  return H * y2 - (x * H * y1) * BigInt(2) - H1 * y1 * BigInt(2) + (H2 + x * H1 * BigInt(2)) * y;
}

}  // namespace detail

inline RatFunc apply_T_lambda(const Partition& lambda, const IntPoly& y) {
  const IntPoly H = pseudo_wronskian(maya_from_partition(lambda));
  if (H.is_zero()) throw std::domain_error("H_M vanishes identically");
  return RatFunc(detail::t_lambda_numerator(H, y), H);
}

struct EigenReport {
  int n = 0;
  BigRat eigenvalue = 0;
  IntPoly residual;  // zero iff T[y] = eigenvalue * y
  bool ok() const { return residual.is_zero(); }
};

inline EigenReport eigen_check(const Partition& lambda, int n) {
  XHermiteFamily fam(lambda);
  const IntPoly y = exceptional_hermite(lambda, n);
  const IntPoly& H = fam.H_M();
  const IntPoly P = detail::t_lambda_numerator(H, y);
  EigenReport rep;
  rep.n = n;
  const IntPoly Hy = H * y;
  // P = c H y; read c off the leading coefficients and check the rest.
  rep.eigenvalue = P.is_zero() ? BigRat(0) : make_rat(P.coeff(Hy.degree()), Hy.leading());
  rep.residual = P * rep.eigenvalue.get_den() - Hy * rep.eigenvalue.get_num();
  return rep;
}

struct FamilyFit {
  BigRat slope = 0;
  BigRat N = 0;  // eigenvalue = 2(N - n)
  bool exact = false;
};

/// Exact least-squares line through (n, eigenvalue); exact iff every point
/// lies on it.
inline FamilyFit fit_eigenvalues(const std::vector<EigenReport>& reps) {
  FamilyFit fit;
  if (reps.size() < 2) throw precondition_error("need at least two eigenvalues to fit a line");
  BigRat sx = 0, sy = 0, sxx = 0, sxy = 0;
  const BigRat cnt = static_cast<long>(reps.size());
  for (const auto& r : reps) {
    const BigRat x = r.n;
    sx += x;
    sy += r.eigenvalue;
    sxx += x * x;
    sxy += x * r.eigenvalue;
  }
  const BigRat denom = cnt * sxx - sx * sx;
  if (denom == 0) throw precondition_error("eigenvalue fit needs distinct degrees");
  fit.slope = (cnt * sxy - sx * sy) / denom;
  fit.slope.canonicalize();
  const BigRat intercept = (sy - fit.slope * sx) / cnt;
  fit.N = intercept / 2;
  fit.N.canonicalize();
  fit.exact = true;
  for (const auto& r : reps)
    if (fit.slope * r.n + intercept != r.eigenvalue || !r.ok()) fit.exact = false;
  return fit;
}

struct MinOrderForm {
  int origin = 0;
  MayaDiagram minimal;  // M u {j} - origin
  BigRat scalar = 1;    // H_n^(lambda) = scalar * H_minimal
  IntPoly polynomial;   // H_minimal
  int order() const { return girth(minimal); }
};

inline MinOrderForm min_order_form(const Partition& lambda, int n) {
  const XHermiteOrigin o = xhermite_min_origin(lambda, n);
  const MayaDiagram Mn = xhermite_maya(lambda, n);
  MinOrderForm f;
  f.origin = o.origin;
  f.minimal = Mn.shifted(-o.origin);
  f.scalar = equivalence_constant(Mn, o.origin) * xhermite_sign(lambda, n);
  f.polynomial = pseudo_wronskian(f.minimal);
  return f;
}

}  // namespace hpw
