#pragma once

// Numerical orthogonality check for exceptional Hermite polynomials with an
// even partition. This is the only floating-point code in the library.

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpw/xhermite.hpp"

namespace hpw {

using Float50 = boost::multiprecision::cpp_bin_float_50;

/// l even and lambda_{2i-1} = lambda_{2i}.
inline bool is_even_partition(const Partition& lambda) {
  if (lambda.length() % 2) return false;
  for (int i = 1; i < lambda.length(); i += 2)
    if (lambda[i] != lambda[i + 1]) return false;
  return true;
}

struct NormReport {
  int n = 0;
  int m = 0;
  Float50 integral = 0;
  Float50 expected = 0;
  Float50 relative_error = 0;  // against sqrt(norm_n * norm_m) when n != m
  bool ok = false;
};

namespace detail {

inline std::vector<Float50> to_float(const IntPoly& p) {
  std::vector<Float50> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c.get_str());
  return out;
}

inline Float50 horner(const std::vector<Float50>& c, const Float50& x) {
  Float50 acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// sqrt(pi) 2^{j+l} j! prod (j - m_i)
inline Float50 xhermite_norm_formula(const MayaDiagram& M, int j) {
  const int l = M.q();
  Float50 v = boost::math::constants::root_pi<Float50>();
  v *= boost::multiprecision::pow(Float50(2), j + l);
  for (int k = 2; k <= j; ++k) v *= k;
  for (int m : M.t()) v *= (j - m);
  return v;
}

}  // namespace detail

/// Integrates H_n H_m e^{-x^2} / H_M^2 over the real line with tanh-sinh
/// quadrature at 50 digits and compares with the closed-form norm. N is the
/// constant of the eigenvalue equation; j = n + l - N.
inline NormReport weight_and_norm_check(const Partition& lambda, int n, int m, const BigRat& N, double rel_tol = 1e-10) {
  if (!is_even_partition(lambda)) throw precondition_error("orthogonality needs an even partition");
  if (N.get_den() != 1) throw precondition_error("N must be an integer");
  XHermiteFamily fam(lambda);
  const auto hn = detail::to_float(exceptional_hermite(lambda, n));
  const auto hm = detail::to_float(exceptional_hermite(lambda, m));
  const auto hM = detail::to_float(fam.H_M());

  // Truncate where e^{-x^2} x^d drops below 1e-70.
  const int d = static_cast<int>(hn.size() + hm.size());
  double L = 4;
  while (L * L - d * std::log(L) < 165) L += 0.5;

  const Float50 sign0 = detail::horner(hM, Float50(0));
  if (sign0 == 0) throw std::domain_error("H_M vanishes at the origin");
  for (int k = -400; k <= 400; ++k) {
    const Float50 v = detail::horner(hM, Float50(L * k / 400.0));
    if ((v > 0) != (sign0 > 0)) throw std::domain_error("H_M changes sign on the real line");
  }

  auto f = [&](const Float50& x) {
    const Float50 w = detail::horner(hM, x);
    if ((w > 0) != (sign0 > 0)) throw std::domain_error("H_M changes sign on the real line");
    return detail::horner(hn, x) * detail::horner(hm, x) * exp(-x * x) / (w * w);
  };
  boost::math::quadrature::tanh_sinh<Float50> integrator;
  const Float50 tol = boost::multiprecision::pow(Float50(10), -30);
  NormReport rep;
  rep.n = n;
  rep.m = m;
  rep.integral = integrator.integrate(f, Float50(-L), Float50(0), tol) + integrator.integrate(f, Float50(0), Float50(L), tol);

  const int N_int = static_cast<int>(N.get_num().get_si());
  const int ell = lambda.length();
  if (n == m) {
    rep.expected = detail::xhermite_norm_formula(fam.M(), n + ell - N_int);
    rep.relative_error = abs(rep.integral - rep.expected) / abs(rep.expected);
  } else {
    rep.expected = 0;
    const Float50 scale = sqrt(abs(detail::xhermite_norm_formula(fam.M(), n + ell - N_int) *
                                   detail::xhermite_norm_formula(fam.M(), m + ell - N_int)));
    rep.relative_error = abs(rep.integral) / scale;
  }
  rep.ok = rep.relative_error <= rel_tol;
  return rep;
}

}  // namespace hpw
