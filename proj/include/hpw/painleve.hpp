#pragma once

// Rational extensions of the harmonic oscillator, Maya diagram chains and
// the rational solutions of the fourth Painleve equation
//   y'' = y'^2/(2y) + 3/2 y^3 + 4t y^2 + 2(t^2 - a) y + b/y.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpw/hermite.hpp"
#include "hpw/minorder.hpp"

namespace hpw {

/// Z_- u {m, ..., m+l-1}
inline MayaDiagram gh_maya(int m, int l) {
  if (m < 0 || l < 0) throw precondition_error("GH parameters must be non-negative");
  std::vector<int> t;
  for (int j = m; j < m + l; ++j) t.push_back(j);
  return MayaDiagram::from_positive(std::move(t));
}

/// Z_- u {3j+1 : j < l1} u {3j+2 : j < l2}
inline MayaDiagram o_maya(int l1, int l2) {
  if (l1 < 0 || l2 < 0) throw precondition_error("O parameters must be non-negative");
  std::vector<int> t;
  for (int j = 0; j < l1; ++j) t.push_back(3 * j + 1);
  for (int j = 0; j < l2; ++j) t.push_back(3 * j + 2);
  return MayaDiagram::from_positive(std::move(t));
}

enum class PivClass { GH, O };

inline std::string to_string(PivClass c) { return c == PivClass::GH ? "GH" : "O"; }

/// H_M up to a non-zero constant, computed at a minimal girth origin.
inline IntPoly pseudo_wronskian_up_to_constant(const MayaDiagram& M) {
  const int k = corner_report(M).largest_origin();
  return pseudo_wronskian(M.shifted(-k));
}

struct MayaChain {
  std::vector<MayaDiagram> diagrams;
  std::vector<int> flips;  // diagrams[i+1] = diagrams[i] with flips[i] toggled
  int k = 0;               // diagrams.back() = diagrams.front() + k
};

/// The 3-cyclic chain starting at GH(m, l) or O(l1, l2). GH flips
/// m+l, 0, m; O flips 0, 3 l1 + 1, 3 l2 + 2.
inline MayaChain three_cycle(PivClass cls, int a, int b) {
  MayaChain c;
  if (cls == PivClass::GH) {
    c.diagrams.push_back(gh_maya(a, b));
    c.flips = {a + b, 0, a};
    c.k = 1;
  } else {
    c.diagrams.push_back(o_maya(a, b));
    c.flips = {0, 3 * a + 1, 3 * b + 2};
    c.k = 3;
  }
  for (int f : c.flips) c.diagrams.push_back(c.diagrams.back().flipped(f));
  if (!(c.diagrams.back() == c.diagrams.front().shifted(c.k)))
    throw std::logic_error("three-step chain does not close up to translation");
  return c;
}

/// The three diagrams reached from the start of the chain by one flip.
inline std::vector<MayaDiagram> three_cycle_neighbours(const MayaChain& c) {
  std::vector<MayaDiagram> out;
  for (int f : c.flips) out.push_back(c.diagrams.front().flipped(f));
  return out;
}

/// U_M = x^2 + log_part + offset with log_part = -2 (log H_M)''.
struct RationalPotential {
  RatFunc log_part;
  int offset = 0;  // 2|M_+| - 2|M_-|

  RatFunc full() const {
    return RatFunc(IntPoly{0, 0, 1}) + log_part + RatFunc::constant(offset);
  }
};

inline RationalPotential potential(const MayaDiagram& M) {
  RationalPotential U;
  const IntPoly H = pseudo_wronskian_up_to_constant(M);
  U.log_part = RatFunc::constant(-2) * ratfunc_derivative(log_derivative(H));
  U.offset = 2 * M.q() - 2 * M.p();
  return U;
}

struct ChainStep {
  int sigma = 0;      // f = (log H_{M'}/H_M)' + sigma x
  BigRat lambda = 0;  // f' + f^2 = U_M - lambda
  RatFunc f;
  bool ok = false;
};

/// Finds the Darboux step from M to M' = M with m toggled.
inline ChainStep chain_step_verify(const MayaDiagram& M, int m) {
  const MayaDiagram Mp = M.flipped(m);
  const RatFunc U = potential(M).full();
  const RatFunc Up = potential(Mp).full();
  const RatFunc logratio =
      log_derivative(pseudo_wronskian_up_to_constant(Mp)) - log_derivative(pseudo_wronskian_up_to_constant(M));
  for (int sigma : {1, -1}) {
    const RatFunc f = logratio + RatFunc(IntPoly{0, sigma});
    const RatFunc fp = ratfunc_derivative(f);
    const RatFunc f2 = f * f;
    const RatFunc rest = U - fp - f2;
    if (!rest.is_constant()) continue;
    const BigRat lambda = rest.constant_value();
    if (Up - RatFunc::constant(lambda) == f2 - fp) return {sigma, lambda, f, true};
  }
  return {};
}

struct PivSolution {
  RatFunc y;
  BigRat a = 0;
  BigRat b = 0;
  PivClass cls = PivClass::GH;
  int p1 = 0;
  int p2 = 0;
  int branch = 1;
};

namespace detail {

inline RatFunc gh_log_ratio(const MayaDiagram& num, const MayaDiagram& den) {
  return log_derivative(pseudo_wronskian_up_to_constant(num)) - log_derivative(pseudo_wronskian_up_to_constant(den));
}

/// P(t / sqrt 3) up to a constant, as a rational polynomial.
inline IntPoly at_t_over_sqrt3(const IntPoly& P) {
  const QSqrt3 c(0, BigRat(1, 3));
  return rationalize_monic(compose_scale(P, c));
}

inline RatFunc o_log_ratio(const MayaDiagram& num, const MayaDiagram& den) {
  const IntPoly N = at_t_over_sqrt3(pseudo_wronskian_up_to_constant(num));
  const IntPoly D = at_t_over_sqrt3(pseudo_wronskian_up_to_constant(den));
  return log_derivative(N) - log_derivative(D);
}

}  // namespace detail

inline PivSolution piv_solution_gh(int m, int l, int branch) {
  if (m < 0 || l < 0) throw precondition_error("GH parameters must be non-negative");
  PivSolution s;
  s.cls = PivClass::GH;
  s.p1 = m;
  s.p2 = l;
  s.branch = branch;
  RatFunc logpart;
  switch (branch) {
    case 1:
      logpart = detail::gh_log_ratio(gh_maya(m, l), gh_maya(m, l + 1));
      s.a = -(1 + m + 2 * l);
      s.b = -2 * m * m;
      break;
    case 2:
      if (m <= 0) throw precondition_error("GH branch 2 requires m > 0");
      logpart = detail::gh_log_ratio(gh_maya(m, l), gh_maya(m - 1, l));
      s.a = 2 * m + l - 1;
      s.b = -2 * l * l;
      break;
    case 3:
      if (l <= 0) throw precondition_error("GH branch 3 requires l > 0");
      logpart = detail::gh_log_ratio(gh_maya(m, l), gh_maya(m + 1, l - 1));
      s.a = l - m - 1;
      s.b = -2 * (m + l) * (m + l);
      break;
    default:
      throw precondition_error("branch must be 1, 2 or 3");
  }
  if (logpart.is_zero()) throw precondition_error("degenerate parameters: log-derivative of a constant ratio");
  s.y = branch == 3 ? logpart + RatFunc(IntPoly{0, -2}) : logpart;
  return s;
}

inline PivSolution piv_solution_o(int l1, int l2, int branch) {
  if (l1 < 0 || l2 < 0) throw precondition_error("O parameters must be non-negative");
  PivSolution s;
  s.cls = PivClass::O;
  s.p1 = l1;
  s.p2 = l2;
  s.branch = branch;
  RatFunc logpart;
  switch (branch) {
    case 1:
      if (l1 < 1 || l2 < 1) throw precondition_error("O branch 1 requires l1, l2 >= 1");
      logpart = detail::o_log_ratio(o_maya(l1, l2), o_maya(l1 - 1, l2 - 1));
      s.a = l1 + l2;
      s.b = BigRat(-2 * (1 - 3 * l1 + 3 * l2) * (1 - 3 * l1 + 3 * l2), 9);
      break;
    case 2:
      logpart = detail::o_log_ratio(o_maya(l1, l2), o_maya(l1 + 1, l2));
      s.a = -1 - 2 * l1 + l2;
      s.b = BigRat(-2 * (2 + 3 * l2) * (2 + 3 * l2), 9);
      break;
    case 3:
      logpart = detail::o_log_ratio(o_maya(l1, l2), o_maya(l1, l2 + 1));
      s.a = -2 - 2 * l2 + l1;
      s.b = BigRat(-2 * (1 + 3 * l1) * (1 + 3 * l1), 9);
      break;
    default:
      throw precondition_error("branch must be 1, 2 or 3");
  }
  s.b.canonicalize();
  if (logpart.is_zero()) throw precondition_error("degenerate parameters: log-derivative of a constant ratio");
  s.y = logpart + RatFunc(IntPoly{0, -2}, IntPoly{3});
  return s;
}

struct PivReport {
  bool ok = false;
  IntPoly residual;
};

/// Checks 2y y'' - y'^2 - 3y^4 - 8t y^3 - 4(t^2 - a) y^2 - 2b = 0 after
/// multiplying through by D^4 lcm(den a, den b), where y = N/D.
inline PivReport verify_piv(const PivSolution& sol) {
  if (sol.y.is_zero()) throw precondition_error("PIV check needs y != 0");
  const IntPoly& N = sol.y.num();
  const IntPoly& D = sol.y.den();
  const IntPoly Np = poly_derivative(N);
  const IntPoly Dp = poly_derivative(D);
  const IntPoly A = Np * D - N * Dp;
  const IntPoly Ap = poly_derivative(A);
  const IntPoly t = IntPoly::x();
  BigInt L;
  mpz_lcm(L.get_mpz_t(), sol.a.get_den().get_mpz_t(), sol.b.get_den().get_mpz_t());
  const BigInt aL = sol.a.get_num() * (L / sol.a.get_den());
  const BigInt bL = sol.b.get_num() * (L / sol.b.get_den());
  const IntPoly N2 = N * N;
  const IntPoly D2 = D * D;
  IntPoly r = (N * (Ap * D - A * Dp * BigInt(2)) * BigInt(2) - A * A - N2 * N2 * BigInt(3) - t * N2 * N * D * BigInt(8) -
               t * t * N2 * D2 * BigInt(4)) *
              L;
  r += N2 * D2 * (aL * 4);
  r -= D2 * D2 * (bL * 2);
  return {r.is_zero(), r};
}

struct MinOrderSpec {
  int order = 0;
  int origin = 0;
  MayaDiagram full;     // the GH or O diagram
  MayaDiagram minimal;  // full - origin
  BigRat constant = 1;  // H_full = constant * H_minimal
};

inline MinOrderSpec min_order_spec(const MayaDiagram& M, int origin) {
  MinOrderSpec s;
  s.full = M;
  s.origin = origin;
  s.minimal = M.shifted(-origin);
  s.order = girth(s.minimal);
  s.constant = equivalence_constant(M, origin);
  return s;
}

/// Order min(m, l): origin 0 when l <= m, otherwise m + l.
inline MinOrderSpec min_order_gh(int m, int l) {
  if (m <= 0 || l <= 0) throw precondition_error("min_order_gh requires m, l > 0");
  return min_order_spec(gh_maya(m, l), l <= m ? 0 : m + l);
}

/// Order max(l1, l2) at origin 3 min(l1, l2).
inline MinOrderSpec min_order_o(int l1, int l2) {
  if (l1 <= 0 || l2 <= 0) throw precondition_error("min_order_o requires l1, l2 > 0");
  return min_order_spec(o_maya(l1, l2), 3 * std::min(l1, l2));
}

/// All GH and O solutions with parameters in [0, max], every branch, in a
/// fixed order; degenerate and out-of-range tuples are skipped.
inline std::vector<PivSolution> piv_catalog(int max) {
  std::vector<PivSolution> out;
  for (int cls = 0; cls < 2; ++cls)
    for (int p1 = 0; p1 <= max; ++p1)
      for (int p2 = 0; p2 <= max; ++p2)
        for (int branch = 1; branch <= 3; ++branch) {
          try {
            out.push_back(cls == 0 ? piv_solution_gh(p1, p2, branch) : piv_solution_o(p1, p2, branch));
          } catch (const precondition_error&) {
          }
        }
  return out;
}

}  // namespace hpw
