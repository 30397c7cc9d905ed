#pragma once

// Exact univariate arithmetic over Z[x] and Q(x), plus fraction-free
// determinants of polynomial matrices.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hpw {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct inexact_division : std::domain_error {
  using std::domain_error::domain_error;
};

inline BigRat make_rat(const BigInt& num, const BigInt& den = 1) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigRat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Dense polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of x^i; the zero polynomial has no
/// coefficients and degree kZeroDegree.
class IntPoly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  IntPoly() = default;
  IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }
  static IntPoly monomial(const BigInt& c, int degree) {
    if (c == 0) return {};
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
  }
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const {
    static const BigInt zero = 0;
    return c_.empty() ? zero : c_.back();
  }
  BigInt coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return 0;
    return c_[static_cast<std::size_t>(i)];
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator*=(const BigInt& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  IntPoly& operator*=(const IntPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
  }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  /// Multiplication by x^k.
  IntPoly shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> v(c_.size() + static_cast<std::size_t>(k));
    std::copy(c_.begin(), c_.end(), v.begin() + k);
    return IntPoly(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

inline IntPoly poly_add(const IntPoly& p, const IntPoly& q) { return p + q; }
inline IntPoly poly_mul(const IntPoly& p, const IntPoly& q) { return p * q; }
inline IntPoly poly_scale(const IntPoly& p, const BigInt& c) { return p * c; }

/// k-th derivative.
inline IntPoly poly_derivative(const IntPoly& p, unsigned order = 1) {
  const auto& c = p.coeffs();
  if (order == 0) return p;
  if (c.size() <= order) return {};
  std::vector<BigInt> r(c.size() - order);
  for (std::size_t i = order; i < c.size(); ++i) {
    BigInt f = 1;
    for (std::size_t j = 0; j < order; ++j) f *= static_cast<unsigned long>(i - j);
    r[i - order] = c[i] * f;
  }
  return IntPoly(std::move(r));
}

inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& v : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline IntPoly divide_exact(IntPoly p, const BigInt& d) {
  std::vector<BigInt> c = p.coeffs();
  for (auto& v : c) {
    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
      throw inexact_division("scalar division is not exact");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(c));
}

/// Primitive part with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  if (p.leading() < 0) c = -c;
  return divide_exact(p, c);
}

/// Quotient a / b in Z[x]; throws inexact_division if b does not divide a.
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  const int db = b.degree();
  if (a.degree() < db) throw inexact_division("polynomial division is not exact");
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(r.size() - static_cast<std::size_t>(db));
  const auto& bc = b.coeffs();
  const BigInt& lb = bc.back();
  BigInt t;
  for (int i = a.degree(); i >= db; --i) {
    BigInt& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw inexact_division("polynomial division is not exact");
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    const std::size_t shift = static_cast<std::size_t>(i - db);
    for (std::size_t j = 0; j < bc.size(); ++j)
      mpz_submul(r[shift + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    q[shift] = t;
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) throw inexact_division("polynomial division is not exact");
  return IntPoly(std::move(q));
}

/// Pseudo-remainder lc(b)^k * a mod b (k chosen by the elimination).
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const BigInt la = a.leading();
    IntPoly t = b.shifted_up(a.degree() - db) * la;
    a *= lb;
    a -= t;
  }
  return a;
}

/// Greatest common divisor over Q, returned primitive with positive leading
/// coefficient. gcd(0, 0) = 0.
inline IntPoly gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return IntPoly{1};
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return a;
}

inline BigRat poly_eval_rat(const IntPoly& p, const BigRat& x) {
  BigRat acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += BigRat(*it);
  }
  acc.canonicalize();
  return acc;
}

/// Pretty form in descending degree, e.g. "4x^2 - 2".
inline std::string to_string(const IntPoly& p, char var = 'x') {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt& v = c[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    BigInt mag = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

/// Reduced ratio of two integer polynomials.
///
/// Canonical form: num and den coprime over Q, lc(den) > 0, and the
/// contents of num and den coprime. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_{1} {}
  RatFunc(IntPoly p) : num_(std::move(p)), den_{1} {}
  RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc constant(const BigRat& c) {
    return RatFunc(IntPoly::constant(c.get_num()), IntPoly::constant(c.get_den()));
  }
  static RatFunc x() { return RatFunc(IntPoly::x()); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  BigRat constant_value() const {
    if (!is_constant()) throw std::domain_error("rational function is not constant");
    return make_rat(num_.coeff(0), den_.coeff(0));
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    IntPoly g = gcd(a.den_, b.den_);
    IntPoly ad = exact_div(a.den_, g);
    IntPoly bd = exact_div(b.den_, g);
    return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, Canonical{}); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    IntPoly g1 = gcd(a.num_, b.den_);
    IntPoly g2 = gcd(b.num_, a.den_);
    return RatFunc(exact_div(a.num_, g1) * exact_div(b.num_, g2),
                   exact_div(a.den_, g2) * exact_div(b.den_, g1));
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return a * RatFunc(b.den_, b.num_);
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  BigRat eval(const BigRat& x) const {
    BigRat d = poly_eval_rat(den_, x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    BigRat r = poly_eval_rat(num_, x) / d;
    r.canonicalize();
    return r;
  }

 private:
  struct Canonical {};
  RatFunc(IntPoly num, IntPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("division by the zero rational function");
    if (num_.is_zero()) {
      den_ = IntPoly{1};
      return;
    }
    if (den_.degree() > 0) {
      IntPoly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
    }
    BigInt c = gcd_int(content(num_), content(den_));
    if (den_.leading() < 0) c = -c;
    if (c != 1) {
      num_ = divide_exact(num_, c);
      den_ = divide_exact(den_, c);
    }
  }
  static BigInt gcd_int(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }

  IntPoly num_;
  IntPoly den_;
};

inline RatFunc ratfunc_add(const RatFunc& a, const RatFunc& b) { return a + b; }
inline RatFunc ratfunc_mul(const RatFunc& a, const RatFunc& b) { return a * b; }

inline RatFunc ratfunc_derivative(const RatFunc& f) {
  const IntPoly& n = f.num();
  const IntPoly& d = f.den();
  if (d.degree() == 0) return RatFunc(poly_derivative(n), d);
  // (n'd - nd') / d^2, cancelling the common factor of d and d' first.
  IntPoly dd = poly_derivative(d);
  IntPoly g = gcd(d, dd);
  IntPoly dg = exact_div(d, g);
  IntPoly ddg = exact_div(dd, g);
  return RatFunc(poly_derivative(n) * dg - n * ddg, dg * d);
}

/// f'/f.
inline RatFunc ratfunc_log_derivative(const RatFunc& f) {
  if (f.is_zero()) throw std::domain_error("logarithmic derivative of zero");
  return RatFunc(poly_derivative(f.num()), f.num()) - RatFunc(poly_derivative(f.den()), f.den());
}

inline RatFunc log_derivative(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("logarithmic derivative of zero");
  return RatFunc(poly_derivative(p), p);
}

/// p(c x) for rational c.
inline IntPoly compose_scale_numerator(const IntPoly& p, const BigRat& c, BigInt& denominator) {
  // p(c x) = sum a_i c^i x^i; clear the common denominator den(c)^deg.
  const auto& a = p.coeffs();
  std::vector<BigInt> r(a.size());
  BigInt num_pow = 1;
  const int d = p.degree();
  BigInt den_pow_total;
  mpz_pow_ui(den_pow_total.get_mpz_t(), c.get_den().get_mpz_t(), d < 0 ? 0 : static_cast<unsigned long>(d));
  for (std::size_t i = 0; i < a.size(); ++i) {
    BigInt dp;
    mpz_pow_ui(dp.get_mpz_t(), c.get_den().get_mpz_t(), static_cast<unsigned long>(d - static_cast<int>(i)));
    r[i] = a[i] * num_pow * dp;
    num_pow *= c.get_num();
  }
  denominator = den_pow_total;
  return IntPoly(std::move(r));
}

inline RatFunc ratfunc_compose_scale(const RatFunc& f, const BigRat& c) {
  if (c == 0) return RatFunc::constant(f.eval(0));
  BigInt dn, dd;
  IntPoly n = compose_scale_numerator(f.num(), c, dn);
  IntPoly d = compose_scale_numerator(f.den(), c, dd);
  return RatFunc(n * dd, d * dn);
}

/// Element a + b*sqrt(3) of Q(sqrt 3).
struct QSqrt3 {
  BigRat a = 0;
  BigRat b = 0;

  QSqrt3() = default;
  QSqrt3(BigRat a_, BigRat b_ = 0) : a(std::move(a_)), b(std::move(b_)) {
    a.canonicalize();
    b.canonicalize();
  }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  friend QSqrt3 operator+(const QSqrt3& x, const QSqrt3& y) { return {x.a + y.a, x.b + y.b}; }
  friend QSqrt3 operator-(const QSqrt3& x, const QSqrt3& y) { return {x.a - y.a, x.b - y.b}; }
  friend QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y) {
    return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  QSqrt3 inverse() const {
    BigRat norm = a * a - 3 * b * b;
    if (norm == 0) throw std::domain_error("inverse of zero in Q(sqrt 3)");
    return {a / norm, -b / norm};
  }
  friend bool operator==(const QSqrt3& x, const QSqrt3& y) { return x.a == y.a && x.b == y.b; }
};

/// Polynomial with coefficients in Q(sqrt 3).
using SqrtPoly = std::vector<QSqrt3>;

/// p(c t) with c in Q(sqrt 3).
inline SqrtPoly compose_scale(const IntPoly& p, const QSqrt3& c) {
  SqrtPoly r;
  r.reserve(p.coeffs().size());
  QSqrt3 pw(1);
  for (const auto& v : p.coeffs()) {
    r.push_back(QSqrt3(BigRat(v)) * pw);
    pw = pw * c;
  }
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

/// Coefficients as rationals; throws if any sqrt(3) component survives.
inline std::vector<BigRat> rational_coefficients(const SqrtPoly& p) {
  std::vector<BigRat> r;
  r.reserve(p.size());
  for (const auto& v : p) {
    if (!v.is_rational()) throw std::domain_error("non-vanishing sqrt(3) component");
    r.push_back(v.a);
  }
  return r;
}

/// Scales a rational-coefficient polynomial to a primitive integer one.
inline IntPoly clear_denominators(const std::vector<BigRat>& c) {
  BigInt l = 1;
  for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<BigInt> r;
  r.reserve(c.size());
  for (const auto& v : c) r.push_back(v.get_num() * (l / v.get_den()));
  return primitive_part(IntPoly(std::move(r)));
}

/// Divides by the leading coefficient and returns the result as a primitive
/// integer polynomial. Throws if the monic form is not rational.
inline IntPoly rationalize_monic(const SqrtPoly& p) {
  if (p.empty()) return {};
  QSqrt3 inv = p.back().inverse();
  SqrtPoly m;
  m.reserve(p.size());
  for (const auto& v : p) m.push_back(v * inv);
  return clear_denominators(rational_coefficients(m));
}

/// Rectangular grid of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  PolyMatrix(std::vector<std::vector<IntPoly>> rows) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows.front().size();
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
      if (r.size() != cols_) throw dimension_error("ragged polynomial matrix");
      for (auto& e : r) data_.push_back(std::move(e));
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  IntPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const IntPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<IntPoly> data_;
};

namespace detail {

inline IntPoly det_small(const PolyMatrix& a) {
  switch (a.rows()) {
    case 0:
      return IntPoly{1};
    case 1:
      return a(0, 0);
    case 2:
      return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    default:
      break;
  }
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace detail

/// Determinant by Bareiss elimination over Z[x]. Each step divides exactly
/// by the previous pivot; pivots are chosen with lowest degree in their
/// column. Orders up to 3 use the cofactor formula.
inline IntPoly det_fraction_free(PolyMatrix a) {
  if (a.rows() != a.cols()) throw dimension_error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n <= 3) return detail::det_small(a);

  bool negate = false;
  IntPoly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      if (best == n || a(i, k).degree() < a(best, k).degree()) best = i;
    }
    if (best == n) return {};
    if (best != k) {
      a.swap_rows(best, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPoly v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = exact_div(v, prev);
      }
      a(i, k) = IntPoly{};
    }
    prev = a(k, k);
  }
  IntPoly d = a(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace hpw
