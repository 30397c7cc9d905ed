#pragma once

// Maya diagrams, partitions and the maps between them.
//
// A Maya diagram M is a subset of Z containing every sufficiently negative
// integer and no sufficiently positive one. It is stored through its
// Frobenius symbol (s | t): s lists the holes -s-1 < 0 and t the filled
// boxes >= 0, both strictly descending.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hpw {

struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Non-increasing list of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw precondition_error("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw precondition_error("partition must be non-increasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const {
    int s = 0;
    for (int v : parts_) s += v;
    return s;
  }
  bool empty() const { return parts_.empty(); }
  /// lambda_i with 1-based index; zero past the end.
  int operator[](int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Both lists strictly decreasing and non-negative.
class MayaDiagram {
 public:
  MayaDiagram() = default;
  MayaDiagram(std::vector<int> s, std::vector<int> t) : s_(std::move(s)), t_(std::move(t)) {
    check(s_);
    check(t_);
  }

  /// The diagram equal to pred on [lo, hi], full below lo and empty above hi.
  static MayaDiagram from_predicate(int lo, int hi, const std::function<bool(int)>& pred) {
    lo = std::min(lo, 0);
    hi = std::max(hi, -1);
    std::vector<int> s, t;
    for (int m = hi; m >= 0; --m)
      if (pred(m)) t.push_back(m);
    for (int m = lo; m < 0; ++m)
      if (!pred(m)) s.push_back(-m - 1);
    return MayaDiagram(std::move(s), std::move(t));
  }

  /// Z_- union the given non-negative elements.
  static MayaDiagram from_positive(std::vector<int> elems) {
    std::sort(elems.begin(), elems.end(), std::greater<>());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return MayaDiagram({}, std::move(elems));
  }

  const std::vector<int>& s() const { return s_; }
  const std::vector<int>& t() const { return t_; }
  int p() const { return static_cast<int>(s_.size()); }
  int q() const { return static_cast<int>(t_.size()); }

  bool contains(int m) const {
    if (m >= 0) return std::find(t_.begin(), t_.end(), m) != t_.end();
    return std::find(s_.begin(), s_.end(), -m - 1) == s_.end();
  }

  /// Largest element of M.
  int max_element() const {
    if (!t_.empty()) return t_.front();
    int m = -1;
    while (!contains(m)) --m;
    return m;
  }

  /// Smallest integer not in M.
  int min_hole() const {
    if (!s_.empty()) return -s_.front() - 1;
    int m = 0;
    while (contains(m)) ++m;
    return m;
  }

  /// M + k.
  MayaDiagram shifted(int k) const {
    if (k == 0) return *this;
    const int lo = min_hole();
    const int hi = max_element();
    return from_predicate(lo + k, hi + k, [&](int m) { return contains(m - k); });
  }

  MayaDiagram with(int m) const {
    if (contains(m)) throw precondition_error("element already in the Maya diagram");
    return flipped(m);
  }
  MayaDiagram without(int m) const {
    if (!contains(m)) throw precondition_error("element not in the Maya diagram");
    return flipped(m);
  }
  /// Toggles membership of m.
  MayaDiagram flipped(int m) const {
    const int lo = std::min(min_hole(), m);
    const int hi = std::max(max_element(), m);
    return from_predicate(lo, hi, [&](int x) { return x == m ? !contains(x) : contains(x); });
  }

  friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;
  friend auto operator<=>(const MayaDiagram&, const MayaDiagram&) = default;

 private:
  static void check(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) throw precondition_error("Frobenius entries must be non-negative");
      if (i > 0 && v[i] >= v[i - 1]) throw precondition_error("Frobenius lists must be strictly decreasing");
    }
  }

  std::vector<int> s_;
  std::vector<int> t_;
};

using FrobeniusSymbol = MayaDiagram;

struct BentPoint {
  int n = 0;
  int i = 0;
  int j = 0;
  friend bool operator==(const BentPoint&, const BentPoint&) = default;
};

inline int girth(const MayaDiagram& m) { return m.p() + m.q(); }

/// Elements of M that are >= min_hole, descending.
inline std::vector<int> significant_elements(const MayaDiagram& M) {
  std::vector<int> out;
  const int lo = M.min_hole();
  for (int m = M.max_element(); m >= lo; --m)
    if (M.contains(m)) out.push_back(m);
  return out;
}

inline Partition partition_from_maya(const MayaDiagram& M) {
  const int lo = M.min_hole();
  std::vector<int> parts;
  for (int m : significant_elements(M)) {
    int holes = 0;
    for (int x = lo; x < m; ++x)
      if (!M.contains(x)) ++holes;
    if (holes > 0) parts.push_back(holes);
  }
  return Partition(std::move(parts));
}

/// Standard-form diagram with m_i = lambda_i + l - i.
inline MayaDiagram maya_from_partition(const Partition& lambda) {
  const int l = lambda.length();
  std::vector<int> t;
  for (int i = 1; i <= l; ++i) t.push_back(lambda[i] + l - i);
  return MayaDiagram({}, std::move(t));
}

inline MayaDiagram shift(const MayaDiagram& M, int k) { return M.shifted(k); }

/// Returns (M - k, k) with k = min hole, so that M - k is in standard form.
inline std::pair<MayaDiagram, int> standardize(const MayaDiagram& M) {
  const int k = M.min_hole();
  return {M.shifted(-k), k};
}

inline bool is_standard(const MayaDiagram& M) { return M.s().empty() && !M.contains(0); }

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int j = 1; j <= lambda[1]; ++j) {
    int c = 0;
    for (int v : lambda.parts())
      if (v >= j) ++c;
    parts.push_back(c);
  }
  return Partition(std::move(parts));
}

/// (i_n, j_n) for n in [n_lo, n_hi].
inline std::vector<BentPoint> bent_diagram(const MayaDiagram& M, int n_lo, int n_hi) {
  if (n_lo > n_hi) throw precondition_error("bent_diagram window is empty");
  const int lo = std::min(M.min_hole(), n_lo);
  const int hi = std::max(M.max_element(), n_hi);
  int i = 0;
  int j = 0;
  for (int m = lo; m <= hi; ++m)
    if (M.contains(m)) ++j;
  for (int m = lo; m < n_lo; ++m) {
    if (M.contains(m)) --j;
    else ++i;
  }
  std::vector<BentPoint> out;
  out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (int n = n_lo; n <= n_hi; ++n) {
    out.push_back({n, i, j});
    if (M.contains(n)) --j;
    else ++i;
  }
  return out;
}

using LatticePoint = std::pair<int, int>;

/// Ferrers diagram {(i, j) : 1 <= j <= l, 1 <= i <= lambda_j}.
inline std::set<LatticePoint> ferrers(const Partition& lambda) {
  std::set<LatticePoint> f;
  for (int j = 1; j <= lambda.length(); ++j)
    for (int i = 1; i <= lambda[j]; ++i) f.insert({i, j});
  return f;
}

inline std::set<LatticePoint> rim(const Partition& lambda) {
  std::set<LatticePoint> out;
  for (const auto& [i, j] : ferrers(lambda))
    if (lambda[j + 1] < i + 1) out.insert({i, j});
  return out;
}

inline FrobeniusSymbol frobenius_symbol(const MayaDiagram& M) { return M; }

// ---- text forms ----

namespace detail {

inline std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::vector<int> parse_int_list(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  std::vector<int> out;
  if (s.empty() || s == "-" || s == "{}" || s == "\xE2\x88\x85") return out;
  while (true) {
    const auto comma = s.find(',');
    std::string_view item = trim(s.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      throw parse_error("not an integer: '" + std::string(item) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// "(5,2,1 | 2,1)"
inline std::string to_string(const MayaDiagram& M) {
  return "(" + detail::join(M.s()) + " | " + detail::join(M.t()) + ")";
}

/// "(4,4,3,1,1)"
inline std::string to_string(const Partition& lambda) { return "(" + detail::join(lambda.parts()) + ")"; }

/// Accepts "5,2|", "(5,2,1 | 2,1)", "|6,3,2,1".
inline MayaDiagram parse_frobenius(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const auto bar = s.find('|');
  if (bar == std::string_view::npos) throw parse_error("Frobenius symbol needs a '|' separator");
  try {
    return MayaDiagram(detail::parse_int_list(s.substr(0, bar)), detail::parse_int_list(s.substr(bar + 1)));
  } catch (const precondition_error& e) {
    throw parse_error(e.what());
  }
}

/// Accepts "4,4,1,1" or "(4,4,1,1)"; empty text is the empty partition.
inline Partition parse_partition(std::string_view text) {
  try {
    return Partition(detail::parse_int_list(text));
  } catch (const precondition_error& e) {
    throw parse_error(e.what());
  }
}

}  // namespace hpw
