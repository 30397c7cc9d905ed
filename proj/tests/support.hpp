#pragma once

#include <random>

#include "hpw/combinatorics.hpp"
#include "oracle/oracle.hpp"

namespace testing_support {

inline oracle::Set to_set(const hpw::MayaDiagram& M) {
  oracle::Set S;
  S.lo = M.min_hole();
  for (int m = S.lo; m <= M.max_element(); ++m)
    if (M.contains(m)) S.elems.insert(m);
  return S;
}

inline hpw::MayaDiagram from_set(const oracle::Set& S) {
  const int hi = S.elems.empty() ? S.lo : *S.elems.rbegin();
  return hpw::MayaDiagram::from_predicate(S.lo, hi, [&](int m) { return S.contains(m); });
}

/// Random diagram with girth at most max_girth, elements around the origin.
inline hpw::MayaDiagram random_diagram(std::mt19937& rng, int max_girth, int radius = 5) {
  std::uniform_int_distribution<int> lo_dist(-radius, 0);
  while (true) {
    const auto M = from_set(oracle::random_set(rng, lo_dist(rng), radius));
    if (hpw::girth(M) <= max_girth) return M;
  }
}

}  // namespace testing_support
