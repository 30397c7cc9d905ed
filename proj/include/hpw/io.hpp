#pragma once

// JSON forms of the library's values, and persistence of the Hermite
// tables. Big integers travel as decimal strings.

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "hpw/painleve.hpp"
#include "hpw/xhermite.hpp"

namespace hpw {

using json = nlohmann::ordered_json;

inline json to_json(const BigRat& r) { return to_string(r); }

inline BigRat rat_from_json(const json& j) {
  BigRat r;
  if (r.set_str(j.get<std::string>(), 10) != 0) throw parse_error("not a rational: " + j.dump());
  r.canonicalize();
  return r;
}

inline json to_json(const IntPoly& p, const char* var = "x") {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"var", var}, {"coeffs", coeffs}};
}

inline IntPoly poly_from_json(const json& j) {
  std::vector<BigInt> c;
  for (const auto& v : j.at("coeffs")) {
    BigInt z;
    if (z.set_str(v.get<std::string>(), 10) != 0) throw parse_error("not an integer: " + v.dump());
    c.push_back(z);
  }
  return IntPoly(std::move(c));
}

inline json to_json(const RatFunc& f, const char* var = "x") { return {{"num", to_json(f.num(), var)}, {"den", to_json(f.den(), var)}}; }

inline RatFunc ratfunc_from_json(const json& j) { return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den"))); }

inline json to_json(const MayaDiagram& M) { return {{"s", M.s()}, {"t", M.t()}}; }

inline MayaDiagram maya_from_json(const json& j) {
  try {
    return MayaDiagram(j.at("s").get<std::vector<int>>(), j.at("t").get<std::vector<int>>());
  } catch (const precondition_error& e) {
    throw parse_error(e.what());
  }
}

inline json to_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const json& j) {
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const precondition_error& e) {
    throw parse_error(e.what());
  }
}

inline json to_json(const DurfeeSymbol& d) {
  return {{"mu", to_json(d.mu)}, {"nu", to_json(d.nu)}, {"p", d.p}, {"q", d.q}, {"text", to_string(d)}};
}

inline json to_json(const EquivalenceReport& r) {
  return {{"M", to_json(r.M)}, {"k", r.k}, {"constant", to_json(r.constant)}, {"match", r.match}, {"lhs_degree", r.lhs_degree()}};
}

inline json to_json(const CornerReport& c) {
  json corners = json::array();
  for (const auto& k : c.corners) corners.push_back({{"origin", k.origin}, {"i", k.i}, {"j", k.j}, {"girth", k.girth()}});
  return {{"r", c.r}, {"origins", c.origins}, {"corners", corners}};
}

inline json to_json(const EigenReport& e) {
  return {{"n", e.n}, {"eigenvalue", to_json(e.eigenvalue)}, {"residual", to_json(e.residual)}, {"ok", e.ok()}};
}

inline json to_json(const PivSolution& s) {
  return {{"class", to_string(s.cls)},
          {"params", {s.p1, s.p2}},
          {"branch", s.branch},
          {"y", to_json(s.y, "t")},
          {"a", to_json(s.a)},
          {"b", to_json(s.b)}};
}

// ---- Hermite table persistence ----

inline void save_hermite_cache(const std::filesystem::path& file, const HermiteCache& cache = HermiteCache::global()) {
  const auto [H, h] = cache.snapshot();
  json jH = json::array(), jh = json::array();
  for (const auto& p : H) jH.push_back(to_json(p));
  for (const auto& p : h) jh.push_back(to_json(p));
  if (!file.parent_path().empty()) std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp);
    os << json{{"H", jH}, {"h", jh}}.dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

/// Returns false if the file is missing, malformed, or inconsistent with
/// the recurrences; the cache is left untouched in that case.
inline bool load_hermite_cache(const std::filesystem::path& file, HermiteCache& cache = HermiteCache::global()) {
  std::ifstream is(file);
  if (!is) return false;
  try {
    const json j = json::parse(is);
    std::vector<IntPoly> H, h;
    for (const auto& p : j.at("H")) H.push_back(poly_from_json(p));
    for (const auto& p : j.at("h")) h.push_back(poly_from_json(p));
    return cache.preload(H, h);
  } catch (const std::exception&) {
    return false;
  }
}

/// $HPW_CACHE_DIR/hermite.json, if the variable is set.
inline std::optional<std::filesystem::path> hermite_cache_file() {
  const char* dir = std::getenv("HPW_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) / "hermite.json";
}

}  // namespace hpw
