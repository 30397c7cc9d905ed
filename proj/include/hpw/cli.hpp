#pragma once

// Command-line front end. run() is the whole program; tools/hpw.cpp only
// forwards argv to it.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage error.

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "hpw/io.hpp"
#include "hpw/painleve.hpp"
#include "hpw/xhermite.hpp"

namespace hpw::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;

struct SelftestCase {
  std::string name;
  std::function<bool()> check;
};

/// Golden identities checked by `selftest`.
inline std::vector<SelftestCase> selftest_cases() {
  auto pw = [](const char* frob) { return pseudo_wronskian(parse_frobenius(frob)); };
  auto H = [](std::initializer_list<int> idx) {
    std::vector<IntPoly> fs;
    for (int i : idx) fs.push_back(hermite_poly(i));
    return wronskian(fs);
  };
  auto h = [](std::initializer_list<int> idx) {
    std::vector<IntPoly> fs;
    for (int i : idx) fs.push_back(conj_hermite_poly(i));
    return wronskian(fs);
  };
  return {
      {"three-member identity W1 = 48 W2 = 7680 W3",
       [=] {
         const IntPoly w1 = H({1, 2, 3, 6});
         const IntPoly w3 = det_fraction_free(PolyMatrix({{hermite_poly(2), poly_derivative(hermite_poly(2))},
                                                          {conj_hermite_poly(3), conj_hermite_poly(4)}}));
         return w1 == h({1, 2, 6}) * BigInt(48) && w1 == w3 * BigInt(7680);
       }},
      {"H_{M''} = -483840 H_M = -1935360 H_{M'} for (4,4,3,1,1)",
       [=] {
         const IntPoly M = pw("5,2,1|2,1"), Mp = pw("2|5,4,2"), Mpp = pw("|8,7,5,2,1");
         return Mpp == M * BigInt(-483840) && Mpp == Mp * BigInt(-1935360);
       }},
      {"Wr[H1,H2,H4,H5] = -768 H_{M-6}", [=] { return H({1, 2, 4, 5}) == pw("5,2|") * BigInt(-768); }},
      {"Wr[H1,H2,H6,H7] = 19200 H_{M-3}", [=] { return H({1, 2, 6, 7}) == pw("2|4,3") * BigInt(19200); }},
      {"GH(3,5) = 18432 Wr[h5,h6,h7]", [=] { return pseudo_wronskian(gh_maya(3, 5)) == h({5, 6, 7}) * BigInt(18432); }},
      {"minimal girth (2,2,1,1) -> r=2, k=6",
       [] {
         const auto c = minimal_girth(Partition{2, 2, 1, 1});
         return c.r == 2 && c.origins == std::vector<int>{6};
       }},
      {"minimal girth (4,4,1,1) -> r=3, k=3",
       [] {
         const auto c = minimal_girth(Partition{4, 4, 1, 1});
         return c.r == 3 && c.origins == std::vector<int>{3};
       }},
      {"O(3,5) Durfee symbol [6,4,2|4,2]_{3x2}",
       [] {
         const auto s = min_order_o(3, 5);
         return s.order == 5 && to_string(durfee_symbol(s.minimal)) == "[6,4,2|4,2]_{3x2}";
       }},
      {"GH(3,5) minimal order 3", [] { return min_order_gh(3, 5).order == 3; }},
      {"exceptional Hermite (2,2,1,1), n=5: 2^12*72 h5",
       [] { return exceptional_hermite({2, 2, 1, 1}, 5) == conj_hermite_poly(5) * BigInt(4096 * 72); }},
      {"PIV GH(2,4) and O(1,2), all branches",
       [] {
         for (int b = 1; b <= 3; ++b)
           if (!verify_piv(piv_solution_gh(2, 4, b)).ok || !verify_piv(piv_solution_o(1, 2, b)).ok) return false;
         return true;
       }},
  };
}

namespace detail {

struct Output {
  std::ostream& out;
  bool as_json = false;

  /// Emits j in JSON mode, otherwise one "key: value" line per field.
  void emit(const json& j) const {
    if (as_json) {
      out << j.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
};

inline MayaDiagram diagram_from(const std::string& frobenius, const std::string& partition) {
  if (!frobenius.empty()) return parse_frobenius(frobenius);
  return maya_from_partition(parse_partition(partition));
}

inline json poly_field(const IntPoly& p, bool as_json, const char* var = "x") {
  if (as_json) return to_json(p, var);
  return to_string(p, var[0]);
}

inline json ratfunc_field(const RatFunc& f, bool as_json, const char* var = "t") {
  if (as_json) return to_json(f, var);
  return "(" + to_string(f.num(), var[0]) + ") / (" + to_string(f.den(), var[0]) + ")";
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite pseudo-Wronskians, Maya diagrams and rational Painleve IV solutions", "hpw"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::string frob, part;
  auto add_diagram_opts = [&](CLI::App* sub) {
    auto* f = sub->add_option("--frobenius", frob, "Frobenius symbol, e.g. \"5,2|2,1\"");
    auto* p = sub->add_option("--partition", part, "partition, e.g. 4,4,1,1");
    f->excludes(p);
    p->excludes(f);
  };

  auto* maya = app.add_subcommand("maya", "representations of a Maya diagram");
  add_diagram_opts(maya);

  auto* pw = app.add_subcommand("pw", "pseudo-Wronskian H_M");
  add_diagram_opts(pw);

  int k = 0;
  auto* equiv = app.add_subcommand("equiv", "constant c with H_M = c H_{M-k}, checked by direct determinants");
  add_diagram_opts(equiv);
  equiv->add_option("--k", k, "shift")->required();

  auto* minord = app.add_subcommand("minorder", "minimal girth, origins and Durfee symbol");
  add_diagram_opts(minord);

  int n = 0;
  bool want_min = false, want_ode = false;
  auto* xh = app.add_subcommand("xhermite", "exceptional Hermite polynomial H_n^(lambda)");
  xh->add_option("--partition", part, "partition lambda")->required();
  xh->add_option("--n", n, "degree")->required();
  xh->add_flag("--min-order", want_min, "also emit the minimal-order pseudo-Wronskian form");
  xh->add_flag("--verify-ode", want_ode, "check the eigenvalue equation");

  std::string cls = "gh";
  int pm = -1, pl = -1, l1 = -1, l2 = -1, branch = 1, cat_max = 4;
  bool want_verify = false;
  auto* piv = app.add_subcommand("piv", "rational Painleve IV solution");
  piv->add_option("--class", cls, "gh or o")->check(CLI::IsMember({"gh", "o"}));
  piv->add_option("--m", pm, "GH parameter m");
  piv->add_option("--ell", pl, "GH parameter l");
  piv->add_option("--l1", l1, "O parameter l1");
  piv->add_option("--l2", l2, "O parameter l2");
  piv->add_option("--branch", branch, "1, 2 or 3")->check(CLI::Range(1, 3));
  piv->add_flag("--verify", want_verify, "check the equation exactly");
  auto* catalog = piv->add_subcommand("catalog", "all verified solutions with parameters up to --max");
  catalog->add_option("--max", cat_max, "parameter bound")->check(CLI::Range(0, 12));

  auto* selftest = app.add_subcommand("selftest", "run the built-in golden identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  auto cache_file = hermite_cache_file();
  const bool cache_loaded = cache_file && load_hermite_cache(*cache_file);
  const std::size_t cache_before = HermiteCache::global().size();
  const detail::Output o{out, format == "json"};
  const bool js = o.as_json;

  auto needs_diagram = [&](CLI::App* sub) {
    if (frob.empty() && part.empty() && sub->count("--partition") == 0)
      throw CLI::ValidationError("one of --frobenius or --partition is required");
  };

  int code = kOk;
  try {
    if (*maya) {
      needs_diagram(maya);
      const MayaDiagram M = detail::diagram_from(frob, part);
      const auto [S, shift] = standardize(M);
      const Partition lambda = partition_from_maya(M);
      json j{{"frobenius", js ? to_json(M) : json(to_string(M))},
             {"partition", js ? to_json(lambda) : json(to_string(lambda))},
             {"conjugate", js ? to_json(conjugate(lambda)) : json(to_string(conjugate(lambda)))},
             {"size", lambda.size()},
             {"girth", girth(M)},
             {"standard_shift", shift},
             {"standard_form", js ? to_json(S) : json(to_string(S))}};
      o.emit(j);
    } else if (*pw) {
      needs_diagram(pw);
      const MayaDiagram M = detail::diagram_from(frob, part);
      const IntPoly P = pseudo_wronskian(M);
      o.emit({{"frobenius", js ? to_json(M) : json(to_string(M))},
              {"order", girth(M)},
              {"degree", P.degree() == IntPoly::kZeroDegree ? -1 : P.degree()},
              {"polynomial", detail::poly_field(P, js)}});
    } else if (*equiv) {
      needs_diagram(equiv);
      const MayaDiagram M = detail::diagram_from(frob, part);
      const auto rep = verify_equivalence(M, k);
      json j = to_json(rep);
      if (!js) j["M"] = to_string(M);
      o.emit(j);
      if (!rep.match) code = kVerifyFailed;
    } else if (*minord) {
      needs_diagram(minord);
      const MayaDiagram M = detail::diagram_from(frob, part);
      const CornerReport rep = corner_report(M);
      const int origin = rep.largest_origin();
      const MayaDiagram Mmin = M.shifted(-origin);
      const BigRat c = equivalence_constant(M, origin);
      json j{{"partition", js ? to_json(partition_from_maya(M)) : json(to_string(partition_from_maya(M)))},
             {"r", rep.r},
             {"origins", rep.origins},
             {"origin", origin},
             {"minimal_frobenius", js ? to_json(Mmin) : json(to_string(Mmin))},
             {"durfee", js ? to_json(durfee_symbol(Mmin)) : json(to_string(durfee_symbol(Mmin)))},
             {"constant", to_json(c)}};
      o.emit(j);
    } else if (*xh) {
      const Partition lambda = parse_partition(part);
      if (!XHermiteFamily(lambda).admissible(n)) throw CLI::ValidationError("--n", "degree is not admissible for this partition");
      const IntPoly P = exceptional_hermite(lambda, n);
      json j{{"partition", js ? to_json(lambda) : json(to_string(lambda))},
             {"n", n},
             {"polynomial", detail::poly_field(P, js)}};
      if (want_min) {
        const MinOrderForm f = min_order_form(lambda, n);
        const bool match = P * f.scalar.get_den() == f.polynomial * f.scalar.get_num();
        j["origin"] = f.origin;
        j["order"] = f.order();
        j["minimal_frobenius"] = js ? to_json(f.minimal) : json(to_string(f.minimal));
        j["scalar"] = to_json(f.scalar);
        j["minimal_polynomial"] = detail::poly_field(f.polynomial, js);
        j["match"] = match;
        if (!match) code = kVerifyFailed;
      }
      if (want_ode) {
        const EigenReport e = eigen_check(lambda, n);
        j["eigenvalue"] = to_json(e.eigenvalue);
        j["ode_residual_zero"] = e.ok();
        if (!e.ok()) code = kVerifyFailed;
      }
      o.emit(j);
    } else if (*piv) {
      if (*catalog) {
        json arr = json::array();
        for (const auto& s : piv_catalog(cat_max)) {
          const bool ok = verify_piv(s).ok;
          if (!ok) code = kVerifyFailed;
          json e = to_json(s);
          if (!js) e["y"] = detail::ratfunc_field(s.y, false);
          e["verified"] = ok;
          arr.push_back(e);
        }
        if (js) {
          out << arr.dump(2) << '\n';
        } else {
          for (const auto& e : arr)
            out << e["class"].get<std::string>() << e["params"].dump() << " branch " << e["branch"].dump() << ": a=" << e["a"].get<std::string>()
                << " b=" << e["b"].get<std::string>() << " verified=" << e["verified"].dump() << '\n';
        }
      } else {
        PivSolution s;
        if (cls == "gh") {
          if (pm < 0 || pl < 0) throw CLI::ValidationError("GH solutions need --m and --ell");
          s = piv_solution_gh(pm, pl, branch);
        } else {
          if (l1 < 0 || l2 < 0) throw CLI::ValidationError("O solutions need --l1 and --l2");
          s = piv_solution_o(l1, l2, branch);
        }
        json j = to_json(s);
        j["y"] = detail::ratfunc_field(s.y, js);
        if (want_verify) {
          const PivReport r = verify_piv(s);
          j["verified"] = r.ok;
          if (!r.ok) code = kVerifyFailed;
        }
        o.emit(j);
      }
    } else if (*selftest) {
      json results = json::array();
      for (const auto& c : selftest_cases()) {
        const bool ok = c.check();
        if (!ok) code = kVerifyFailed;
        if (js) results.push_back({{"name", c.name}, {"pass", ok}});
        else out << (ok ? "PASS  " : "FAIL  ") << c.name << '\n';
      }
      if (js) out << results.dump(2) << '\n';
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // parse_error and precondition_error: the arguments were unusable.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cache_file && (!cache_loaded || HermiteCache::global().size() > cache_before)) save_hermite_cache(*cache_file);
  return code;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hpw"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hpw::cli
