#pragma once

// The pmhopf command line. run() takes the arguments after the program name
// and writes to the given streams, so tests can drive it in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "pmhopf/pmhopf.hpp"

namespace pmhopf::cli {

enum ExitCode { ok = 0, bad_input = 1, check_failed = 2 };

namespace detail {

using nlohmann::json;

template <class B> json basis_json(const B &b) { return to_text(b); }
template <class A, class B> json basis_json(const std::pair<A, B> &p) {
  return json::array({to_text(p.first), to_text(p.second)});
}

inline json coeff_json(const QPoly &c) {
  json terms = json::array();
  for (const auto &[e, v] : c.terms())
    terms.push_back({{"qc", e.first}, {"qs", e.second}, {"c", v.str()}});
  return terms;
}

/// {"terms": [{"basis": ..., "coeff": ..., "monomials": [...]}, ...]}
/// in the same order as the text output.
template <class B> json element_json(const Element<B> &x) {
  std::vector<std::tuple<std::string, json, const QPoly *>> rows;
  for (const auto &[b, c] : x)
    rows.emplace_back(to_text(b), basis_json(b), &c);
  std::sort(rows.begin(), rows.end(), [](auto &a, auto &b) {
    return std::get<0>(a) < std::get<0>(b);
  });
  json terms = json::array();
  for (auto &[text, basis, c] : rows)
    terms.push_back({{"basis", basis},
                     {"coeff", c->to_text()},
                     {"monomials", coeff_json(*c)}});
  return {{"terms", terms}};
}

struct Output {
  std::ostream &out;
  bool as_json;

  template <class B> void element(const Element<B> &x) {
    if (as_json) {
      out << element_json(x).dump() << "\n";
      return;
    }
    if (x.empty())
      out << "0\n";
    for (auto &line : to_lines(x))
      out << line << "\n";
  }
};

/// qc and qs are left symbolic unless given an integer value.
inline std::optional<BigInt> parse_q(const std::string &name,
                                     const std::string &v) {
  if (v.empty() || v == name)
    return std::nullopt;
  try {
    return BigInt(v);
  } catch (const std::exception &) {
    throw ParseError(name + ": expected an integer or '" + name + "', got '" +
                     v + "'");
  }
}

inline QPoly substitute(const QPoly &p, const std::optional<BigInt> &qc,
                        const std::optional<BigInt> &qs) {
  QPoly r;
  for (const auto &[e, c] : p.terms()) {
    BigInt v = c;
    if (qc)
      v *= boost::multiprecision::pow(*qc, e.first);
    if (qs)
      v *= boost::multiprecision::pow(*qs, e.second);
    r.add_term({qc ? 0 : e.first, qs ? 0 : e.second}, v);
  }
  return r;
}

inline bool is_biword(const std::string &s) {
  return s.find('|') != std::string::npos;
}
inline bool is_code_word(const std::string &s) {
  auto t = pmhopf::detail::trim(s);
  return !t.empty() && t.front() == '(' && !is_biword(t);
}
inline bool is_set_matrix(const std::string &s) {
  return s.find('{') != std::string::npos ||
         pmhopf::detail::trim(s) == "[]";
}

inline SetPackedMatrix set_matrix_operand(const std::string &x,
                                          const std::string &y) {
  if (!y.empty())
    return setcomp_pair_to_setmatrix(parse_set_composition(x),
                                     parse_set_composition(y));
  if (is_biword(x))
    return from_biword(bipack(parse_biword(x)));
  return pmhopf::detail::parse_smq(x);
}

inline IntPackedMatrix int_matrix_operand(const std::string &x) {
  if (is_code_word(x))
    return diagram_to_matrix(
        diagram_from_code(parse_multidegree_word(x).letters));
  if (is_set_matrix(x) || is_biword(x))
    return gimel(pmhopf::detail::parse_smq(x));
  return parse_int_matrix(x);
}

inline void print_reports(std::ostream &out, const std::vector<CheckReport> &rs,
                          bool as_json, bool &all_ok) {
  json arr = json::array();
  for (auto &r : rs) {
    all_ok = all_ok && r.ok();
    if (as_json) {
      arr.push_back({{"name", r.name},
                     {"checked", r.checked},
                     {"failures", r.failures},
                     {"counterexample", r.counterexample}});
      continue;
    }
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checked
        << " checked";
    if (!r.ok())
      out << ", " << r.failures << " failed; first: " << r.counterexample;
    out << ")\n";
  }
  if (as_json)
    out << arr.dump() << "\n";
}

struct UnknownAlgebra : ParseError {
  explicit UnknownAlgebra(const std::string &name)
      : ParseError("unknown algebra: " + name) {}
};

template <class F> void dispatch(const std::string &alg, F &&f) {
  if (!with_algebra(alg, std::forward<F>(f)))
    throw UnknownAlgebra(alg);
}

constexpr int enumeration_cap = 5;

inline int hilbert(std::ostream &out, const std::string &alg, int upto,
                   const std::string &method, bool as_json) {
  require_algebra(alg);
  const bool formula = method != "enumerate";
  const bool enumerate = method != "formula";
  if (formula && !enumerate && !dim_formula(alg, 0))
    throw ParseError("no closed formula for " + alg +
                     "; use --method enumerate");
  if (enumerate && !formula && upto > enumeration_cap)
    throw ParseError("enumeration is limited to n <= " +
                     std::to_string(enumeration_cap));
  json rows = json::array();
  bool agree = true;
  int compared = -1;
  for (int n = 0; n <= upto; ++n) {
    std::optional<BigInt> f, e;
    if (formula)
      f = dim_formula(alg, n);
    if (enumerate && n <= enumeration_cap)
      e = enumerate_dim(alg, n);
    if (f && e) {
      agree = agree && *f == *e;
      compared = n;
    }
    BigInt shown = f ? *f : e ? *e : BigInt(-1);
    if (shown < 0)
      break;
    if (as_json) {
      json row = {{"n", n}};
      if (f)
        row["formula"] = f->str();
      if (e)
        row["enumerate"] = e->str();
      rows.push_back(row);
      continue;
    }
    out << shown;
    if (f && e && *f != *e)
      out << " (enumerated " << *e << ")";
    out << "\n";
  }
  std::string status = compared < 0 ? "" : agree ? "AGREE" : "DISAGREE";
  std::string note;
  if (formula && (alg == "MRSym" || alg == "MCSym")) {
    auto c = choose_n_exponent();
    bool multisets = c.chosen == NExponent::multisets;
    bool brute = multisets ? c.multisets_matches_brute : c.shifted_matches_brute;
    bool series =
        multisets ? c.multisets_matches_series : c.shifted_matches_series;
    note = std::string("N exponent ") +
           (multisets ? "C(i+k-1,k)" : "C(i+k,i)") + ": colored-partition counts " +
           (brute ? "match" : "differ") + ", reference series " +
           (series ? "match" : "differ");
  }
  if (as_json) {
    json doc = {{"algebra", alg}, {"coefficients", rows}};
    if (!status.empty())
      doc["status"] = status;
    if (!note.empty())
      doc["note"] = note;
    out << doc.dump() << "\n";
  } else {
    if (!status.empty())
      out << status << " (formula vs enumeration, n <= " << compared << ")\n";
    if (!note.empty())
      out << "# " << note << "\n";
  }
  return agree ? ok : check_failed;
}

inline std::vector<CheckReport> run_check(const std::string &what,
                                          const std::string &alg, int g) {
  std::vector<CheckReport> rs;
  if (what == "tridend" || what == "bidend") {
    if (alg != "SMQSym")
      throw ParseError(what + " is checked on SMQSym only");
    rs = what == "tridend" ? check_tridendriform(g) : check_bidendriform(g);
    for (auto &r : check_splitting(g))
      rs.push_back(r);
    return rs;
  }
  if (what == "diagram")
    return diagram_check(g);
  dispatch(alg, [&](auto a) {
    using A = decltype(a);
    if (what == "assoc")
      rs.push_back(check_associativity<A>(g));
    else if (what == "coassoc")
      rs.push_back(check_coassociativity<A>(g));
    else if (what == "bialgebra") {
      rs.push_back(check_bialgebra<A>(g));
      rs.push_back(check_unit_counit<A>(g));
    }
  });
  return rs;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream &out,
               std::ostream &err) {
  CLI::App app{"Hopf algebras of packed matrices"};
  app.name("pmhopf");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "structured output");

  std::string alg, x, y, kind;
  int upto = 7, grade = 3;
  std::string method = "both", qc = "qc", qs = "qs";
  bool left_first = false;

  auto *product = app.add_subcommand("product", "product of two basis elements");
  product->add_option("ALG", alg)->required();
  product->add_option("X", x)->required();
  product->add_option("Y", y)->required();

  auto *coproduct = app.add_subcommand("coproduct", "coproduct of a basis element");
  coproduct->add_option("ALG", alg)->required();
  coproduct->add_option("X", x)->required();

  auto *dend = app.add_subcommand("dendriform", "SMQSym splitting parts");
  dend->add_option("PART", kind)
      ->required()
      ->check(CLI::IsMember({"prec", "circ", "succ", "dll", "dgg"}));
  dend->add_option("X", x)->required();
  dend->add_option("Y", y);

  auto *convert = app.add_subcommand("convert", "change representation");
  convert->add_option("TO", kind)
      ->required()
      ->check(CLI::IsMember({"matrix", "biword", "setcomps", "diagram", "word"}));
  convert->add_option("X", x)->required();
  convert->add_option("Y", y, "second set composition");

  auto *hilb = app.add_subcommand("hilbert", "graded dimensions");
  hilb->add_option("ALG", alg)->required();
  hilb->add_option("--upto", upto)->check(CLI::Range(0, 60));
  hilb->add_option("--method", method)
      ->check(CLI::IsMember({"formula", "enumerate", "both"}));

  auto *check = app.add_subcommand("check", "verify identities exhaustively");
  check->add_option("WHAT", kind)
      ->required()
      ->check(CLI::IsMember(
          {"assoc", "coassoc", "bialgebra", "tridend", "bidend", "diagram"}));
  check->add_option("--grade", grade)->check(CLI::Range(0, 5));
  alg = "SMQSym";
  check->add_option("--alg", alg);

  auto *ld = app.add_subcommand("ld-product", "deformed product of integer matrices");
  ld->add_option("A", x)->required();
  ld->add_option("B", y)->required();
  ld->add_option("--qc", qc, "integer value or 'qc'");
  ld->add_option("--qs", qs, "integer value or 'qs'");
  ld->add_flag("--left-then-right", left_first,
               "pair left entries of earlier rows with right entries of later rows");

  std::vector<const char *> argv{"pmhopf"};
  for (auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : bad_input;
  }

  detail::Output o{out, as_json};
  try {
    if (*product) {
      detail::dispatch(alg, [&](auto a) {
        using A = decltype(a);
        o.element(A::product(A::parse(x), A::parse(y)));
      });
    } else if (*coproduct) {
      detail::dispatch(alg, [&](auto a) {
        using A = decltype(a);
        o.element(A::coproduct(A::parse(x)));
      });
    } else if (*dend) {
      auto p = pmhopf::detail::parse_smq(x);
      if (kind == "dll" || kind == "dgg") {
        if (!y.empty())
          throw ParseError(kind + " takes one operand");
        o.element(kind == "dll" ? delta_ll(p) : delta_gg(p));
      } else {
        if (y.empty())
          throw ParseError(kind + " takes two operands");
        auto part = kind == "prec" ? TriPart::prec
                    : kind == "circ" ? TriPart::circ
                                     : TriPart::succ;
        o.element(tri_part(p, pmhopf::detail::parse_smq(y), part));
      }
    } else if (*convert) {
      using detail::json;
      json doc;
      std::vector<std::string> lines;
      if (kind == "matrix") {
        if (!y.empty() || !detail::is_code_word(x)) {
          auto m = detail::set_matrix_operand(x, y);
          lines.push_back(to_text(m));
        } else {
          lines.push_back(to_text(detail::int_matrix_operand(x)));
        }
        doc["matrix"] = lines.back();
      } else if (kind == "biword" || kind == "setcomps") {
        auto m = detail::set_matrix_operand(x, y);
        if (kind == "biword") {
          lines.push_back(to_text(to_biword(m)));
          doc["biword"] = lines.back();
        } else {
          auto [r, c] = setmatrix_to_setcomp_pair(m);
          lines = {to_text(r), to_text(c)};
          doc["rows"] = lines[0];
          doc["cols"] = lines[1];
        }
      } else {
        auto d = matrix_to_diagram(detail::int_matrix_operand(x));
        std::string code;
        for (auto &a : code_w(d))
          code += to_text(a);
        if (kind == "word") {
          lines.push_back(code);
          doc["word"] = code;
        } else {
          auto [alpha, beta] = multiplier(d);
          lines = {"white " + std::to_string(d.white),
                   "black " + std::to_string(d.black),
                   "multiplier L^" + to_text(alpha) + " V^" + to_text(beta),
                   "code " + code};
          doc = {{"white", d.white},
                 {"black", d.black},
                 {"L", to_text(alpha)},
                 {"V", to_text(beta)},
                 {"code", code}};
        }
      }
      if (as_json)
        out << doc.dump() << "\n";
      else
        for (auto &l : lines)
          out << l << "\n";
    } else if (*hilb) {
      return detail::hilbert(out, alg, upto, method, as_json);
    } else if (*check) {
      bool all_ok = true;
      detail::print_reports(out, detail::run_check(kind, alg, grade), as_json,
                            all_ok);
      return all_ok ? ok : check_failed;
    } else if (*ld) {
      auto cv = detail::parse_q("qc", qc), sv = detail::parse_q("qs", qs);
      auto r = ld_product(parse_int_matrix(x), parse_int_matrix(y),
                          left_first ? LdOrientation::left_then_right
                                  : LdOrientation::right_then_left);
      Element<IntPackedMatrix> s;
      for (const auto &[b, c] : r)
        s.add(b, detail::substitute(c, cv, sv));
      o.element(s);
    }
  } catch (const CollectionError &e) {
    err << "internal error: " << e.what() << "\n";
    return check_failed;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  }
  return ok;
}

} // namespace pmhopf::cli
