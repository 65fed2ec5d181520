// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pmhopf/pmhopf.hpp"

using namespace pmhopf;

namespace {

struct Criterion {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void expect_text(const std::string &got, const std::string &want,
                   const std::string &what) {
    expect(got == want, what + ": got " + got);
  }
  void report(const CheckReport &r) {
    expect(r.ok(), r.name + " (" + std::to_string(r.failures) + " of " +
                       std::to_string(r.checked) + " failed; " +
                       r.counterexample + ")");
  }
};

std::string joined(const std::vector<std::string> &lines) {
  std::string s;
  for (auto &l : lines)
    s += l + "\n";
  return s;
}

Criterion golden() {
  Criterion c;
  auto sm = parse_set_packed_matrix;
  c.expect_text(joined(to_lines(smq_product(sm("[{3 4},{1};{2},{}]"),
                                            sm("[{2 3 4},{1}]")))),
                "[{3 4},{1},{6 7 8},{5};{2},{},{},{}]\n"
                "[{3 4},{1},{},{};{2},{},{6 7 8},{5}]\n"
                "[{3 4},{1},{},{};{2},{},{},{};{},{},{6 7 8},{5}]\n"
                "[{3 4},{1},{},{};{},{},{6 7 8},{5};{2},{},{},{}]\n"
                "[{},{},{6 7 8},{5};{3 4},{1},{},{};{2},{},{},{}]\n",
                "SMQSym product");
  c.expect_text(to_text(smq_coproduct(sm("[{2 4},{1};{6},{3 5}]"))),
                "[] ⊗ [{2 4},{1};{6},{3 5}] + [{2 3},{1}] ⊗ [{3},{1 2}] + "
                "[{2 4},{1};{6},{3 5}] ⊗ []",
                "SMQSym coproduct");
  SMRIndex i{parse_set_partition("{{1 4},{2},{3}}"),
             parse_set_composition("[{1 3 4},{2}]")};
  c.expect_text(joined(to_lines(smr_expand(i))),
                "[{1 4},{};{3},{};{},{2}]\n[{1 4},{};{},{2};{3},{}]\n"
                "[{3},{};{1 4},{};{},{2}]\n[{3},{};{},{2};{1 4},{}]\n"
                "[{},{2};{1 4},{};{3},{}]\n[{},{2};{3},{};{1 4},{}]\n",
                "SMR expansion");
  c.expect_text(to_text(mr_expand(mr_index(parse_int_matrix("[2,1,0;0,3,4]")))),
                "[0,3,4;2,1,0] + [2,1,0;0,3,4]", "MR expansion");
  c.expect_text(to_text(gimel(sm("[{1 2},{},{6};{},{3 4 5},{7 8 9 10}]"))),
                "[2,0,1;0,3,4]", "gimel");
  c.expect_text(to_text(star(parse_biword("(142|236)"), parse_biword("(24|31)"))),
                "(14224|23697)", "bi-word product");
  auto ld = ld_product(parse_int_matrix("[2,0;1,4]"), parse_int_matrix("[1]"));
  c.expect_text(joined(to_lines(ld)),
                "qc^7*[0,0,1;2,0,0;1,4,0]\nqc^5*[2,0,0;0,0,1;1,4,0]\n"
                "[2,0,0;1,4,0;0,0,1]\nqs^5*[2,0,0;1,4,1]\n"
                "qc^5*qs^2*[2,0,1;1,4,0]\n",
                "LD product");
  return c;
}

Criterion hilbert_mrsym() {
  Criterion c;
  const long long want[] = {1,    1,     4,      16,     76,     400,
                            2356, 15200, 106644, 806320, 6526580};
  for (int n = 0; n <= 10; ++n)
    c.expect(dim_mrsym(n) == want[n], "formula at n=" + std::to_string(n));
  for (int n = 0; n <= 5; ++n)
    c.expect(enumerate_dim("MRSym", n) == want[n],
             "enumeration at n=" + std::to_string(n));
  return c;
}

Criterion dimension_identities() {
  Criterion c;
  for (int n = 0; n <= 5; ++n) {
    auto s = std::to_string(n);
    auto ob = ordered_bell(n), b = bell(n);
    c.expect(enumerate_dim("SMQSym", n) == ob * ob, "SMQSym n=" + s);
    c.expect(enumerate_dim("SMRSym", n) == ob * b, "SMRSym n=" + s);
    c.expect(enumerate_dim("SMCSym", n) == ob * b, "SMCSym n=" + s);
    c.expect(enumerate_dim("MRSym", n) == enumerate_dim("MCSym", n),
             "MRSym vs MCSym n=" + s);
  }
  return c;
}

Criterion axioms() {
  Criterion c;
  c.report(check_associativity<SMQSym>(4));
  c.report(check_coassociativity<SMQSym>(4));
  c.report(check_bialgebra<SMQSym>(4));
  for (auto &r : check_tridendriform(3))
    c.report(r);
  c.report(check_bidendriform(3).front());
  for (auto &r : check_splitting(4))
    c.report(r);
  return c;
}

std::vector<SetPackedMatrix> set_upto(int n) {
  std::vector<SetPackedMatrix> out;
  for (int k = 0; k <= n; ++k)
    for (auto &m : set_packed_matrices(k))
      out.push_back(m);
  return out;
}

std::vector<IntPackedMatrix> int_upto(int n) {
  std::vector<IntPackedMatrix> out;
  for (int k = 0; k <= n; ++k)
    for (auto &m : int_packed_matrices(k))
      out.push_back(m);
  return out;
}

Criterion realization() {
  Criterion c;
  auto all = set_upto(4);
  for (auto &p : all)
    for (auto &q : all) {
      if (p.ground_size() + q.ground_size() > 4)
        continue;
      auto lhs = star_truncated(realize(p, 4, 4), realize(q, 4, 4), 4);
      c.expect(lhs == realize(smq_product(p, q), 4, 4),
               to_text(p) + " * " + to_text(q));
    }
  return c;
}

Criterion diagram() {
  Criterion c;
  int bad = 0;
  std::string faces;
  for (auto &r : diagram_check(3))
    if (!r.ok()) {
      ++bad;
      faces += "\n  " + r.name + ": " + std::to_string(r.failures) + " of " +
               std::to_string(r.checked) + " differ, e.g. " + r.counterexample;
    }
  c.expect(bad == 0, std::to_string(bad) + " of 6 faces do not commute" + faces);
  return c;
}

Criterion deformation() {
  Criterion c;
  auto ints = int_upto(4);
  for (auto &a : ints)
    for (auto &b : ints)
      if (a.degree() + b.degree() <= 4)
        c.expect(specialize_element(ld_product(a, b), 1, 1) == mq_product(a, b),
                 "LD at qc=qs=1: " + to_text(a) + " * " + to_text(b));

  std::vector<Multidegree> letters;
  for (auto v : std::vector<std::vector<int>>{{1}, {0, 1}, {2}, {1, 1}, {0, 2}})
    letters.emplace_back(v);
  std::vector<MultidegreeWord> words{MultidegreeWord()};
  for (auto &a : letters) {
    words.push_back(MultidegreeWord({a}));
    for (auto &b : letters)
      words.push_back(MultidegreeWord({a, b}));
  }
  using E = Element<MultidegreeWord>;
  MldiagMultiplier mul;
  for (auto &u : words)
    for (auto &v : words) {
      auto uv = mul(u, v);
      for (auto &w : words)
        c.expect(mul(uv, E(w)) == mul(E(u), mul(v, w)),
                 "MLDIAG " + to_text(u) + " " + to_text(v) + " " + to_text(w));
    }
  std::mt19937 rng(7);
  auto random_word = [&] {
    std::vector<Multidegree> l(std::uniform_int_distribution<int>(0, 3)(rng));
    for (auto &a : l)
      a = letters[rng() % letters.size()];
    return MultidegreeWord(l);
  };
  for (int t = 0; t < 200; ++t) {
    auto u = random_word(), v = random_word(), w = random_word();
    c.expect(mul(mul(u, v), E(w)) == mul(E(u), mul(v, w)),
             "MLDIAG random " + to_text(u) + " " + to_text(v) + " " + to_text(w));
  }
  return c;
}

std::vector<SetPackedMatrix> col_orbit(const SetPackedMatrix &m) {
  std::vector<int> s(m.width());
  std::iota(s.begin(), s.end(), 1);
  std::vector<SetPackedMatrix> out;
  do {
    std::vector<int> v;
    for (int x : m.col_word().letters())
      v.push_back(s[x - 1]);
    out.emplace_back(m.row_word(), PackedWord(v));
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

Criterion well_defined() {
  Criterion c;
  auto smc = [](const SetPackedMatrix &m) { return smc_project(m); };
  auto sets = set_upto(3);
  for (auto &p : sets) {
    auto dp = detail::project_tensor<SMCIndex>(smq_coproduct(p), smc);
    for (auto &p2 : col_orbit(p))
      c.expect(detail::project_tensor<SMCIndex>(smq_coproduct(p2), smc) == dp,
               "SMC coproduct " + to_text(p2));
    for (auto &q : sets) {
      if (p.ground_size() + q.ground_size() > 3)
        continue;
      auto ref = smc_project(smq_product(p, q));
      for (auto &p2 : col_orbit(p))
        for (auto &q2 : col_orbit(q))
          c.expect(smc_project(smq_product(p2, q2)) == ref,
                   "SMC product " + to_text(p2) + " " + to_text(q2));
    }
  }
  auto ints = int_upto(3);
  for (auto &a : ints) {
    auto da = detail::project_tensor<MCIndex>(mq_coproduct(a), mc_index);
    for (auto &a2 : col_permutations(a))
      c.expect(detail::project_tensor<MCIndex>(mq_coproduct(a2), mc_index) == da,
               "MC coproduct " + to_text(a2));
    for (auto &b : ints) {
      if (a.degree() + b.degree() > 3)
        continue;
      auto ref = mc_project(mq_product(a, b));
      for (auto &a2 : col_permutations(a))
        for (auto &b2 : col_permutations(b))
          c.expect(mc_project(mq_product(a2, b2)) == ref,
                   "MC product " + to_text(a2) + " " + to_text(b2));
    }
  }
  return c;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> all{
      {"golden examples", golden},
      {"MRSym Hilbert series", hilbert_mrsym},
      {"dimension identities", dimension_identities},
      {"SMQSym axioms and splittings", axioms},
      {"realization", realization},
      {"eight-algebra diagram", diagram},
      {"deformation", deformation},
      {"quotient well-definedness", well_defined},
  };
  int failed = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    Criterion c;
    try {
      c = all[k].second();
    } catch (const std::exception &e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS " : "FAIL ") << k + 1 << " " << all[k].first;
    if (!c.ok)
      std::cout << ": " << c.detail;
    std::cout << std::endl;
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
