#include <gtest/gtest.h>

#include <random>

#include "pmhopf/deform.hpp"
#include "pmhopf/subquot.hpp"

using namespace pmhopf;

namespace {

MultidegreeWord mw(const char *s) { return parse_multidegree_word(s); }
IntPackedMatrix im(const char *s) { return parse_int_matrix(s); }

// Letters with at most two coordinates and weight <= 2.
std::vector<Multidegree> small_letters() {
  return {Multidegree({1}), Multidegree({0, 1}), Multidegree({2}),
          Multidegree({1, 1}), Multidegree({0, 2})};
}

std::vector<MultidegreeWord> words(const std::vector<Multidegree> &letters,
                                   int max_len) {
  std::vector<MultidegreeWord> out{MultidegreeWord()};
  std::vector<MultidegreeWord> frontier{MultidegreeWord()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<MultidegreeWord> next;
    for (auto &w : frontier)
      for (auto &a : letters) {
        auto l = w.letters;
        l.push_back(a);
        next.emplace_back(l);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = next;
  }
  return out;
}

std::vector<IntPackedMatrix> nonempty_upto(int n) {
  std::vector<IntPackedMatrix> out;
  for (int k = 1; k <= n; ++k)
    for (auto &m : int_packed_matrices(k))
      out.push_back(m);
  return out;
}

// Coefficient read off the result matrix: the first `left` columns came
// from the left operand.
QPoly ld_coefficient(const IntPackedMatrix &c, int left) {
  std::vector<int> l(c.rows(), 0), r(c.rows(), 0);
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j)
      (j < left ? l : r)[i] += c.at(i, j);
  int x = 0, y = 0;
  for (int i = 0; i < c.rows(); ++i) {
    x += l[i] * r[i];
    for (int k = i + 1; k < c.rows(); ++k)
      y += r[i] * l[k];
  }
  return QPoly::monomial(1, y, x);
}

} // namespace

TEST(MultidegreeWord, TextRoundTrip) {
  auto w = mw("(2)(1,3,1)(0,1,2)(0,1)");
  EXPECT_EQ(to_text(w), "(2)(1,3,1)(0,1,2)(0,1)");
  EXPECT_EQ(w.weight(), 11);
  EXPECT_EQ(w.spots(), 3);
  EXPECT_EQ(to_text(mw("e")), "ε");
  EXPECT_THROW(mw("(1)(0,0)"), ParseError);
  EXPECT_THROW(mw("(1"), ParseError);
}

TEST(Mldiag, Examples) {
  auto w = mw("(1)(0,2)");
  EXPECT_EQ(mldiag_product(MultidegreeWord(), w), Element<MultidegreeWord>(w));
  EXPECT_EQ(mldiag_product(w, MultidegreeWord()), Element<MultidegreeWord>(w));
  EXPECT_EQ(to_text(mldiag_product(mw("(1)"), mw("(2)"))),
            "(1)(2) + qc^2*(2)(1) + qs^2*(3)");
}

// Terms of u * v are shuffles of the letters in which some adjacent pairs
// (one from each side) have merged; with both parameters at 1 each such
// term appears once.
TEST(Mldiag, SpecializationCountsStuffles) {
  auto all = words(small_letters(), 2);
  for (auto &u : all)
    for (auto &v : all) {
      auto p = specialize_element(mldiag_product(u, v), 1, 1);
      BigInt total = 0;
      for (auto &[w, c] : p)
        total += c.constant_term();
      // Delannoy numbers D(|u|, |v|)
      std::size_t a = u.letters.size(), b = v.letters.size();
      BigInt d = 0;
      for (std::size_t k = 0; k <= std::min(a, b); ++k)
        d += binomial(a, k) * binomial(b, k) * (BigInt(1) << k);
      ASSERT_EQ(total, d);
    }
}

TEST(Mldiag, AssociativeExhaustive) {
  auto all = words(small_letters(), 2);
  MldiagMultiplier mul;
  for (auto &u : all)
    for (auto &v : all) {
      auto uv = mul(u, v);
      for (auto &w : all)
        ASSERT_EQ(mul(uv, Element<MultidegreeWord>(w)),
                  mul(Element<MultidegreeWord>(u), mul(v, w)))
            << to_text(u) << " " << to_text(v) << " " << to_text(w);
    }
}

TEST(Mldiag, AssociativeRandomLengthThree) {
  std::mt19937 rng(2024);
  auto letters = small_letters();
  auto random_word = [&] {
    std::vector<Multidegree> l(std::uniform_int_distribution<int>(0, 3)(rng));
    for (auto &a : l)
      a = letters[rng() % letters.size()];
    return MultidegreeWord(l);
  };
  for (int t = 0; t < 200; ++t) {
    auto u = random_word(), v = random_word(), w = random_word();
    ASSERT_EQ(mldiag_product(mldiag_product(u, v), Element<MultidegreeWord>(w)),
              mldiag_product(Element<MultidegreeWord>(u), mldiag_product(v, w)));
  }
}

TEST(Shift, Examples) {
  auto w = mw("(1)(0,1)");
  EXPECT_EQ(shift_word(w, 0), w);
  EXPECT_EQ(to_text(shift_word(w, 2)), "(0,0,1)(0,0,0,1)");
  for (auto &u : words(small_letters(), 3))
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        ASSERT_EQ(shift_word(shift_word(u, b), a), shift_word(u, a + b));
}

TEST(Shift, ShiftedProductAssociative) {
  auto all = words({Multidegree({1}), Multidegree({0, 1}), Multidegree({2})}, 2);
  MldiagMultiplier mul;
  auto sp = [&](const Element<MultidegreeWord> &x,
                const Element<MultidegreeWord> &y) {
    return apply_bilinear(
        [&](const MultidegreeWord &a, const MultidegreeWord &b) {
          return mul(a, shift_word(b, a.spots()));
        },
        x, y);
  };
  for (auto &u : all)
    for (auto &v : all)
      for (auto &w : all) {
        Element<MultidegreeWord> U(u), V(v), W(w);
        ASSERT_EQ(sp(sp(U, V), W), sp(U, sp(V, W)));
      }
}

TEST(Ldiag, Juxtaposition) {
  auto one = matrix_to_diagram(im("[1]"));
  EXPECT_EQ(ldiag_product(LabelledDiagram(), one), one);
  EXPECT_EQ(to_text(diagram_to_matrix(ldiag_product(one, one))), "[1,0;0,1]");
}

// The multiplier is a monoid morphism: exponents add.
TEST(Ldiag, MultiplierIsMultiplicative) {
  auto all = nonempty_upto(2);
  all.push_back(IntPackedMatrix());
  for (auto &a : all)
    for (auto &b : all) {
      auto da = matrix_to_diagram(a), db = matrix_to_diagram(b);
      auto [a1, b1] = multiplier(da);
      auto [a2, b2] = multiplier(db);
      auto [a3, b3] = multiplier(ldiag_product(da, db));
      ASSERT_EQ(a3, a1 + a2);
      ASSERT_EQ(b3, b1 + b2);
    }
}

// At qc = qs = 0 only the concatenation survives, and it codes the
// juxtaposed diagram.
TEST(Ldiag, CodeOfProductIsLeadingTerm) {
  std::vector<IntPackedMatrix> all{IntPackedMatrix()};
  for (auto &m : nonempty_upto(3))
    all.push_back(m);
  for (auto &a : all)
    for (auto &b : all) {
      if (a.degree() + b.degree() > 3)
        continue;
      auto da = matrix_to_diagram(a), db = matrix_to_diagram(b);
      MultidegreeWord u(code_w(da)), v(code_w(db));
      auto lead = specialize_element(shifted_product(u, v), 0, 0);
      MultidegreeWord w(code_w(ldiag_product(da, db)));
      ASSERT_EQ(lead, Element<MultidegreeWord>(w));
    }
}

TEST(LD, FiveTermExample) {
  auto p = ld_product(im("[2,0;1,4]"), im("[1]"));
  EXPECT_EQ(to_lines(p), (std::vector<std::string>{
                             "qc^7*[0,0,1;2,0,0;1,4,0]",
                             "qc^5*[2,0,0;0,0,1;1,4,0]",
                             "[2,0,0;1,4,0;0,0,1]",
                             "qs^5*[2,0,0;1,4,1]",
                             "qc^5*qs^2*[2,0,1;1,4,0]",
                         }));
}

TEST(LD, SmallestProduct) {
  EXPECT_EQ(to_text(ld_product(im("[1]"), im("[1]"))),
            "qc*[0,1;1,0] + [1,0;0,1] + qs*[1,1]");
  EXPECT_EQ(to_text(ld_product(im("[1]"), im("[1]"),
                               LdOrientation::left_then_right)),
            "[0,1;1,0] + qc*[1,0;0,1] + qs*[1,1]");
}

TEST(LD, CoefficientsReadFromBlocks) {
  auto all = nonempty_upto(3);
  for (auto &a : all)
    for (auto &b : all) {
      if (a.degree() + b.degree() > 4)
        continue;
      for (auto &[c, q] : ld_product(a, b))
        ASSERT_EQ(q, ld_coefficient(c, a.cols()));
    }
}

TEST(LD, SpecializesToMQSym) {
  std::vector<IntPackedMatrix> all{IntPackedMatrix()};
  for (auto &m : nonempty_upto(4))
    all.push_back(m);
  for (auto &a : all)
    for (auto &b : all)
      if (a.degree() + b.degree() <= 4) {
        ASSERT_EQ(specialize_element(ld_product(a, b), 1, 1), mq_product(a, b))
            << to_text(a) << " " << to_text(b);
      }
}

TEST(LD, Associative) {
  std::vector<IntPackedMatrix> all{IntPackedMatrix()};
  for (auto &m : nonempty_upto(3))
    all.push_back(m);
  for (auto &a : all)
    for (auto &b : all)
      for (auto &c : all) {
        if (a.degree() + b.degree() + c.degree() > 3)
          continue;
        Element<IntPackedMatrix> A(a), C(c);
        ASSERT_EQ(ld_product(ld_product(a, b), C),
                  ld_product(A, ld_product(b, c)));
      }
}
