#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "pmhopf/dendriform.hpp"
#include "pmhopf/subquot.hpp"

using namespace pmhopf;

namespace {

SetPackedMatrix sm(const char *s) { return parse_set_packed_matrix(s); }

std::vector<SetPackedMatrix> nonempty_upto(int n) {
  std::vector<SetPackedMatrix> out;
  for (int k = 1; k <= n; ++k)
    for (auto &m : set_packed_matrices(k))
      out.push_back(m);
  return out;
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

// Classification from the picture: which operand owns the lowest row.
TriPart lowest_row_owner(const SetPackedMatrix &r, int np) {
  const auto &u = r.row_word().letters();
  int from_p = 0, from_q = 0;
  for (int i = 0; i < static_cast<int>(u.size()); ++i) {
    int &owner = i < np ? from_p : from_q;
    owner = std::max(owner, u[i]);
  }
  return from_q < from_p ? TriPart::prec
                         : from_q == from_p ? TriPart::circ : TriPart::succ;
}

} // namespace

TEST(Tridendriform, SmallExamples) {
  auto one = sm("[{1}]");
  EXPECT_EQ(to_text(tri_succ(one, one)), "[{1},{};{},{2}]");
  EXPECT_EQ(to_text(tri_circ(one, one)), "[{1},{2}]");
  EXPECT_EQ(to_text(tri_prec(one, one)), "[{},{2};{1},{}]");
}

TEST(Tridendriform, UnitOperandRejected) {
  EXPECT_THROW(tri_prec(SetPackedMatrix(), sm("[{1}]")), std::invalid_argument);
  EXPECT_THROW(tri_succ(sm("[{1}]"), SetPackedMatrix()), std::invalid_argument);
}

TEST(Tridendriform, PartsFollowLowestRow) {
  auto all = nonempty_upto(3);
  for (auto &p : all)
    for (auto &q : all) {
      if (p.ground_size() + q.ground_size() > 4)
        continue;
      for (auto part : {TriPart::prec, TriPart::circ, TriPart::succ})
        for (auto &[r, c] : tri_part(p, q, part))
          ASSERT_EQ(lowest_row_owner(r, p.ground_size()), part);
    }
}

TEST(Tridendriform, SevenRelations) {
  for (auto &r : check_tridendriform(4)) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.counterexample;
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(Tridendriform, RandomGradeOneOneTwo) {
  std::mt19937 rng(7);
  auto twos = set_packed_matrices(2);
  auto x = sm("[{1}]"), y = sm("[{1}]");
  for (int t = 0; t < 5; ++t) {
    auto z = twos[rng() % twos.size()];
    auto lhs = tri_part(tri_succ(x, y), SMQ(z), TriPart::circ);
    auto rhs = tri_part(SMQ(x), tri_circ(y, z), TriPart::succ);
    EXPECT_EQ(lhs, rhs) << to_text(z);
  }
}

TEST(Splitting, Completeness) {
  for (auto &r : check_splitting(4))
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.counterexample;
}

// 6 sits in the bottom block of the only proper cut, so the term belongs to
// the right half.
TEST(Splitting, CoproductHalvesExample) {
  auto a = sm("[{2 4},{1};{6},{3 5}]");
  EXPECT_TRUE(delta_ll(a).empty());
  EXPECT_EQ(to_text(delta_gg(a)), "[{2 3},{1}] ⊗ [{3},{1 2}]");
  EXPECT_EQ(delta_gg(a), reduced_coproduct(a));
}

TEST(Splitting, CoproductHalvesSmall) {
  EXPECT_TRUE(delta_gg(sm("[{1 3},{2}]")).empty());
  EXPECT_TRUE(delta_ll(sm("[{1 3},{2}]")).empty());
  auto stacked = sm("[{1};{2}]");
  EXPECT_TRUE(delta_ll(stacked).empty());
  EXPECT_EQ(to_text(delta_gg(stacked)), "[{1}] ⊗ [{1}]");
  EXPECT_EQ(to_text(delta_ll(sm("[{2};{1}]"))), "[{1}] ⊗ [{1}]");
}

TEST(Bidendriform, HalfProductRelation) {
  auto r = check_bidendriform(3);
  EXPECT_TRUE(r[0].ok()) << r[0].counterexample;
  EXPECT_GT(r[0].checked, 0u);
}

TEST(Bidendriform, FullAxiomList) {
  for (auto &r : check_bidendriform(4))
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.counterexample;
}

// The three products descend to SMCSym: column relabeling of the operands
// does not change the projected parts.
TEST(Stability, SMCSym) {
  auto all = nonempty_upto(3);
  for (auto &p : all)
    for (auto &q : all) {
      if (p.ground_size() + q.ground_size() > 3)
        continue;
      for (auto part : {TriPart::prec, TriPart::circ, TriPart::succ}) {
        auto ref = smc_project(tri_part(p, q, part));
        for (auto &p2 : col_orbit(p))
          for (auto &q2 : col_orbit(q))
            ASSERT_EQ(smc_project(tri_part(p2, q2, part)), ref);
      }
    }
}

// On MQSym the parts of a product of SA matrices stay in SA, and descend
// to MCSym.
TEST(Stability, MQSymAndMCSym) {
  std::vector<IntPackedMatrix> all;
  for (int n = 1; n <= 3; ++n)
    for (auto &m : int_packed_matrices(n))
      all.push_back(m);
  for (auto &a : all)
    for (auto &b : all) {
      if (a.degree() + b.degree() > 3)
        continue;
      for (auto part : {TriPart::prec, TriPart::circ, TriPart::succ}) {
        auto x = tri_part(mq_embed(a), mq_embed(b), part);
        MQ pulled;
        ASSERT_NO_THROW(pulled = mq_pullback(x));
        auto ref = mc_project(pulled);
        for (auto &a2 : col_permutations(a))
          for (auto &b2 : col_permutations(b))
            ASSERT_EQ(mc_project(mq_pullback(
                          tri_part(mq_embed(a2), mq_embed(b2), part))),
                      ref);
      }
    }
}
