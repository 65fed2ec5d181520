#pragma once

// Sub- and quotient algebras of SMQSym and MQSym: SMRSym, SMCSym, SMSym,
// MQSym (through gimel), MRSym, MCSym, MSym, and the maps between them.
//
// Subalgebras are computed by expanding into the ambient algebra and
// collecting orbit sums back; quotients by lifting to a canonical
// representative and projecting the result.

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "pmhopf/combinat.hpp"
#include "pmhopf/freemodule.hpp"
#include "pmhopf/matrices.hpp"
#include "pmhopf/report.hpp"
#include "pmhopf/smq.hpp"

namespace pmhopf {

/// Row set partition and column set composition.
struct SMRIndex {
  SetPartition rows;
  SetComposition cols;
  friend auto operator<=>(const SMRIndex &, const SMRIndex &) = default;
};

/// Row set composition and column set partition.
struct SMCIndex {
  SetComposition rows;
  SetPartition cols;
  friend auto operator<=>(const SMCIndex &, const SMCIndex &) = default;
};

struct SMIndex {
  SetPartition rows;
  SetPartition cols;
  friend auto operator<=>(const SMIndex &, const SMIndex &) = default;
};

/// Integer matrices up to row permutations (canonical representative).
struct MRIndex {
  IntPackedMatrix m;
  friend auto operator<=>(const MRIndex &, const MRIndex &) = default;
};

/// Up to column permutations.
struct MCIndex {
  IntPackedMatrix m;
  friend auto operator<=>(const MCIndex &, const MCIndex &) = default;
};

/// Up to row and column permutations.
struct MIndex {
  IntPackedMatrix m;
  friend auto operator<=>(const MIndex &, const MIndex &) = default;
};

inline std::string to_text(const SMRIndex &i) {
  return "(" + to_text(i.rows) + "|" + to_text(i.cols) + ")";
}
inline std::string to_text(const SMCIndex &i) {
  return "(" + to_text(i.rows) + "|" + to_text(i.cols) + ")";
}
inline std::string to_text(const SMIndex &i) {
  return "(" + to_text(i.rows) + "|" + to_text(i.cols) + ")";
}
inline std::string to_text(const MRIndex &i) { return to_text(i.m); }
inline std::string to_text(const MCIndex &i) { return to_text(i.m); }
inline std::string to_text(const MIndex &i) { return to_text(i.m); }

inline MRIndex mr_index(const IntPackedMatrix &a) {
  return {canonical_row_class(a)};
}
inline MCIndex mc_index(const IntPackedMatrix &a) {
  return {canonical_col_class(a)};
}
inline MIndex m_index(const IntPackedMatrix &a) {
  return {canonical_rowcol_class(a)};
}

namespace detail {

/// Blocks of pi in every order.
inline std::vector<SetComposition> orderings(const SetPartition &pi) {
  std::vector<std::size_t> order(pi.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::vector<SetComposition> out;
  do {
    std::vector<std::vector<int>> parts;
    for (auto i : order)
      parts.push_back(pi.blocks()[i]);
    out.emplace_back(std::move(parts));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

/// Blocks listed by increasing minimum.
inline SetComposition min_order(const SetPartition &pi) {
  return SetComposition(pi.blocks());
}

template <class K, class B, class KeyFn, class EmbedFn>
Tensor<K> collect_tensor(const Tensor<B> &t, KeyFn key, EmbedFn embed) {
  return collect<std::pair<K, K>>(
      t,
      [&](const std::pair<B, B> &p) {
        return std::pair{key(p.first), key(p.second)};
      },
      [&](const std::pair<K, K> &k) {
        return tensor_product(embed(k.first), embed(k.second));
      });
}

template <class K, class B, class Proj>
Element<K> project(const Element<B> &x, Proj proj) {
  Element<K> r;
  for (const auto &[b, c] : x)
    r.add(proj(b), c);
  return r;
}

template <class K, class B, class Proj>
Tensor<K> project_tensor(const Tensor<B> &t, Proj proj) {
  Tensor<K> r;
  for (const auto &[p, c] : t)
    r.add({proj(p.first), proj(p.second)}, c);
  return r;
}

} // namespace detail

// ---- SMRSym ⊂ SMQSym -----------------------------------------------------

inline SMRIndex smr_key(const SetPackedMatrix &m) {
  return {sp(word_to_setcomp(m.row_word())), word_to_setcomp(m.col_word())};
}

inline SMQ smr_expand(const SMRIndex &i) {
  SMQ r;
  for (auto &rows : detail::orderings(i.rows))
    r.add(setcomp_pair_to_setmatrix(rows, i.cols), QPoly(1));
  return r;
}

inline SMQ smr_expand(const Element<SMRIndex> &x) {
  return apply_linear([](const SMRIndex &i) { return smr_expand(i); }, x);
}

inline Element<SMRIndex> smr_collect(const SMQ &x) {
  return collect<SMRIndex>(x, smr_key,
                           [](const SMRIndex &k) { return smr_expand(k); });
}

inline Element<SMRIndex> smr_product(const SMRIndex &a, const SMRIndex &b) {
  return smr_collect(smq_product(smr_expand(a), smr_expand(b)));
}

inline Tensor<SMRIndex> smr_coproduct(const SMRIndex &a) {
  return detail::collect_tensor<SMRIndex>(
      smq_coproduct(smr_expand(a)), smr_key,
      [](const SMRIndex &k) { return smr_expand(k); });
}

// ---- SMCSym = SMQSym / (column permutations) ------------------------------

inline SMCIndex smc_project(const SetPackedMatrix &m) {
  return {word_to_setcomp(m.row_word()), sp(word_to_setcomp(m.col_word()))};
}

inline Element<SMCIndex> smc_project(const SMQ &x) {
  return detail::project<SMCIndex>(
      x, [](const SetPackedMatrix &m) { return smc_project(m); });
}

/// Columns ordered by their minimum entry.
inline SetPackedMatrix smc_lift(const SMCIndex &i) {
  return setcomp_pair_to_setmatrix(i.rows, detail::min_order(i.cols));
}

inline Element<SMCIndex> smc_product(const SMCIndex &a, const SMCIndex &b) {
  return smc_project(smq_product(smc_lift(a), smc_lift(b)));
}

inline Tensor<SMCIndex> smc_coproduct(const SMCIndex &a) {
  return detail::project_tensor<SMCIndex>(
      smq_coproduct(smc_lift(a)),
      [](const SetPackedMatrix &m) { return smc_project(m); });
}

// ---- SMSym ⊂ SMCSym -------------------------------------------------------

inline SMIndex sm_key(const SMCIndex &i) { return {sp(i.rows), i.cols}; }

inline Element<SMCIndex> sm_expand(const SMIndex &i) {
  Element<SMCIndex> r;
  for (auto &rows : detail::orderings(i.rows))
    r.add({rows, i.cols}, QPoly(1));
  return r;
}

inline Element<SMIndex> sm_collect(const Element<SMCIndex> &x) {
  return collect<SMIndex>(x, sm_key,
                          [](const SMIndex &k) { return sm_expand(k); });
}

inline Element<SMIndex> sm_product(const SMIndex &a, const SMIndex &b) {
  auto big = apply_bilinear(
      [](const SMCIndex &x, const SMCIndex &y) { return smc_product(x, y); },
      sm_expand(a), sm_expand(b));
  return sm_collect(big);
}

inline Tensor<SMIndex> sm_coproduct(const SMIndex &a) {
  auto big = apply_linear([](const SMCIndex &x) { return smc_coproduct(x); },
                          sm_expand(a));
  return detail::collect_tensor<SMIndex>(
      big, sm_key, [](const SMIndex &k) { return sm_expand(k); });
}

/// Quotient map SMRSym -> SMSym (forget the column order).
inline SMIndex smr_to_sm(const SMRIndex &i) { return {i.rows, sp(i.cols)}; }

// ---- MQSym inside SMQSym via gimel ---------------------------------------

using MQ = Element<IntPackedMatrix>;

inline SetPackedMatrix mq_embed(const IntPackedMatrix &a) {
  return gimel_inverse(a);
}

inline MQ mq_pullback(const SMQ &x) {
  MQ r;
  for (const auto &[m, c] : x) {
    if (!is_sa(m))
      throw CollectionError("MQSym: " + to_text(m) + " is not in SA");
    r.add(gimel(m), c);
  }
  return r;
}

inline MQ mq_product(const IntPackedMatrix &a, const IntPackedMatrix &b) {
  return mq_pullback(smq_product(mq_embed(a), mq_embed(b)));
}

inline Tensor<IntPackedMatrix> mq_coproduct(const IntPackedMatrix &a) {
  Tensor<IntPackedMatrix> r;
  for (const auto &[t, c] : smq_coproduct(mq_embed(a))) {
    if (!is_sa(t.first) || !is_sa(t.second))
      throw CollectionError("MQSym: coproduct leaves SA");
    r.add({gimel(t.first), gimel(t.second)}, c);
  }
  return r;
}

inline MQ mq_product(const MQ &x, const MQ &y) {
  return apply_bilinear(
      [](const IntPackedMatrix &a, const IntPackedMatrix &b) {
        return mq_product(a, b);
      },
      x, y);
}

// ---- MRSym ⊂ MQSym --------------------------------------------------------

inline MQ mr_expand(const MRIndex &i) {
  MQ r;
  for (auto &b : row_permutations(i.m))
    r.add(b, QPoly(1));
  return r;
}

inline Element<MRIndex> mr_collect(const MQ &x) {
  return collect<MRIndex>(x, mr_index,
                          [](const MRIndex &k) { return mr_expand(k); });
}

inline Element<MRIndex> mr_product(const MRIndex &a, const MRIndex &b) {
  return mr_collect(mq_product(mr_expand(a), mr_expand(b)));
}

inline Tensor<MRIndex> mr_coproduct(const MRIndex &a) {
  auto big = apply_linear(
      [](const IntPackedMatrix &m) { return mq_coproduct(m); }, mr_expand(a));
  return detail::collect_tensor<MRIndex>(
      big, mr_index, [](const MRIndex &k) { return mr_expand(k); });
}

// ---- MCSym = MQSym / (column permutations) -------------------------------

inline Element<MCIndex> mc_project(const MQ &x) {
  return detail::project<MCIndex>(x, mc_index);
}

inline Element<MCIndex> mc_product(const MCIndex &a, const MCIndex &b) {
  return mc_project(mq_product(a.m, b.m));
}

inline Tensor<MCIndex> mc_coproduct(const MCIndex &a) {
  return detail::project_tensor<MCIndex>(mq_coproduct(a.m), mc_index);
}

// ---- MSym ⊂ MCSym ---------------------------------------------------------

/// Sum over the distinct row permutations B of A of the class of B.
inline Element<MCIndex> m_expand(const MIndex &i) {
  Element<MCIndex> r;
  for (auto &b : row_permutations(i.m))
    r.add(mc_index(b), QPoly(1));
  return r;
}

inline Element<MIndex> m_collect(const Element<MCIndex> &x) {
  return collect<MIndex>(
      x, [](const MCIndex &k) { return m_index(k.m); },
      [](const MIndex &k) { return m_expand(k); });
}

inline Element<MIndex> m_product(const MIndex &a, const MIndex &b) {
  auto big = apply_bilinear(
      [](const MCIndex &x, const MCIndex &y) { return mc_product(x, y); },
      m_expand(a), m_expand(b));
  return m_collect(big);
}

inline Tensor<MIndex> m_coproduct(const MIndex &a) {
  auto big = apply_linear([](const MCIndex &x) { return mc_coproduct(x); },
                          m_expand(a));
  return detail::collect_tensor<MIndex>(
      big, [](const MCIndex &k) { return m_index(k.m); },
      [](const MIndex &k) { return m_expand(k); });
}

/// Quotient map MRSym -> MSym.
inline MIndex mr_to_m(const MRIndex &i) { return m_index(i.m); }

// ---- Integer-to-set embeddings (columns filled by consecutive intervals) --

inline SMRIndex mr_to_smr(const MRIndex &i) {
  return smr_key(gimel_inverse(i.m));
}
inline SMCIndex mc_to_smc(const MCIndex &i) {
  return smc_project(gimel_inverse(i.m));
}
inline SMIndex m_to_sm(const MIndex &i) {
  return sm_key(smc_project(gimel_inverse(i.m)));
}

// ---- Commutativity of the eight-algebra diagram ---------------------------

namespace detail {

template <class Index, class F, class G>
void compare_paths(CheckReport &rep, const std::vector<Index> &basis, F f,
                   G g) {
  for (const auto &i : basis)
    rep.record(to_text(i), f(i), g(i));
}

template <class Index, class Proj>
std::vector<Index> distinct_keys(const std::vector<IntPackedMatrix> &all,
                                 Proj proj) {
  std::vector<Index> out;
  for (auto &a : all)
    out.push_back(proj(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace detail

/// Compares both composites around each of the six faces of the cube, on
/// every basis element of grade <= max_grade.
inline std::vector<CheckReport> diagram_check(int max_grade) {
  std::vector<SetPackedMatrix> smq_basis;
  std::vector<IntPackedMatrix> mq_basis;
  for (int n = 0; n <= max_grade; ++n) {
    auto s = set_packed_matrices(n);
    smq_basis.insert(smq_basis.end(), s.begin(), s.end());
    auto m = int_packed_matrices(n);
    mq_basis.insert(mq_basis.end(), m.begin(), m.end());
  }
  std::vector<SMRIndex> smr_basis;
  for (auto &m : smq_basis)
    smr_basis.push_back(smr_key(m));
  std::sort(smr_basis.begin(), smr_basis.end());
  smr_basis.erase(std::unique(smr_basis.begin(), smr_basis.end()),
                  smr_basis.end());
  auto mr_basis = detail::distinct_keys<MRIndex>(mq_basis, mr_index);
  auto m_basis = detail::distinct_keys<MIndex>(mq_basis, m_index);

  auto single = [](auto k) { return Element<decltype(k)>(k); };
  std::vector<CheckReport> out;

  CheckReport left{"SMRSym->SMQSym->SMCSym = SMRSym->SMSym->SMCSym"};
  detail::compare_paths(
      left, smr_basis,
      [](const SMRIndex &i) { return smc_project(smr_expand(i)); },
      [](const SMRIndex &i) { return sm_expand(smr_to_sm(i)); });
  out.push_back(left);

  CheckReport right{"MRSym->MQSym->MCSym = MRSym->MSym->MCSym"};
  detail::compare_paths(
      right, mr_basis,
      [](const MRIndex &i) { return mc_project(mr_expand(i)); },
      [](const MRIndex &i) { return m_expand(mr_to_m(i)); });
  out.push_back(right);

  CheckReport top{"MRSym->MQSym->SMQSym = MRSym->SMRSym->SMQSym"};
  detail::compare_paths(
      top, mr_basis,
      [](const MRIndex &i) {
        return detail::project<SetPackedMatrix>(mr_expand(i), mq_embed);
      },
      [](const MRIndex &i) { return smr_expand(mr_to_smr(i)); });
  out.push_back(top);

  CheckReport front{"MQSym->SMQSym->SMCSym = MQSym->MCSym->SMCSym"};
  detail::compare_paths(
      front, mq_basis,
      [&](const IntPackedMatrix &a) { return single(smc_project(mq_embed(a))); },
      [&](const IntPackedMatrix &a) { return single(mc_to_smc(mc_index(a))); });
  out.push_back(front);

  CheckReport back{"MRSym->SMRSym->SMSym = MRSym->MSym->SMSym"};
  detail::compare_paths(
      back, mr_basis,
      [&](const MRIndex &i) { return single(smr_to_sm(mr_to_smr(i))); },
      [&](const MRIndex &i) { return single(m_to_sm(mr_to_m(i))); });
  out.push_back(back);

  CheckReport bottom{"MSym->MCSym->SMCSym = MSym->SMSym->SMCSym"};
  detail::compare_paths(
      bottom, m_basis,
      [](const MIndex &i) {
        return detail::project<SMCIndex>(m_expand(i), mc_to_smc);
      },
      [](const MIndex &i) { return sm_expand(m_to_sm(i)); });
  out.push_back(bottom);

  return out;
}

} // namespace pmhopf
