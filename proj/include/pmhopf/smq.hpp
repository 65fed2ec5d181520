#pragma once

// SMQSym: augmented shuffle product, row-cut coproduct, bi-word realization
// and the map to WQSym (x) WQSym*.

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "pmhopf/combinat.hpp"
#include "pmhopf/freemodule.hpp"
#include "pmhopf/matrices.hpp"
#include "pmhopf/wordalg.hpp"

namespace pmhopf {

using SMQ = Element<SetPackedMatrix>;
using SMQTensor = Tensor<SetPackedMatrix>;

/// Visits each term of the augmented shuffle of p and q together with the
/// row each p-row and q-row landed in.
inline void augmented_shuffle(
    const SetPackedMatrix &p, const SetPackedMatrix &q,
    const std::function<void(const SetPackedMatrix &, std::span<const int>,
                             std::span<const int>)> &visit) {
  const auto &u = p.row_word().letters();
  const auto &u2 = q.row_word().letters();
  std::vector<int> cols = p.col_word().letters();
  for (int x : q.col_word().letters())
    cols.push_back(x + p.width());
  const PackedWord col_word(cols);
  quasi_shuffles(p.height(), q.height(),
                 [&](std::span<const int> lp, std::span<const int> lq, int) {
                   std::vector<int> rows;
                   rows.reserve(u.size() + u2.size());
                   for (int x : u)
                     rows.push_back(lp[x - 1]);
                   for (int x : u2)
                     rows.push_back(lq[x - 1]);
                   visit(SetPackedMatrix(PackedWord(std::move(rows)), col_word),
                         lp, lq);
                 });
}

inline SMQ smq_product(const SetPackedMatrix &p, const SetPackedMatrix &q) {
  SMQ r;
  augmented_shuffle(p, q,
                    [&](const SetPackedMatrix &m, std::span<const int>,
                        std::span<const int>) { r.add(m, QPoly(1)); });
  return r;
}

/// Rows 1..k (top) and rows k+1..h (bottom), each with empty columns erased
/// and entries standardized.
inline std::pair<SetPackedMatrix, SetPackedMatrix>
smq_cut(const SetPackedMatrix &a, int k) {
  std::vector<int> tr, tc, br, bc;
  const auto &u = a.row_word().letters();
  const auto &v = a.col_word().letters();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] <= k) {
      tr.push_back(u[i]);
      tc.push_back(v[i]);
    } else {
      br.push_back(u[i] - k);
      bc.push_back(v[i]);
    }
  }
  return {SetPackedMatrix(PackedWord(std::move(tr)), pack(tc)),
          SetPackedMatrix(PackedWord(std::move(br)), pack(bc))};
}

inline SMQTensor smq_coproduct(const SetPackedMatrix &a) {
  SMQTensor r;
  for (int k = 0; k <= a.height(); ++k)
    r.add(smq_cut(a, k), QPoly(1));
  return r;
}

inline SMQ smq_product(const SMQ &x, const SMQ &y) {
  return apply_bilinear(
      [](const SetPackedMatrix &a, const SetPackedMatrix &b) {
        return smq_product(a, b);
      },
      x, y);
}

inline SMQTensor smq_coproduct(const SMQ &x) {
  return apply_linear(
      [](const SetPackedMatrix &a) { return smq_coproduct(a); }, x);
}

/// phi(M) = WQ_u (x) F^v for the bi-word (u|v) of M.
inline std::pair<WQIndex, FIndex> phi(const SetPackedMatrix &m) {
  return {WQIndex{m.row_word()}, FIndex{m.col_word()}};
}

inline SetPackedMatrix phi_inverse(const WQIndex &u, const FIndex &v) {
  return SetPackedMatrix(u.word, v.word);
}

// Polynomial realization over a finite bi-alphabet.

namespace detail {

/// Words over [1,alphabet] whose packing is w: one per increasing map
/// [1,max w] -> [1,alphabet].
inline std::vector<std::vector<int>> unpackings(const PackedWord &w,
                                                int alphabet) {
  std::vector<std::vector<int>> out;
  std::vector<int> image(w.max());
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i == w.max()) {
      std::vector<int> word;
      for (int x : w.letters())
        word.push_back(image[x - 1]);
      out.push_back(std::move(word));
      return;
    }
    for (int a = lo; a <= alphabet - (w.max() - i - 1); ++a) {
      image[i] = a;
      rec(i + 1, a + 1);
    }
  };
  rec(0, 1);
  return out;
}

} // namespace detail

/// Sum of every bi-word with top letters in [1,rows] and bottom letters in
/// [1,cols] whose bi-packing is the bi-word of m.
inline Element<BiWord> realize(const SetPackedMatrix &m, int rows, int cols) {
  Element<BiWord> r;
  for (auto &t : detail::unpackings(m.row_word(), rows))
    for (auto &b : detail::unpackings(m.col_word(), cols))
      r.add(BiWord(t, b), QPoly(1));
  return r;
}

inline Element<BiWord> realize(const SMQ &x, int rows, int cols) {
  return apply_linear(
      [&](const SetPackedMatrix &m) { return realize(m, rows, cols); }, x);
}

/// Product of realized polynomials (concatenation of bi-letters with the
/// bottom alphabet of the right factor shifted), truncated to bottom
/// letters <= cols.
inline Element<BiWord> star_truncated(const Element<BiWord> &x,
                                      const Element<BiWord> &y, int cols) {
  Element<BiWord> r;
  for (const auto &[a, ca] : x)
    for (const auto &[b, cb] : y) {
      auto s = star(a, b);
      if (std::all_of(s.bottom.begin(), s.bottom.end(),
                      [&](int l) { return l <= cols; }))
        r.add(s, ca * cb);
    }
  return r;
}

} // namespace pmhopf
