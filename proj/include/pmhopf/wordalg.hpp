#pragma once

// WQSym on the WQ basis, WSym on the W basis, and the dual F basis of
// WQSym*, all given by structure constants on packed words.

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "pmhopf/combinat.hpp"
#include "pmhopf/freemodule.hpp"

namespace pmhopf {

struct WQIndex {
  PackedWord word;
  friend auto operator<=>(const WQIndex &, const WQIndex &) = default;
};

struct FIndex {
  PackedWord word;
  friend auto operator<=>(const FIndex &, const FIndex &) = default;
};

struct WIndex {
  SetPartition partition;
  friend auto operator<=>(const WIndex &, const WIndex &) = default;
};

inline std::string to_text(const WQIndex &i) {
  return "WQ[" + to_text(i.word) + "]";
}
inline std::string to_text(const FIndex &i) {
  return "F[" + to_text(i.word) + "]";
}
inline std::string to_text(const WIndex &i) {
  return "W" + to_text(i.partition);
}

inline Element<WQIndex> wq_product(const PackedWord &u, const PackedWord &v) {
  Element<WQIndex> r;
  for (const auto &[w, c] : convolution(u, v))
    r.add({w}, QPoly(BigInt(c)));
  return r;
}

/// Restriction of a packed word to the positions holding letters in [lo,hi],
/// relabeled by subtracting lo-1.
inline PackedWord restrict_letters(const PackedWord &w, int lo, int hi) {
  std::vector<int> r;
  for (int x : w.letters())
    if (x >= lo && x <= hi)
      r.push_back(x - lo + 1);
  return PackedWord(std::move(r));
}

/// Sum over (u, v) with w in the shifted shuffle of u and v. Such a pair is
/// determined by a cut value k: u carries the letters <= k, v the rest.
inline Tensor<WQIndex> wq_coproduct(const PackedWord &w) {
  Tensor<WQIndex> r;
  for (int k = 0; k <= w.max(); ++k)
    r.add({WQIndex{restrict_letters(w, 1, k)},
           WQIndex{restrict_letters(w, k + 1, w.max())}},
          QPoly(1));
  return r;
}

/// W_pi as a sum of WQ_u over all u with sp(u) = pi.
inline Element<WQIndex> w_embed(const SetPartition &pi) {
  std::vector<std::size_t> order(pi.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  Element<WQIndex> r;
  do {
    std::vector<std::vector<int>> parts;
    for (auto i : order)
      parts.push_back(pi.blocks()[i]);
    r.add({setcomp_to_word(SetComposition(parts))}, QPoly(1));
  } while (std::next_permutation(order.begin(), order.end()));
  return r;
}

inline WIndex w_key(const WQIndex &i) {
  return {sp(word_to_setcomp(i.word))};
}

inline Element<WIndex> w_product(const SetPartition &a,
                                 const SetPartition &b) {
  auto big = apply_bilinear(
      [](const WQIndex &x, const WQIndex &y) {
        return wq_product(x.word, y.word);
      },
      w_embed(a), w_embed(b));
  return collect<WIndex>(big, w_key,
                         [](const WIndex &k) { return w_embed(k.partition); });
}

inline Tensor<WIndex> w_coproduct(const SetPartition &pi) {
  auto big = apply_linear(
      [](const WQIndex &x) { return wq_coproduct(x.word); }, w_embed(pi));
  return collect<std::pair<WIndex, WIndex>>(
      big,
      [](const std::pair<WQIndex, WQIndex> &t) {
        return std::pair{w_key(t.first), w_key(t.second)};
      },
      [](const std::pair<WIndex, WIndex> &k) {
        return tensor_product(w_embed(k.first.partition),
                              w_embed(k.second.partition));
      });
}

/// F^u F^v = F^{u . v[max u]}.
inline FIndex f_product(const PackedWord &u, const PackedWord &v) {
  return {shifted_concat(u, v)};
}

/// Dual of the WQ product: deconcatenation followed by packing.
inline Tensor<FIndex> f_coproduct(const PackedWord &w) {
  Tensor<FIndex> r;
  const auto &l = w.letters();
  for (std::size_t i = 0; i <= l.size(); ++i)
    r.add({FIndex{pack(std::vector<int>(l.begin(), l.begin() + i))},
           FIndex{pack(std::vector<int>(l.begin() + i, l.end()))}},
          QPoly(1));
  return r;
}

} // namespace pmhopf
