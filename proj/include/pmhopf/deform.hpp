#pragma once

// Two-parameter deformations: the (qc, qs) product on words of
// multidegrees, its shifted form, diagram juxtaposition, and the LD basis
// on integer packed matrices.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmhopf/combinat.hpp"
#include "pmhopf/freemodule.hpp"
#include "pmhopf/matrices.hpp"

namespace pmhopf {

/// Word whose letters are nonzero multidegrees.
struct MultidegreeWord {
  std::vector<Multidegree> letters;

  MultidegreeWord() = default;
  explicit MultidegreeWord(std::vector<Multidegree> l) : letters(std::move(l)) {
    for (auto &a : letters)
      if (a.is_zero())
        throw std::invalid_argument("multidegree word: zero letter");
  }
  bool empty() const { return letters.empty(); }
  int weight() const {
    int w = 0;
    for (auto &a : letters)
      w += a.weight();
    return w;
  }
  /// Longest letter, i.e. the number of white spots of the diagram.
  int spots() const {
    int p = 0;
    for (auto &a : letters)
      p = std::max(p, a.length());
    return p;
  }
  friend auto operator<=>(const MultidegreeWord &,
                          const MultidegreeWord &) = default;
};

inline std::string to_text(const MultidegreeWord &w) {
  if (w.empty())
    return "ε";
  std::string s;
  for (auto &a : w.letters)
    s += to_text(a);
  return s;
}

/// "(2)(1,3,1)(0,1)"; "ε" or "e" is the empty word.
inline MultidegreeWord parse_multidegree_word(std::string_view text) {
  auto t = detail::trim(text);
  if (t == "e" || t == "ε" || t.empty())
    return {};
  std::vector<Multidegree> letters;
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] != '(')
      throw ParseError("multidegree word: expected '(' at position " +
                       std::to_string(pos + 1));
    auto close = t.find(')', pos);
    if (close == std::string::npos)
      throw ParseError("multidegree word: unclosed '('");
    std::vector<int> coords;
    std::string inner = t.substr(pos + 1, close - pos - 1);
    std::size_t i = 0;
    while (i < inner.size()) {
      if (inner[i] == ',' || inner[i] == ' ') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(inner[i])))
        throw ParseError("multidegree word: bad character '" +
                         std::string(1, inner[i]) + "'");
      int v = 0;
      while (i < inner.size() && std::isdigit(static_cast<unsigned char>(inner[i])))
        v = v * 10 + (inner[i++] - '0');
      coords.push_back(v);
    }
    Multidegree a(coords);
    if (a.is_zero())
      throw ParseError("multidegree word: letter " +
                       std::to_string(letters.size() + 1) + " is zero");
    letters.push_back(a);
    pos = close + 1;
  }
  return MultidegreeWord(std::move(letters));
}

namespace detail {

using WordSpan = std::span<const Multidegree>;

inline int weight(WordSpan w) {
  int s = 0;
  for (auto &a : w)
    s += a.weight();
  return s;
}

inline Element<MultidegreeWord> prepend(const Multidegree &a,
                                        const Element<MultidegreeWord> &x) {
  Element<MultidegreeWord> r;
  for (const auto &[w, c] : x) {
    std::vector<Multidegree> l{a};
    l.insert(l.end(), w.letters.begin(), w.letters.end());
    r.add(MultidegreeWord(std::move(l)), c);
  }
  return r;
}

} // namespace detail

/// alpha u * beta v = alpha (u * beta v)
///   + qc^{|alpha u| |beta|} beta (alpha u * v)
///   + qs^{|alpha| |beta|} qc^{|u| |beta|} (alpha + beta)(u * v)
///
/// Keeps every intermediate product, so one instance can be reused across
/// many calls. Not thread-safe.
class MldiagMultiplier {
public:
  Element<MultidegreeWord> operator()(const MultidegreeWord &u,
                                      const MultidegreeWord &v) {
    return run(u.letters, v.letters);
  }
  Element<MultidegreeWord> operator()(const Element<MultidegreeWord> &x,
                                      const Element<MultidegreeWord> &y) {
    return apply_bilinear(
        [this](const MultidegreeWord &a, const MultidegreeWord &b) {
          return run(a.letters, b.letters);
        },
        x, y);
  }

private:
  using WordSpan = detail::WordSpan;

  const Element<MultidegreeWord> &run(WordSpan u, WordSpan v) {
    auto key = std::pair{std::vector<Multidegree>(u.begin(), u.end()),
                         std::vector<Multidegree>(v.begin(), v.end())};
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    Element<MultidegreeWord> r;
    if (u.empty() || v.empty()) {
      r = Element<MultidegreeWord>(
          MultidegreeWord(u.empty() ? key.second : key.first));
    } else {
      const Multidegree &alpha = u.front(), &beta = v.front();
      WordSpan u1 = u.subspan(1), v1 = v.subspan(1);
      const int a = alpha.weight(), b = beta.weight();
      r = detail::prepend(alpha, run(u1, v));
      r += QPoly::qc(detail::weight(u) * b) * detail::prepend(beta, run(u, v1));
      r += QPoly::monomial(1, detail::weight(u1) * b, a * b) *
           detail::prepend(alpha + beta, run(u1, v1));
    }
    return memo_.emplace(std::move(key), std::move(r)).first->second;
  }

  std::map<std::pair<std::vector<Multidegree>, std::vector<Multidegree>>,
           Element<MultidegreeWord>>
      memo_;
};

inline Element<MultidegreeWord> mldiag_product(const MultidegreeWord &u,
                                               const MultidegreeWord &v) {
  return MldiagMultiplier()(u, v);
}

inline Element<MultidegreeWord> mldiag_product(const Element<MultidegreeWord> &x,
                                               const Element<MultidegreeWord> &y) {
  return MldiagMultiplier()(x, y);
}

/// Prepends n zero coordinates to every letter.
inline MultidegreeWord shift_word(const MultidegreeWord &u, int n) {
  if (n < 0)
    throw std::invalid_argument("shift: negative amount");
  std::vector<Multidegree> out;
  for (auto &a : u.letters) {
    std::vector<int> c(n, 0);
    c.insert(c.end(), a.coords().begin(), a.coords().end());
    out.emplace_back(std::move(c));
  }
  return MultidegreeWord(std::move(out));
}

/// u *s v = u * s_p(v), p the number of white spots of u.
inline Element<MultidegreeWord> shifted_product(const MultidegreeWord &u,
                                                const MultidegreeWord &v) {
  return mldiag_product(u, shift_word(v, u.spots()));
}

/// Block-diagonal juxtaposition.
inline LabelledDiagram ldiag_product(const LabelledDiagram &d1,
                                     const LabelledDiagram &d2) {
  LabelledDiagram r;
  r.white = d1.white + d2.white;
  r.black = d1.black + d2.black;
  r.weights.assign(static_cast<std::size_t>(r.white) * r.black, 0);
  for (int i = 0; i < d1.white; ++i)
    for (int j = 0; j < d1.black; ++j)
      r.weights[i * r.black + j] = d1.weight(i, j);
  for (int i = 0; i < d2.white; ++i)
    for (int j = 0; j < d2.black; ++j)
      r.weights[(d1.white + i) * r.black + d1.black + j] = d2.weight(i, j);
  return r;
}

/// How the qc exponent pairs rows r < r'.
enum class LdOrientation {
  right_then_left, // right block of r with left block of r'
  left_then_right, // left block of r with right block of r'
};

/// Row stuffle of A (left block of columns) and B (right block), each term
/// weighted qs^x qc^y with x = sum_r L(r) R(r) and y pairing earlier rows
/// with later rows per the orientation.
inline Element<IntPackedMatrix>
ld_product(const IntPackedMatrix &a, const IntPackedMatrix &b,
           LdOrientation orient = LdOrientation::right_then_left) {
  const int q = a.cols() + b.cols();
  Element<IntPackedMatrix> r;
  quasi_shuffles(
      a.rows(), b.rows(),
      [&](std::span<const int> la, std::span<const int> lb, int rows) {
        std::vector<int> d(static_cast<std::size_t>(rows) * q, 0);
        std::vector<int> left(rows, 0), right(rows, 0);
        for (int i = 0; i < a.rows(); ++i)
          for (int j = 0; j < a.cols(); ++j) {
            d[(la[i] - 1) * q + j] = a.at(i, j);
            left[la[i] - 1] += a.at(i, j);
          }
        for (int i = 0; i < b.rows(); ++i)
          for (int j = 0; j < b.cols(); ++j) {
            d[(lb[i] - 1) * q + a.cols() + j] = b.at(i, j);
            right[lb[i] - 1] += b.at(i, j);
          }
        int x = 0, y = 0;
        for (int s = 0; s < rows; ++s) {
          x += left[s] * right[s];
          for (int t = s + 1; t < rows; ++t)
            y += orient == LdOrientation::right_then_left ? right[s] * left[t]
                                                          : left[s] * right[t];
        }
        r.add(IntPackedMatrix(rows, q, std::move(d)), QPoly::monomial(1, y, x));
      });
  return r;
}

inline Element<IntPackedMatrix>
ld_product(const Element<IntPackedMatrix> &x, const Element<IntPackedMatrix> &y,
           LdOrientation orient = LdOrientation::right_then_left) {
  return apply_bilinear(
      [&](const IntPackedMatrix &a, const IntPackedMatrix &b) {
        return ld_product(a, b, orient);
      },
      x, y);
}

} // namespace pmhopf
