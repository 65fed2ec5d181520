#pragma once

// Packed words, set compositions, set partitions, multidegrees, and the word
// operations shared by every algebra in the library. Letters and set elements
// are 1-based throughout.

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <map>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "pmhopf/freemodule.hpp"

namespace pmhopf {

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

template <class T> using Multiset = std::map<T, std::size_t>;

namespace detail {

inline std::string join_ints(std::span<const int> xs, const char *sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i)
      s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

// Words print as bare digits when every letter is a single digit,
// comma-separated otherwise.
inline std::string word_text(std::span<const int> w) {
  bool small = std::all_of(w.begin(), w.end(), [](int x) { return x < 10; });
  return small ? join_ints(w, "") : join_ints(w, ",");
}

inline std::vector<int> parse_word(std::string_view s) {
  std::vector<int> out;
  bool separated = s.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("word: unexpected character '" + std::string(1, ch) +
                         "'");
      out.push_back(ch - '0');
    }
    return out;
  }
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ',' || s[i] == ' ') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("word: unexpected character '" + std::string(1, s[i]) +
                       "'");
    int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    out.push_back(v);
  }
  return out;
}

// Parses "{1 3 4}" style sets starting at s[pos] == '{'; advances pos.
inline std::vector<int> parse_set(std::string_view s, std::size_t &pos) {
  if (pos >= s.size() || s[pos] != '{')
    throw ParseError("expected '{' at offset " + std::to_string(pos));
  ++pos;
  std::vector<int> out;
  while (true) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == ','))
      ++pos;
    if (pos >= s.size())
      throw ParseError("unterminated set");
    if (s[pos] == '}') {
      ++pos;
      break;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("unexpected character '" + std::string(1, s[pos]) +
                       "' in set");
    int v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + (s[pos++] - '0');
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ParseError("repeated element in set");
  return out;
}

inline std::string set_text(std::span<const int> xs) {
  return "{" + join_ints(xs, " ") + "}";
}

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos)
    return "";
  auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

} // namespace detail

/// Word over [1,k] in which every letter of [1,k] occurs.
class PackedWord {
public:
  PackedWord() = default;

  /// Throws std::invalid_argument if the letters are not packed.
  explicit PackedWord(std::vector<int> letters) : letters_(std::move(letters)) {
    if (!is_packed(letters_))
      throw std::invalid_argument("word " + detail::word_text(letters_) +
                                  " is not packed");
    max_ = letters_.empty()
               ? 0
               : *std::max_element(letters_.begin(), letters_.end());
  }

  static bool is_packed(std::span<const int> w) {
    if (w.empty())
      return true;
    int m = *std::max_element(w.begin(), w.end());
    if (*std::min_element(w.begin(), w.end()) < 1)
      return false;
    std::vector<bool> seen(m + 1, false);
    for (int x : w)
      seen[x] = true;
    return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
  }

  const std::vector<int> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max() const { return max_; }
  int operator[](std::size_t i) const { return letters_[i]; }

  friend auto operator<=>(const PackedWord &a, const PackedWord &b) {
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const PackedWord &a, const PackedWord &b) {
    return a.letters_ == b.letters_;
  }

private:
  std::vector<int> letters_;
  int max_ = 0;
};

inline std::string to_text(const PackedWord &w) {
  return detail::word_text(w.letters());
}

inline PackedWord parse_packed_word(std::string_view s) {
  auto t = detail::trim(s);
  if (t == "e" || t == "ε")
    return PackedWord();
  try {
    return PackedWord(detail::parse_word(t));
  } catch (const ParseError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

/// Order-preserving relabeling onto [1,k]: equal letters stay equal, smaller
/// letters stay smaller.
inline PackedWord pack(std::span<const int> word) {
  std::vector<int> values(word.begin(), word.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> out;
  out.reserve(word.size());
  for (int x : word)
    out.push_back(static_cast<int>(
        std::lower_bound(values.begin(), values.end(), x) - values.begin() + 1));
  return PackedWord(std::move(out));
}

inline PackedWord pack(const std::vector<int> &word) {
  return pack(std::span<const int>(word));
}

/// Ordered sequence of nonempty disjoint sets covering [1,n].
class SetComposition {
public:
  SetComposition() = default;
  explicit SetComposition(std::vector<std::vector<int>> parts)
      : parts_(std::move(parts)) {
    for (auto &p : parts_)
      std::sort(p.begin(), p.end());
    validate(parts_, "set composition");
  }

  const std::vector<std::vector<int>> &parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int ground_size() const {
    int n = 0;
    for (auto &p : parts_)
      n += static_cast<int>(p.size());
    return n;
  }

  friend auto operator<=>(const SetComposition &,
                          const SetComposition &) = default;

  // Throws unless parts are nonempty, disjoint, and cover [1,n].
  static void validate(const std::vector<std::vector<int>> &parts,
                       const char *what) {
    std::vector<int> all;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].empty())
        throw std::invalid_argument(std::string(what) + ": part " +
                                    std::to_string(i + 1) + " is empty");
      all.insert(all.end(), parts[i].begin(), parts[i].end());
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] != static_cast<int>(i) + 1)
        throw std::invalid_argument(std::string(what) +
                                    ": parts do not partition [1," +
                                    std::to_string(all.size()) + "]");
  }

private:
  std::vector<std::vector<int>> parts_;
};

/// Unordered family of blocks covering [1,n]; stored with blocks sorted by
/// minimum element.
class SetPartition {
public:
  SetPartition() = default;
  explicit SetPartition(std::vector<std::vector<int>> blocks)
      : blocks_(std::move(blocks)) {
    for (auto &b : blocks_)
      std::sort(b.begin(), b.end());
    SetComposition::validate(blocks_, "set partition");
    std::sort(blocks_.begin(), blocks_.end(),
              [](auto &a, auto &b) { return a.front() < b.front(); });
  }

  const std::vector<std::vector<int>> &blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  int ground_size() const {
    int n = 0;
    for (auto &b : blocks_)
      n += static_cast<int>(b.size());
    return n;
  }

  friend auto operator<=>(const SetPartition &, const SetPartition &) = default;

private:
  std::vector<std::vector<int>> blocks_;
};

inline std::string to_text(const SetComposition &c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i)
    s += (i ? "," : "") + detail::set_text(c.parts()[i]);
  return s + "]";
}

inline std::string to_text(const SetPartition &p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i)
    s += (i ? "," : "") + detail::set_text(p.blocks()[i]);
  return s + "}";
}

namespace detail {

inline std::vector<std::vector<int>> parse_set_list(std::string_view s,
                                                    char open, char close) {
  auto t = trim(s);
  if (t.size() < 2 || t.front() != open || t.back() != close)
    throw ParseError(std::string("expected ") + open + "..." + close + ": " +
                     t);
  std::vector<std::vector<int>> parts;
  std::size_t pos = 1;
  while (true) {
    while (pos < t.size() - 1 && (t[pos] == ',' || t[pos] == ' '))
      ++pos;
    if (pos >= t.size() - 1)
      break;
    parts.push_back(parse_set(t, pos));
  }
  return parts;
}

} // namespace detail

inline SetComposition parse_set_composition(std::string_view s) {
  try {
    return SetComposition(detail::parse_set_list(s, '[', ']'));
  } catch (const ParseError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

inline SetPartition parse_set_partition(std::string_view s) {
  try {
    return SetPartition(detail::parse_set_list(s, '{', '}'));
  } catch (const ParseError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

/// w_i = j iff i lies in the j-th part.
inline SetComposition word_to_setcomp(const PackedWord &w) {
  std::vector<std::vector<int>> parts(w.max());
  for (std::size_t i = 0; i < w.size(); ++i)
    parts[w[i] - 1].push_back(static_cast<int>(i) + 1);
  return SetComposition(std::move(parts));
}

inline PackedWord setcomp_to_word(const SetComposition &c) {
  std::vector<int> w(c.ground_size());
  for (std::size_t j = 0; j < c.size(); ++j)
    for (int i : c.parts()[j])
      w[i - 1] = static_cast<int>(j) + 1;
  return PackedWord(std::move(w));
}

/// Forgets the order of the parts.
inline SetPartition sp(const SetComposition &c) {
  return SetPartition(c.parts());
}

/// Relabels a packed word so that values appear in order of first
/// occurrence. Two words have the same image iff they induce the same set
/// partition of positions.
inline PackedWord first_occurrence_form(const PackedWord &w) {
  std::vector<int> relabel(w.max() + 1, 0);
  int next = 0;
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w.letters()) {
    if (!relabel[x])
      relabel[x] = ++next;
    out.push_back(relabel[x]);
  }
  return PackedWord(std::move(out));
}

/// Enumerates every merge of p left items and q right items into r rows,
/// where a row receives one left item, one right item, or one of each, and
/// the relative order on each side is kept. The callback receives the row
/// (1-based) assigned to each left item and to each right item, plus r.
/// Runs over max(p,q) <= r <= p+q.
inline void quasi_shuffles(
    int p, int q,
    const std::function<void(std::span<const int>, std::span<const int>, int)>
        &visit) {
  std::vector<int> left(p), right(q);
  std::function<void(int, int, int)> rec = [&](int i, int j, int row) {
    if (i == p && j == q) {
      visit(left, right, row);
      return;
    }
    if (i < p) {
      left[i] = row + 1;
      rec(i + 1, j, row + 1);
    }
    if (j < q) {
      right[j] = row + 1;
      rec(i, j + 1, row + 1);
    }
    if (i < p && j < q) {
      left[i] = right[j] = row + 1;
      rec(i + 1, j + 1, row + 1);
    }
  };
  rec(0, 0, 0);
}

/// All packed w = w1 w2 with pack(w1) = u and pack(w2) = v.
inline Multiset<PackedWord> convolution(const PackedWord &u,
                                        const PackedWord &v) {
  Multiset<PackedWord> out;
  quasi_shuffles(u.max(), v.max(),
                 [&](std::span<const int> lu, std::span<const int> lv, int) {
                   std::vector<int> w;
                   w.reserve(u.size() + v.size());
                   for (int x : u.letters())
                     w.push_back(lu[x - 1]);
                   for (int x : v.letters())
                     w.push_back(lv[x - 1]);
                   ++out[PackedWord(std::move(w))];
                 });
  return out;
}

/// Shuffle of u with v shifted by max(u), counted with multiplicity.
inline Multiset<PackedWord> shifted_shuffle(const PackedWord &u,
                                            const PackedWord &v) {
  Multiset<PackedWord> out;
  const std::size_t n = u.size() + v.size();
  std::vector<int> w(n);
  // choose the positions that receive u's letters
  std::function<void(std::size_t, std::size_t, std::size_t)> rec =
      [&](std::size_t pos, std::size_t i, std::size_t j) {
        if (pos == n) {
          ++out[PackedWord(w)];
          return;
        }
        if (i < u.size()) {
          w[pos] = u[i];
          rec(pos + 1, i + 1, j);
        }
        if (j < v.size()) {
          w[pos] = v[j] + u.max();
          rec(pos + 1, i, j + 1);
        }
      };
  rec(0, 0, 0);
  return out;
}

/// Shifted concatenation u . v[max(u)].
inline PackedWord shifted_concat(const PackedWord &u, const PackedWord &v) {
  std::vector<int> w = u.letters();
  for (int x : v.letters())
    w.push_back(x + u.max());
  return PackedWord(std::move(w));
}

/// All packed words of length n, in lexicographic order.
inline std::vector<PackedWord> packed_words(int n) {
  std::vector<PackedWord> out;
  std::vector<int> w(n);
  // Pruned: a prefix can still be completed iff its missing values fit.
  std::function<void(int, int)> gen = [&](int pos, int mx) {
    if (pos == n) {
      if (PackedWord::is_packed(std::span<const int>(w.data(), n)))
        out.emplace_back(w);
      return;
    }
    for (int x = 1; x <= std::min(n, mx + (n - pos)); ++x) {
      w[pos] = x;
      gen(pos + 1, std::max(mx, x));
    }
  };
  gen(0, 0);
  return out;
}

inline std::vector<SetComposition> set_compositions(int n) {
  std::vector<SetComposition> out;
  for (const auto &w : packed_words(n))
    out.push_back(word_to_setcomp(w));
  return out;
}

/// Set partitions of [1,n] via restricted growth strings.
inline std::vector<SetPartition> set_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<int> rgs(n);
  std::function<void(int, int)> rec = [&](int pos, int mx) {
    if (pos == n) {
      std::vector<std::vector<int>> blocks(mx);
      for (int i = 0; i < n; ++i)
        blocks[rgs[i] - 1].push_back(i + 1);
      out.emplace_back(std::move(blocks));
      return;
    }
    for (int b = 1; b <= mx + 1; ++b) {
      rgs[pos] = b;
      rec(pos + 1, std::max(mx, b));
    }
  };
  rec(0, 0);
  return out;
}

/// Binomial coefficient C(m, k) for any integer m and k >= 0 (falling
/// factorial form, so C(-1, 0) = 1).
inline BigInt binomial(long long m, long long k) {
  if (k < 0)
    return 0;
  BigInt num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= BigInt(m - i);
    den *= BigInt(i + 1);
  }
  return num / den;
}

/// Number of set compositions of [1,n].
inline BigInt ordered_bell(int n) {
  std::vector<BigInt> a(n + 1);
  a[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k)
      a[m] += binomial(m, k) * a[m - k];
  return a[n];
}

/// Number of set partitions of [1,n].
inline BigInt bell(int n) {
  std::vector<BigInt> b(n + 1);
  b[0] = 1;
  for (int m = 0; m < n; ++m)
    for (int k = 0; k <= m; ++k)
      b[m + 1] += binomial(m, k) * b[k];
  return b[n];
}

/// Finite sequence of nonnegative integers with trailing zeros trimmed.
class Multidegree {
public:
  Multidegree() = default;
  explicit Multidegree(const std::vector<int> &coords)
      : coords_(coords.begin(), coords.end()) {
    if (std::any_of(coords_.begin(), coords_.end(),
                    [](int c) { return c < 0; }))
      throw std::invalid_argument("multidegree: negative coordinate");
    while (!coords_.empty() && coords_.back() == 0)
      coords_.pop_back();
  }

  std::span<const int> coords() const { return {coords_.data(), coords_.size()}; }
  /// Index of the last nonzero coordinate (number of coordinates kept).
  int length() const { return static_cast<int>(coords_.size()); }
  int weight() const {
    int w = 0;
    for (int c : coords_)
      w += c;
    return w;
  }
  bool is_zero() const { return coords_.empty(); }
  int operator[](std::size_t i) const {
    return i < coords_.size() ? coords_[i] : 0;
  }

  friend Multidegree operator+(const Multidegree &a, const Multidegree &b) {
    std::vector<int> c(std::max(a.coords_.size(), b.coords_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a[i] + b[i];
    return Multidegree(c);
  }

  friend bool operator==(const Multidegree &a, const Multidegree &b) {
    return std::ranges::equal(a.coords(), b.coords());
  }
  friend std::strong_ordering operator<=>(const Multidegree &a,
                                          const Multidegree &b) {
    return std::lexicographical_compare_three_way(
        a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
        b.coords_.end());
  }

private:
  // most letters are short
  boost::container::small_vector<int, 4> coords_;
};

inline std::string to_text(const Multidegree &m) {
  return "(" + detail::join_ints(m.coords(), ",") + ")";
}

} // namespace pmhopf
