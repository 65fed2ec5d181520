#pragma once

// Exact coefficients in Z[qc, qs] and finitely supported linear combinations
// over arbitrary basis index types.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/container/flat_map.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace pmhopf {

using BigInt = boost::multiprecision::cpp_int;

/// Bivariate polynomial in qc, qs with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class QPoly {
public:
  /// (power of qc, power of qs)
  using Exponents = std::pair<int, int>;
  using Terms = boost::container::flat_map<Exponents, BigInt>;

  QPoly() = default;
  QPoly(long long c) { add_term({0, 0}, BigInt(c)); }
  QPoly(const BigInt &c) { add_term({0, 0}, c); }

  static QPoly monomial(const BigInt &c, int qc_power, int qs_power) {
    if (qc_power < 0 || qs_power < 0)
      throw std::invalid_argument("QPoly: negative exponent");
    QPoly p;
    p.add_term({qc_power, qs_power}, c);
    return p;
  }
  static QPoly qc(int power = 1) { return monomial(1, power, 0); }
  static QPoly qs(int power = 1) { return monomial(1, 0, power); }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
           terms_.begin()->second == 1;
  }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
  }
  BigInt constant_term() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Exponents &e, const BigInt &c) {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  QPoly &operator+=(const QPoly &o) {
    for (const auto &[e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }
  QPoly &operator-=(const QPoly &o) {
    for (const auto &[e, c] : o.terms_)
      add_term(e, -c);
    return *this;
  }
  QPoly &operator*=(const QPoly &o) {
    *this = *this * o;
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly &b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly &b) { return a -= b; }
  friend QPoly operator-(const QPoly &a) { return QPoly() - a; }
  friend QPoly operator*(const QPoly &a, const QPoly &b) {
    if (a.is_one())
      return b;
    if (b.is_one())
      return a;
    QPoly r;
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_)
        r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
  }
  friend bool operator==(const QPoly &, const QPoly &) = default;

  /// Exact division by a nonzero integer; nullopt if some coefficient is not
  /// divisible.
  std::optional<QPoly> divide_exact(const BigInt &d) const {
    if (d == 0)
      throw std::domain_error("QPoly: division by zero");
    QPoly r;
    for (const auto &[e, c] : terms_) {
      if (c % d != 0)
        return std::nullopt;
      r.add_term(e, c / d);
    }
    return r;
  }

  /// Ring homomorphism Z[qc,qs] -> Z.
  BigInt evaluate(const BigInt &qc_value, const BigInt &qs_value) const {
    BigInt total = 0;
    for (const auto &[e, c] : terms_) {
      BigInt term = c;
      for (int i = 0; i < e.first; ++i)
        term *= qc_value;
      for (int i = 0; i < e.second; ++i)
        term *= qs_value;
      total += term;
    }
    return total;
  }

  // "3*qc^2*qs", "1 + qc*qs^5", "-qs". Terms by increasing total degree, then
  // by qc power descending.
  std::string to_text() const {
    if (terms_.empty())
      return "0";
    std::vector<std::pair<Exponents, BigInt>> sorted(terms_.begin(),
                                                      terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](auto &a, auto &b) {
      int da = a.first.first + a.first.second;
      int db = b.first.first + b.first.second;
      if (da != db)
        return da < db;
      return a.first.first > b.first.first;
    });
    std::string out;
    bool first = true;
    for (const auto &[e, c] : sorted) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first)
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      first = false;
      std::string mono;
      auto power = [](const char *name, int p) {
        std::string s = name;
        if (p != 1)
          s += "^" + std::to_string(p);
        return s;
      };
      if (e.first > 0)
        mono = power("qc", e.first);
      if (e.second > 0)
        mono += (mono.empty() ? "" : "*") + power("qs", e.second);
      if (mono.empty())
        out += mag.str();
      else if (mag == 1)
        out += mono;
      else
        out += mag.str() + "*" + mono;
    }
    return out;
  }

private:
  Terms terms_;
};

inline std::string to_text(const QPoly &p) { return p.to_text(); }

/// Finitely supported map basis index -> QPoly. Iteration follows the index
/// type's strict weak order, so results are reproducible.
template <class B> class Element {
public:
  using Index = B;
  using Map = std::map<B, QPoly>;

  Element() = default;
  explicit Element(const B &b, QPoly c = QPoly(1)) { add(b, c); }

  void add(const B &b, const QPoly &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  const Map &terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  QPoly coefficient(const B &b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? QPoly() : it->second;
  }

  /// this += s * o
  void add_scaled(const Element &o, const QPoly &s) {
    if (s.is_one()) {
      *this += o;
      return;
    }
    for (const auto &[b, c] : o.terms_)
      add(b, s * c);
  }

  Element &operator+=(const Element &o) {
    for (const auto &[b, c] : o.terms_)
      add(b, c);
    return *this;
  }
  Element &operator-=(const Element &o) {
    for (const auto &[b, c] : o.terms_)
      add(b, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element &b) { return a += b; }
  friend Element operator-(Element a, const Element &b) { return a -= b; }
  friend Element operator*(const QPoly &s, const Element &x) {
    Element r;
    if (s.is_zero())
      return r;
    for (const auto &[b, c] : x.terms_)
      r.add(b, s * c);
    return r;
  }
  friend bool operator==(const Element &, const Element &) = default;

private:
  Map terms_;
};

template <class B1, class B2 = B1> using Tensor = Element<std::pair<B1, B2>>;
template <class B> using Tensor3 = Element<std::tuple<B, B, B>>;

/// Extends a basis map B -> Element<C> by linearity.
template <class B, class F>
auto apply_linear(F &&f, const Element<B> &x) {
  using Out = std::decay_t<decltype(f(std::declval<const B &>()))>;
  Out result;
  for (const auto &[b, c] : x)
    result.add_scaled(f(b), c);
  return result;
}

/// Extends a basis map (B1, B2) -> Element<C> bilinearly.
template <class B1, class B2, class F>
auto apply_bilinear(F &&f, const Element<B1> &x, const Element<B2> &y) {
  using Out = std::decay_t<decltype(f(std::declval<const B1 &>(),
                                      std::declval<const B2 &>()))>;
  Out result;
  for (const auto &[a, ca] : x)
    for (const auto &[b, cb] : y)
      result.add_scaled(f(a, b), ca * cb);
  return result;
}

template <class B1, class B2>
Tensor<B1, B2> tensor_product(const Element<B1> &x, const Element<B2> &y) {
  Tensor<B1, B2> t;
  for (const auto &[a, ca] : x)
    for (const auto &[b, cb] : y)
      t.add({a, b}, ca * cb);
  return t;
}

/// Multiplication in A (x) B: (a (x) b)(c (x) d) = f(a,c) (x) g(b,d).
template <class B1, class B2, class F, class G>
auto tensor_multiply(const Tensor<B1, B2> &x, const Tensor<B1, B2> &y,
                     F &&left, G &&right) {
  using L = std::decay_t<decltype(left(std::declval<const B1 &>(),
                                       std::declval<const B1 &>()))>;
  using R = std::decay_t<decltype(right(std::declval<const B2 &>(),
                                        std::declval<const B2 &>()))>;
  Tensor<typename L::Index, typename R::Index> result;
  for (const auto &[ab, c1] : x)
    for (const auto &[cd, c2] : y) {
      QPoly c = c1 * c2;
      result += c * tensor_product(left(ab.first, cd.first),
                                   right(ab.second, cd.second));
    }
  return result;
}

/// (f (x) g) applied to a tensor.
template <class B1, class B2, class F, class G>
auto tensor_map(const Tensor<B1, B2> &t, F &&f, G &&g) {
  using L = std::decay_t<decltype(f(std::declval<const B1 &>()))>;
  using R = std::decay_t<decltype(g(std::declval<const B2 &>()))>;
  Tensor<typename L::Index, typename R::Index> result;
  for (const auto &[ab, c] : t)
    result += c * tensor_product(f(ab.first), g(ab.second));
  return result;
}

inline BigInt specialize(const QPoly &p, const BigInt &qc, const BigInt &qs) {
  return p.evaluate(qc, qs);
}

template <class B>
Element<B> specialize_element(const Element<B> &x, const BigInt &qc,
                              const BigInt &qs) {
  Element<B> r;
  for (const auto &[b, c] : x)
    r.add(b, QPoly(c.evaluate(qc, qs)));
  return r;
}

/// Thrown when a sub/quotient collection step finds an element that is not
/// in the span of the target basis. Never expected on correct input.
class CollectionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Rewrites x (in a big algebra) in the basis of a subalgebra: terms are
/// grouped by key(b), and each group must equal c * embed(key) exactly.
template <class Small, class Big, class KeyFn, class EmbedFn>
Element<Small> collect(const Element<Big> &x, KeyFn &&key, EmbedFn &&embed) {
  std::map<Small, Element<Big>> groups;
  for (const auto &[b, c] : x)
    groups[key(b)].add(b, c);
  Element<Small> result;
  for (const auto &[k, part] : groups) {
    const Element<Big> image = embed(k);
    if (image.empty())
      throw CollectionError("collect: empty embedding");
    const auto &[probe, probe_coeff] = *image.begin();
    if (!probe_coeff.is_constant())
      throw CollectionError("collect: non-integral embedding coefficient");
    auto c = part.coefficient(probe).divide_exact(probe_coeff.constant_term());
    if (!c || !(*c * image == part))
      throw CollectionError("collect: element is not in the span of the "
                            "subalgebra basis");
    result.add(k, *c);
  }
  return result;
}

// Text forms. Index types provide an ADL-visible to_text(const B&).

template <class A, class B> std::string to_text(const std::pair<A, B> &p) {
  return to_text(p.first) + " ⊗ " + to_text(p.second);
}

template <class A, class B, class C>
std::string to_text(const std::tuple<A, B, C> &t) {
  return to_text(std::get<0>(t)) + " ⊗ " + to_text(std::get<1>(t)) + " ⊗ " +
         to_text(std::get<2>(t));
}

/// "3*qc^2*qs*[2,0;0,1] + [1,1]"; terms sorted by basis serialization.
template <class B> std::string to_text(const Element<B> &x) {
  if (x.empty())
    return "0";
  std::vector<std::pair<std::string, const QPoly *>> rows;
  rows.reserve(x.size());
  for (const auto &[b, c] : x)
    rows.emplace_back(to_text(b), &c);
  std::sort(rows.begin(), rows.end(),
            [](auto &a, auto &b) { return a.first < b.first; });
  std::string out;
  bool first = true;
  for (const auto &[basis, coeff] : rows) {
    const QPoly &c = *coeff;
    bool negative = c.terms().size() == 1 && c.terms().begin()->second < 0;
    QPoly mag = negative ? -c : c;
    if (!first)
      out += negative ? " - " : " + ";
    else if (negative)
      out += "-";
    first = false;
    if (mag == QPoly(1))
      out += basis;
    else if (mag.terms().size() == 1)
      out += mag.to_text() + "*" + basis;
    else
      out += "(" + mag.to_text() + ")*" + basis;
  }
  return out;
}

/// One "coefficient*basis" per line, same order as to_text.
template <class B> std::vector<std::string> to_lines(const Element<B> &x) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto &[b, c] : x) {
    std::string coeff;
    if (c == QPoly(1))
      coeff = "";
    else if (c == QPoly(-1))
      coeff = "-";
    else if (c.terms().size() == 1)
      coeff = c.to_text() + "*";
    else
      coeff = "(" + c.to_text() + ")*";
    rows.emplace_back(to_text(b), coeff);
  }
  std::sort(rows.begin(), rows.end());
  std::vector<std::string> lines;
  for (auto &[basis, coeff] : rows)
    lines.push_back(coeff + basis);
  return lines;
}

} // namespace pmhopf
