#pragma once

// Exhaustive checks of the bialgebra axioms for any algebra traits struct
// (see algebras.hpp), over all basis elements up to a total grade.

#include <string>
#include <vector>

#include "pmhopf/freemodule.hpp"
#include "pmhopf/report.hpp"

namespace pmhopf {

namespace detail {

template <class Alg>
std::vector<std::vector<typename Alg::Index>> bases_upto(int max) {
  std::vector<std::vector<typename Alg::Index>> g(max + 1);
  for (int n = 0; n <= max; ++n)
    g[n] = Alg::basis(n);
  return g;
}

template <class Alg>
Element<typename Alg::Index> mul(const Element<typename Alg::Index> &x,
                                 const Element<typename Alg::Index> &y) {
  using I = typename Alg::Index;
  return apply_bilinear(
      [](const I &a, const I &b) { return Alg::product(a, b); }, x, y);
}

template <class Alg>
Tensor<typename Alg::Index> comul(const Element<typename Alg::Index> &x) {
  using I = typename Alg::Index;
  return apply_linear([](const I &a) { return Alg::coproduct(a); }, x);
}

} // namespace detail

/// (ab)c = a(bc) for grade(a) + grade(b) + grade(c) <= max_total.
template <class Alg> CheckReport check_associativity(int max_total) {
  using E = Element<typename Alg::Index>;
  CheckReport rep{std::string(Alg::name) + " associativity"};
  auto g = detail::bases_upto<Alg>(max_total);
  for (int i = 0; i <= max_total; ++i)
    for (int j = 0; i + j <= max_total; ++j)
      for (int k = 0; i + j + k <= max_total; ++k)
        for (auto &a : g[i])
          for (auto &b : g[j]) {
            E ab = Alg::product(a, b);
            for (auto &c : g[k])
              rep.record(to_text(a) + ", " + to_text(b) + ", " + to_text(c),
                         detail::mul<Alg>(ab, E(c)),
                         detail::mul<Alg>(E(a), Alg::product(b, c)));
          }
  return rep;
}

/// (D (x) id) D = (id (x) D) D.
template <class Alg> CheckReport check_coassociativity(int max_grade) {
  using I = typename Alg::Index;
  CheckReport rep{std::string(Alg::name) + " coassociativity"};
  for (int n = 0; n <= max_grade; ++n)
    for (auto &a : Alg::basis(n)) {
      Tensor3<I> lhs, rhs;
      for (const auto &[p, c] : Alg::coproduct(a)) {
        for (const auto &[q, c2] : Alg::coproduct(p.first))
          lhs.add({q.first, q.second, p.second}, c * c2);
        for (const auto &[q, c2] : Alg::coproduct(p.second))
          rhs.add({p.first, q.first, q.second}, c * c2);
      }
      rep.record(to_text(a), lhs, rhs);
    }
  return rep;
}

/// D(ab) = D(a) D(b) with the componentwise product on the tensor square.
template <class Alg> CheckReport check_bialgebra(int max_total) {
  using I = typename Alg::Index;
  CheckReport rep{std::string(Alg::name) + " compatibility"};
  auto g = detail::bases_upto<Alg>(max_total);
  auto m = [](const I &a, const I &b) { return Alg::product(a, b); };
  for (int i = 0; i <= max_total; ++i)
    for (int j = 0; i + j <= max_total; ++j)
      for (auto &a : g[i])
        for (auto &b : g[j])
          rep.record(to_text(a) + ", " + to_text(b),
                     detail::comul<Alg>(Alg::product(a, b)),
                     tensor_multiply(Alg::coproduct(a), Alg::coproduct(b), m,
                                     m));
  return rep;
}

/// The grade-0 element is a two-sided unit and a counit for D.
template <class Alg> CheckReport check_unit_counit(int max_grade) {
  using I = typename Alg::Index;
  using E = Element<I>;
  CheckReport rep{std::string(Alg::name) + " unit and counit"};
  const I one = Alg::basis(0).front();
  for (int n = 0; n <= max_grade; ++n)
    for (auto &a : Alg::basis(n)) {
      rep.record(to_text(a) + " left unit", Alg::product(one, a), E(a));
      rep.record(to_text(a) + " right unit", Alg::product(a, one), E(a));
      E left, right;
      for (const auto &[p, c] : Alg::coproduct(a)) {
        if (p.first == one)
          left.add(p.second, c);
        if (p.second == one)
          right.add(p.first, c);
      }
      rep.record(to_text(a) + " counit", left, E(a));
      rep.record(to_text(a) + " counit", right, E(a));
    }
  return rep;
}

template <class Alg> CheckReport check_commutativity(int max_total) {
  CheckReport rep{std::string(Alg::name) + " commutativity"};
  auto g = detail::bases_upto<Alg>(max_total);
  for (int i = 0; i <= max_total; ++i)
    for (int j = 0; i + j <= max_total; ++j)
      for (auto &a : g[i])
        for (auto &b : g[j])
          rep.record(to_text(a) + ", " + to_text(b), Alg::product(a, b),
                     Alg::product(b, a));
  return rep;
}

template <class Alg> CheckReport check_cocommutativity(int max_grade) {
  using I = typename Alg::Index;
  CheckReport rep{std::string(Alg::name) + " cocommutativity"};
  for (int n = 0; n <= max_grade; ++n)
    for (auto &a : Alg::basis(n)) {
      auto t = Alg::coproduct(a);
      Tensor<I> flipped;
      for (const auto &[p, c] : t)
        flipped.add({p.second, p.first}, c);
      rep.record(to_text(a), t, flipped);
    }
  return rep;
}

} // namespace pmhopf
