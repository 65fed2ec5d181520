#pragma once

// Tridendriform splitting of the SMQSym product and the two halves of its
// reduced coproduct, with exhaustive checks of the axioms.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmhopf/freemodule.hpp"
#include "pmhopf/matrices.hpp"
#include "pmhopf/report.hpp"
#include "pmhopf/smq.hpp"

namespace pmhopf {

enum class TriPart { prec, circ, succ };

/// Terms of P.Q whose top word w = x.y (|x| = n(P)) has max(y) < max(x)
/// (prec), max(y) = max(x) (circ) or max(y) > max(x) (succ).
inline SMQ tri_part(const SetPackedMatrix &p, const SetPackedMatrix &q,
                    TriPart part) {
  if (p.is_unit() || q.is_unit())
    throw std::invalid_argument("dendriform products need nonempty operands");
  SMQ r;
  augmented_shuffle(p, q,
                    [&](const SetPackedMatrix &m, std::span<const int> lp,
                        std::span<const int> lq) {
                      int mx = lp.back(), my = lq.back();
                      TriPart t = my < mx    ? TriPart::prec
                                  : my == mx ? TriPart::circ
                                             : TriPart::succ;
                      if (t == part)
                        r.add(m, QPoly(1));
                    });
  return r;
}

inline SMQ tri_prec(const SetPackedMatrix &p, const SetPackedMatrix &q) {
  return tri_part(p, q, TriPart::prec);
}
inline SMQ tri_circ(const SetPackedMatrix &p, const SetPackedMatrix &q) {
  return tri_part(p, q, TriPart::circ);
}
inline SMQ tri_succ(const SetPackedMatrix &p, const SetPackedMatrix &q) {
  return tri_part(p, q, TriPart::succ);
}

inline SMQ tri_part(const SMQ &x, const SMQ &y, TriPart part) {
  return apply_bilinear(
      [&](const SetPackedMatrix &a, const SetPackedMatrix &b) {
        return tri_part(a, b, part);
      },
      x, y);
}

/// Proper cuts whose top block holds the largest entry (left half) or whose
/// bottom block does (right half).
inline SMQTensor delta_half(const SetPackedMatrix &a, bool left) {
  SMQTensor r;
  const int n = a.ground_size();
  if (n == 0)
    return r;
  const int row_of_max = a.row_word()[n - 1];
  for (int k = 1; k < a.height(); ++k)
    if ((row_of_max <= k) == left)
      r.add(smq_cut(a, k), QPoly(1));
  return r;
}

inline SMQTensor delta_ll(const SetPackedMatrix &a) {
  return delta_half(a, true);
}
inline SMQTensor delta_gg(const SetPackedMatrix &a) {
  return delta_half(a, false);
}

/// Coproduct without the two trivial terms.
inline SMQTensor reduced_coproduct(const SetPackedMatrix &a) {
  SMQTensor r;
  for (int k = 1; k < a.height(); ++k)
    r.add(smq_cut(a, k), QPoly(1));
  return r;
}

namespace detail {

using Op = std::function<SMQ(const SMQ &, const SMQ &)>;

inline SMQ one(const SetPackedMatrix &m) { return SMQ(m); }

inline Op tri_op(TriPart p) {
  return [p](const SMQ &x, const SMQ &y) { return tri_part(x, y, p); };
}
inline Op full_op() {
  return [](const SMQ &x, const SMQ &y) { return smq_product(x, y); };
}
inline Op sum_op(Op f, Op g) {
  return [f, g](const SMQ &x, const SMQ &y) { return f(x, y) + g(x, y); };
}

/// Nonempty basis elements of each grade 1..max.
inline std::vector<std::vector<SetPackedMatrix>> graded_basis(int max) {
  std::vector<std::vector<SetPackedMatrix>> g(max + 1);
  for (int n = 1; n <= max; ++n)
    g[n] = set_packed_matrices(n);
  return g;
}

/// sum f(a1, b1) (x) g(a2, b2) over the terms of s and t.
inline SMQTensor mix(const SMQTensor &s, const SMQTensor &t, const Op &f,
                     const Op &g) {
  SMQTensor r;
  for (const auto &[a, ca] : s)
    for (const auto &[b, cb] : t)
      r += (ca * cb) * tensor_product(f(one(a.first), one(b.first)),
                                      g(one(a.second), one(b.second)));
  return r;
}

inline SMQTensor coproduct_of(const SMQ &x,
                              SMQTensor (*d)(const SetPackedMatrix &)) {
  return apply_linear([d](const SetPackedMatrix &m) { return d(m); }, x);
}

inline Tensor3<SetPackedMatrix>
left_then(const SMQTensor &t, SMQTensor (*d)(const SetPackedMatrix &)) {
  Tensor3<SetPackedMatrix> r;
  for (const auto &[p, c] : t)
    for (const auto &[q, c2] : d(p.first))
      r.add({q.first, q.second, p.second}, c * c2);
  return r;
}

inline Tensor3<SetPackedMatrix>
right_then(const SMQTensor &t, SMQTensor (*d)(const SetPackedMatrix &)) {
  Tensor3<SetPackedMatrix> r;
  for (const auto &[p, c] : t)
    for (const auto &[q, c2] : d(p.second))
      r.add({p.first, q.first, q.second}, c * c2);
  return r;
}

} // namespace detail

/// The seven tridendriform relations on every triple of nonempty basis
/// elements with total grade <= max_total.
inline std::vector<CheckReport> check_tridendriform(int max_total) {
  using detail::Op;
  const Op prec = detail::tri_op(TriPart::prec);
  const Op circ = detail::tri_op(TriPart::circ);
  const Op succ = detail::tri_op(TriPart::succ);
  const Op dot = detail::full_op();
  struct Rule {
    std::string name;
    Op outer_l, inner_l, outer_r, inner_r; // (x il y) ol z = x or (y ir z)
  };
  std::vector<Rule> rules{
      {"(x<y)<z = x<(y.z)", prec, prec, prec, dot},
      {"(x>y)<z = x>(y<z)", prec, succ, succ, prec},
      {"(x.y)>z = x>(y>z)", succ, dot, succ, succ},
      {"(x>y)o z = x>(y o z)", circ, succ, succ, circ},
      {"(x<y)o z = x o(y>z)", circ, prec, circ, succ},
      {"(x o y)<z = x o(y<z)", prec, circ, circ, prec},
      {"(x o y)o z = x o(y o z)", circ, circ, circ, circ},
  };
  std::vector<CheckReport> reps;
  for (auto &r : rules)
    reps.push_back({r.name});
  auto g = detail::graded_basis(max_total);
  for (int a = 1; a <= max_total; ++a)
    for (int b = 1; a + b <= max_total; ++b)
      for (int c = 1; a + b + c <= max_total; ++c)
        for (auto &x : g[a])
          for (auto &y : g[b])
            for (auto &z : g[c]) {
              SMQ X(x), Y(y), Z(z);
              std::string where =
                  to_text(x) + ", " + to_text(y) + ", " + to_text(z);
              for (std::size_t i = 0; i < rules.size(); ++i) {
                auto &r = rules[i];
                reps[i].record(where,
                               r.outer_l(r.inner_l(X, Y), Z),
                               r.outer_r(X, r.inner_r(Y, Z)));
              }
            }
  return reps;
}

/// Completeness of the splittings: prec + circ + succ = product on pairs of
/// total grade <= max_total, and the two halves sum to the reduced
/// coproduct for grades <= max_total.
inline std::vector<CheckReport> check_splitting(int max_total) {
  CheckReport prod{"x<y + x o y + x>y = x.y"};
  CheckReport cop{"Dll + Dgg = reduced coproduct"};
  auto g = detail::graded_basis(max_total);
  for (int a = 1; a <= max_total; ++a) {
    for (auto &x : g[a])
      cop.record(to_text(x), delta_ll(x) + delta_gg(x), reduced_coproduct(x));
    for (int b = 1; a + b <= max_total; ++b)
      for (auto &x : g[a])
        for (auto &y : g[b])
          prod.record(to_text(x) + ", " + to_text(y),
                      tri_prec(x, y) + tri_circ(x, y) + tri_succ(x, y),
                      smq_product(x, y));
  }
  return {prod, cop};
}

/// Bidendriform compatibilities with ll = prec and gg = circ + succ. The
/// first report is the relation for Dgg(a ll b); the other three
/// compatibilities and the three codendriform relations follow.
inline std::vector<CheckReport> check_bidendriform(int max_total) {
  using detail::Op;
  const Op ll = detail::tri_op(TriPart::prec);
  const Op gg = detail::sum_op(detail::tri_op(TriPart::circ),
                               detail::tri_op(TriPart::succ));
  const Op dot = detail::full_op();

  std::vector<CheckReport> reps{
      {"Dgg(a ll b) = a'b'gg (x) a'' ll b''gg + a' (x) a'' ll b + b'gg (x) a ll b''gg"},
      {"Dgg(a gg b) = a'b'gg (x) a'' gg b''gg + a b'gg (x) b''gg + b'gg (x) a gg b''gg + a' (x) a'' gg b + a (x) b"},
      {"Dll(a ll b) = a'b'll (x) a'' ll b''ll + a'b (x) a'' + b'll (x) a ll b''ll + b (x) a"},
      {"Dll(a gg b) = a'b'll (x) a'' gg b''ll + a b'll (x) b''ll + b'll (x) a gg b''ll"},
      {"(Dll (x) id)Dll = (id (x) Dbar)Dll"},
      {"(Dgg (x) id)Dll = (id (x) Dll)Dgg"},
      {"(Dbar (x) id)Dgg = (id (x) Dgg)Dgg"},
  };
  auto g = detail::graded_basis(max_total);
  for (int na = 1; na <= max_total; ++na) {
    for (auto &x : g[na]) {
      auto dl = delta_ll(x), dg = delta_gg(x), db = reduced_coproduct(x);
      std::string where = to_text(x);
      reps[4].record(where, detail::left_then(dl, delta_ll),
                     detail::right_then(dl, reduced_coproduct));
      reps[5].record(where, detail::left_then(dl, delta_gg),
                     detail::right_then(dg, delta_ll));
      reps[6].record(where, detail::left_then(dg, reduced_coproduct),
                     detail::right_then(dg, delta_gg));
    }
    for (int nb = 1; na + nb <= max_total; ++nb)
      for (auto &a : g[na])
        for (auto &b : g[nb]) {
          SMQ A(a), B(b);
          std::string where = to_text(a) + ", " + to_text(b);
          auto da = reduced_coproduct(a);
          auto dbl = delta_ll(b), dbg = delta_gg(b);
          const SMQTensor a_unit_b{std::pair{a, b}};
          const SMQTensor b_unit_a{std::pair{b, a}};

          // Dgg(a ll b)
          {
            auto lhs = detail::coproduct_of(ll(A, B), delta_gg);
            auto rhs = detail::mix(da, dbg, dot, ll);
            for (const auto &[p, c] : da)
              rhs += c * tensor_product(SMQ(p.first), ll(SMQ(p.second), B));
            for (const auto &[p, c] : dbg)
              rhs += c * tensor_product(SMQ(p.first), ll(A, SMQ(p.second)));
            reps[0].record(where, lhs, rhs);
          }
          // Dgg(a gg b)
          {
            auto lhs = detail::coproduct_of(gg(A, B), delta_gg);
            auto rhs = detail::mix(da, dbg, dot, gg);
            for (const auto &[p, c] : dbg) {
              rhs += c * tensor_product(smq_product(A, SMQ(p.first)),
                                        SMQ(p.second));
              rhs += c * tensor_product(SMQ(p.first), gg(A, SMQ(p.second)));
            }
            for (const auto &[p, c] : da)
              rhs += c * tensor_product(SMQ(p.first), gg(SMQ(p.second), B));
            rhs += a_unit_b;
            reps[1].record(where, lhs, rhs);
          }
          // Dll(a ll b)
          {
            auto lhs = detail::coproduct_of(ll(A, B), delta_ll);
            auto rhs = detail::mix(da, dbl, dot, ll);
            for (const auto &[p, c] : da)
              rhs += c * tensor_product(smq_product(SMQ(p.first), B),
                                        SMQ(p.second));
            for (const auto &[p, c] : dbl)
              rhs += c * tensor_product(SMQ(p.first), ll(A, SMQ(p.second)));
            rhs += b_unit_a;
            reps[2].record(where, lhs, rhs);
          }
          // Dll(a gg b)
          {
            auto lhs = detail::coproduct_of(gg(A, B), delta_ll);
            auto rhs = detail::mix(da, dbl, dot, gg);
            for (const auto &[p, c] : dbl) {
              rhs += c * tensor_product(smq_product(A, SMQ(p.first)),
                                        SMQ(p.second));
              rhs += c * tensor_product(SMQ(p.first), gg(A, SMQ(p.second)));
            }
            reps[3].record(where, lhs, rhs);
          }
        }
  }
  return reps;
}

} // namespace pmhopf
