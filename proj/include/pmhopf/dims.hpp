#pragma once

// Graded dimensions: closed formulas and enumeration counts.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmhopf/combinat.hpp"
#include "pmhopf/freemodule.hpp"
#include "pmhopf/matrices.hpp"
#include "pmhopf/subquot.hpp"

namespace pmhopf {

/// sum_{j=0}^{n-k} (-1)^{n-k-j} C(j+k-1, j).
inline BigInt dims_T(int n, int k) {
  BigInt s = 0;
  for (int j = 0; j <= n - k; ++j) {
    BigInt term = binomial(j + k - 1, j);
    s += ((n - k - j) % 2 == 0) ? term : BigInt(-term);
  }
  return s;
}

/// Exponent of (1 - x^k)^{-1} in the generating product for N.
enum class NExponent {
  multisets, // C(i+k-1, k): parts of size k colored by a multiset of i colors
  shifted,   // C(i+k, i)
};

inline BigInt n_exponent(int i, int k, NExponent e) {
  return e == NExponent::multisets ? binomial(i + k - 1, k)
                                   : binomial(i + k, i);
}

/// Coefficient of x^n in prod_{k>=1} (1 - x^k)^{-e(i,k)}.
inline BigInt dims_N(int n, int i, NExponent e = NExponent::multisets) {
  std::vector<BigInt> series(n + 1, 0);
  series[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt ex = n_exponent(i, k, e);
    // multiply by sum_m C(ex+m-1, m) x^{km}
    std::vector<BigInt> next(n + 1, 0);
    for (int d = 0; d <= n; ++d) {
      if (series[d] == 0)
        continue;
      BigInt coeff = 1; // C(ex+m-1, m) built incrementally
      for (int m = 0; d + k * m <= n; ++m) {
        if (m > 0)
          coeff = coeff * (ex + m - 1) / m;
        next[d + k * m] += series[d] * coeff;
      }
    }
    series = std::move(next);
  }
  return series[n];
}

/// sum_{i=1}^{n+1} (-1)^{n-i} T(n+1, i+1) N(n, i). The sum vanishes at
/// n = 0, where the dimension is 1 (the unit).
inline BigInt dim_mrsym(int n, NExponent e = NExponent::multisets) {
  if (n == 0)
    return 1;
  BigInt s = 0;
  for (int i = 1; i <= n + 1; ++i) {
    BigInt term = dims_T(n + 1, i + 1) * dims_N(n, i, e);
    s += ((n - i) % 2 == 0) ? term : BigInt(-term);
  }
  return s;
}

/// Packed p x q matrices of weight n counted by inclusion-exclusion on
/// zero rows and columns.
inline BigInt dim_mqsym(int n) {
  BigInt total = 0;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
          BigInt term = binomial(p, i) * binomial(q, j) *
                        binomial(static_cast<long long>(i) * j + n - 1, n);
          total += ((p - i + q - j) % 2 == 0) ? term : BigInt(-term);
        }
  return total;
}

inline const std::vector<std::string> &algebra_names() {
  static const std::vector<std::string> names{
      "SMQSym", "SMRSym", "SMCSym", "SMSym", "MQSym", "MRSym", "MCSym", "MSym"};
  return names;
}

inline void require_algebra(const std::string &name) {
  auto &names = algebra_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown algebra: " + name);
}

/// Closed-form dimension, when one is available.
inline std::optional<BigInt> dim_formula(const std::string &alg, int n) {
  require_algebra(alg);
  if (alg == "SMQSym")
    return ordered_bell(n) * ordered_bell(n);
  if (alg == "SMRSym" || alg == "SMCSym")
    return ordered_bell(n) * bell(n);
  if (alg == "SMSym")
    return bell(n) * bell(n);
  if (alg == "MQSym")
    return dim_mqsym(n);
  if (alg == "MRSym" || alg == "MCSym")
    return dim_mrsym(n);
  return std::nullopt;
}

/// Number of distinct canonical basis indices of grade n, found by running
/// through every packed matrix of that grade.
inline BigInt enumerate_dim(const std::string &alg, int n) {
  require_algebra(alg);
  auto count = [](auto &&range, auto key) {
    std::set<std::decay_t<decltype(key(*range.begin()))>> seen;
    for (auto &x : range)
      seen.insert(key(x));
    return BigInt(seen.size());
  };
  if (alg.rfind("SM", 0) == 0) {
    auto all = set_packed_matrices(n);
    if (alg == "SMQSym")
      return count(all, [](const SetPackedMatrix &m) { return m; });
    if (alg == "SMRSym")
      return count(all, smr_key);
    if (alg == "SMCSym")
      return count(all, [](const SetPackedMatrix &m) { return smc_project(m); });
    return count(all, [](const SetPackedMatrix &m) {
      return sm_key(smc_project(m));
    });
  }
  auto all = int_packed_matrices(n);
  if (alg == "MQSym")
    return BigInt(all.size());
  if (alg == "MRSym")
    return count(all, mr_index);
  if (alg == "MCSym")
    return count(all, mc_index);
  return count(all, m_index);
}

/// Brute-force count of multisets of nonzero vectors in N^i with total
/// weight n (partitions of n with parts colored by i colors).
inline BigInt colored_partitions(int n, int i) {
  // nonzero vectors in N^i of weight <= n, sorted, then multisets by
  // nondecreasing index
  std::vector<std::vector<int>> parts;
  std::vector<int> v(i, 0);
  std::function<void(int, int)> gen = [&](int pos, int left) {
    if (pos == i) {
      if (std::any_of(v.begin(), v.end(), [](int x) { return x > 0; }))
        parts.push_back(v);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      v[pos] = x;
      gen(pos + 1, left - x);
    }
  };
  gen(0, n);
  std::vector<int> w;
  for (auto &p : parts) {
    int s = 0;
    for (int x : p)
      s += x;
    w.push_back(s);
  }
  BigInt total = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      ++total;
      return;
    }
    for (std::size_t k = from; k < parts.size(); ++k)
      if (w[k] <= left)
        rec(k, left - w[k]);
  };
  rec(0, n);
  return total;
}

struct NExponentChoice {
  NExponent chosen;
  bool multisets_matches_brute = false;
  bool shifted_matches_brute = false;
  bool multisets_matches_series = false;
  bool shifted_matches_series = false;
};

/// Known MRSym dimensions, degrees 0..10.
inline const std::vector<BigInt> &mrsym_reference_series() {
  static const std::vector<BigInt> s{1,     1,      4,      16,    76,     400,
                                     2356,  15200,  106644, 806320, 6526580};
  return s;
}

/// Decides which exponent reproduces both the brute-force colored-partition
/// counts (n <= bound) and the reference MRSym series.
inline NExponentChoice choose_n_exponent(int bound = 5) {
  NExponentChoice c{NExponent::multisets};
  auto brute_ok = [&](NExponent e) {
    for (int n = 0; n <= bound; ++n)
      for (int i = 1; i <= n + 1; ++i)
        if (dims_N(n, i, e) != colored_partitions(n, i))
          return false;
    return true;
  };
  auto series_ok = [&](NExponent e) {
    auto &ref = mrsym_reference_series();
    for (int n = 0; n < static_cast<int>(ref.size()); ++n)
      if (dim_mrsym(n, e) != ref[n])
        return false;
    return true;
  };
  c.multisets_matches_brute = brute_ok(NExponent::multisets);
  c.shifted_matches_brute = brute_ok(NExponent::shifted);
  c.multisets_matches_series = series_ok(NExponent::multisets);
  c.shifted_matches_series = series_ok(NExponent::shifted);
  c.chosen = (c.shifted_matches_brute && c.shifted_matches_series &&
              !(c.multisets_matches_brute && c.multisets_matches_series))
                 ? NExponent::shifted
                 : NExponent::multisets;
  return c;
}

} // namespace pmhopf
