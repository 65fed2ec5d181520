#pragma once

// One traits struct per algebra: basis, product, coproduct and parsing,
// so generic checks and the command line can treat them uniformly.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "pmhopf/combinat.hpp"
#include "pmhopf/freemodule.hpp"
#include "pmhopf/matrices.hpp"
#include "pmhopf/smq.hpp"
#include "pmhopf/subquot.hpp"
#include "pmhopf/wordalg.hpp"

namespace pmhopf {

namespace detail {

template <class T> std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Splits "(left|right)" into its two halves.
inline std::pair<std::string, std::string> split_pair(std::string_view text) {
  auto t = trim(text);
  auto bar = t.find('|');
  if (t.size() < 3 || t.front() != '(' || t.back() != ')' ||
      bar == std::string::npos)
    throw ParseError("expected (rows|cols): " + t);
  return {t.substr(1, bar - 1), t.substr(bar + 1, t.size() - bar - 2)};
}

inline bool looks_like_pair(std::string_view text) {
  auto t = trim(text);
  return !t.empty() && t.front() == '(';
}

/// A set packed matrix written as a set matrix or as a bi-word.
inline SetPackedMatrix parse_smq(std::string_view text) {
  if (!looks_like_pair(text))
    return parse_set_packed_matrix(text);
  try {
    return from_biword(parse_biword(text));
  } catch (const ParseError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

} // namespace detail

struct SMQSym {
  using Index = SetPackedMatrix;
  static constexpr const char *name = "SMQSym";
  static Element<Index> product(const Index &a, const Index &b) {
    return smq_product(a, b);
  }
  static Tensor<Index> coproduct(const Index &a) { return smq_coproduct(a); }
  static std::vector<Index> basis(int n) { return set_packed_matrices(n); }
  static Index parse(std::string_view t) { return detail::parse_smq(t); }
};

struct SMRSym {
  using Index = SMRIndex;
  static constexpr const char *name = "SMRSym";
  static Element<Index> product(const Index &a, const Index &b) {
    return smr_product(a, b);
  }
  static Tensor<Index> coproduct(const Index &a) { return smr_coproduct(a); }
  static std::vector<Index> basis(int n) {
    std::vector<Index> out;
    for (auto &m : set_packed_matrices(n))
      out.push_back(smr_key(m));
    return detail::sorted_unique(std::move(out));
  }
  /// "({..}|[..])", or any representative matrix.
  static Index parse(std::string_view t) {
    if (detail::looks_like_pair(t) && t.find('{') < t.find('|')) {
      auto [r, c] = detail::split_pair(t);
      Index i{parse_set_partition(r), parse_set_composition(c)};
      check_ground(i.rows.ground_size(), i.cols.ground_size());
      return i;
    }
    return smr_key(detail::parse_smq(t));
  }
  static void check_ground(int a, int b) {
    if (a != b)
      throw ParseError("rows and columns cover different ground sets");
  }
};

struct SMCSym {
  using Index = SMCIndex;
  static constexpr const char *name = "SMCSym";
  static Element<Index> product(const Index &a, const Index &b) {
    return smc_product(a, b);
  }
  static Tensor<Index> coproduct(const Index &a) { return smc_coproduct(a); }
  static std::vector<Index> basis(int n) {
    std::vector<Index> out;
    for (auto &m : set_packed_matrices(n))
      out.push_back(smc_project(m));
    return detail::sorted_unique(std::move(out));
  }
  /// "([..]|{..})", or any representative matrix.
  static Index parse(std::string_view t) {
    if (detail::looks_like_pair(t) && t.find('[') < t.find('|')) {
      auto [r, c] = detail::split_pair(t);
      Index i{parse_set_composition(r), parse_set_partition(c)};
      SMRSym::check_ground(i.rows.ground_size(), i.cols.ground_size());
      return i;
    }
    return smc_project(detail::parse_smq(t));
  }
};

struct SMSym {
  using Index = SMIndex;
  static constexpr const char *name = "SMSym";
  static Element<Index> product(const Index &a, const Index &b) {
    return sm_product(a, b);
  }
  static Tensor<Index> coproduct(const Index &a) { return sm_coproduct(a); }
  static std::vector<Index> basis(int n) {
    std::vector<Index> out;
    for (auto &m : set_packed_matrices(n))
      out.push_back(sm_key(smc_project(m)));
    return detail::sorted_unique(std::move(out));
  }
  /// "({..}|{..})", or any representative matrix.
  static Index parse(std::string_view t) {
    if (detail::looks_like_pair(t) && t.find('{') < t.find('|')) {
      auto [r, c] = detail::split_pair(t);
      if (detail::trim(c).rfind('{', 0) == 0) {
        Index i{parse_set_partition(r), parse_set_partition(c)};
        SMRSym::check_ground(i.rows.ground_size(), i.cols.ground_size());
        return i;
      }
    }
    return sm_key(smc_project(detail::parse_smq(t)));
  }
};

struct MQSym {
  using Index = IntPackedMatrix;
  static constexpr const char *name = "MQSym";
  static Element<Index> product(const Index &a, const Index &b) {
    return mq_product(a, b);
  }
  static Tensor<Index> coproduct(const Index &a) { return mq_coproduct(a); }
  static std::vector<Index> basis(int n) { return int_packed_matrices(n); }
  static Index parse(std::string_view t) { return parse_int_matrix(t); }
};

struct MRSym {
  using Index = MRIndex;
  static constexpr const char *name = "MRSym";
  static Element<Index> product(const Index &a, const Index &b) {
    return mr_product(a, b);
  }
  static Tensor<Index> coproduct(const Index &a) { return mr_coproduct(a); }
  static std::vector<Index> basis(int n) {
    std::vector<Index> out;
    for (auto &m : int_packed_matrices(n))
      out.push_back(mr_index(m));
    return detail::sorted_unique(std::move(out));
  }
  static Index parse(std::string_view t) {
    return mr_index(parse_int_matrix(t));
  }
};

struct MCSym {
  using Index = MCIndex;
  static constexpr const char *name = "MCSym";
  static Element<Index> product(const Index &a, const Index &b) {
    return mc_product(a, b);
  }
  static Tensor<Index> coproduct(const Index &a) { return mc_coproduct(a); }
  static std::vector<Index> basis(int n) {
    std::vector<Index> out;
    for (auto &m : int_packed_matrices(n))
      out.push_back(mc_index(m));
    return detail::sorted_unique(std::move(out));
  }
  static Index parse(std::string_view t) {
    return mc_index(parse_int_matrix(t));
  }
};

struct MSym {
  using Index = MIndex;
  static constexpr const char *name = "MSym";
  static Element<Index> product(const Index &a, const Index &b) {
    return m_product(a, b);
  }
  static Tensor<Index> coproduct(const Index &a) { return m_coproduct(a); }
  static std::vector<Index> basis(int n) {
    std::vector<Index> out;
    for (auto &m : int_packed_matrices(n))
      out.push_back(m_index(m));
    return detail::sorted_unique(std::move(out));
  }
  static Index parse(std::string_view t) {
    return m_index(parse_int_matrix(t));
  }
};

struct WQSym {
  using Index = WQIndex;
  static constexpr const char *name = "WQSym";
  static Element<Index> product(const Index &a, const Index &b) {
    return wq_product(a.word, b.word);
  }
  static Tensor<Index> coproduct(const Index &a) {
    return wq_coproduct(a.word);
  }
  static std::vector<Index> basis(int n) {
    std::vector<Index> out;
    for (auto &w : packed_words(n))
      out.push_back({w});
    return out;
  }
  static Index parse(std::string_view t) { return {parse_packed_word(t)}; }
};

struct WSym {
  using Index = WIndex;
  static constexpr const char *name = "WSym";
  static Element<Index> product(const Index &a, const Index &b) {
    return w_product(a.partition, b.partition);
  }
  static Tensor<Index> coproduct(const Index &a) {
    return w_coproduct(a.partition);
  }
  static std::vector<Index> basis(int n) {
    std::vector<Index> out;
    for (auto &p : set_partitions(n))
      out.push_back({p});
    return out;
  }
  static Index parse(std::string_view t) { return {parse_set_partition(t)}; }
};

/// Calls f(Alg{}) for the algebra with the given name; false if unknown.
template <class F> bool with_algebra(std::string_view name, F &&f) {
  if (name == "SMQSym") f(SMQSym{});
  else if (name == "SMRSym") f(SMRSym{});
  else if (name == "SMCSym") f(SMCSym{});
  else if (name == "SMSym") f(SMSym{});
  else if (name == "MQSym") f(MQSym{});
  else if (name == "MRSym") f(MRSym{});
  else if (name == "MCSym") f(MCSym{});
  else if (name == "MSym") f(MSym{});
  else if (name == "WQSym") f(WQSym{});
  else if (name == "WSym") f(WSym{});
  else return false;
  return true;
}

} // namespace pmhopf
