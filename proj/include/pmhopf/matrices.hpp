#pragma once

// Set packed matrices, integer packed matrices, bi-words, labelled diagrams,
// and the bijections between them.

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmhopf/combinat.hpp"

namespace pmhopf {

/// Rectangular array of finite sets of positive integers, not necessarily
/// packed nor standard. Used for shifts and standardization.
struct SetMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> cells; // row-major, each cell sorted

  const std::vector<int> &at(int i, int j) const { return cells[i * cols + j]; }
  std::vector<int> &at(int i, int j) { return cells[i * cols + j]; }

  friend auto operator<=>(const SetMatrix &, const SetMatrix &) = default;
};

inline std::string to_text(const SetMatrix &m) {
  std::string s = "[";
  for (int i = 0; i < m.rows; ++i) {
    if (i)
      s += ";";
    for (int j = 0; j < m.cols; ++j)
      s += (j ? "," : "") + detail::set_text(m.at(i, j));
  }
  return s + "]";
}

/// "[{2 7},{},{};{8},{},{}]" with rows separated by ';'. "[]" is the 0x0
/// matrix.
inline SetMatrix parse_set_matrix(std::string_view text) {
  auto t = detail::trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ParseError("set matrix must be enclosed in [ ]: " + t);
  SetMatrix m;
  std::string body = t.substr(1, t.size() - 2);
  if (detail::trim(body).empty())
    return m;
  std::vector<std::vector<std::vector<int>>> rows;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(';', start);
    if (end == std::string::npos)
      end = body.size();
    std::string row = body.substr(start, end - start);
    std::vector<std::vector<int>> cells;
    std::size_t pos = 0;
    while (true) {
      while (pos < row.size() && (row[pos] == ' ' || row[pos] == ','))
        ++pos;
      if (pos >= row.size())
        break;
      cells.push_back(detail::parse_set(row, pos));
    }
    rows.push_back(std::move(cells));
    start = end + 1;
  }
  m.rows = static_cast<int>(rows.size());
  m.cols = static_cast<int>(rows.front().size());
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols)
      throw ParseError("set matrix: row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " cells, expected " +
                       std::to_string(m.cols));
    for (auto &c : rows[i])
      m.cells.push_back(std::move(c));
  }
  return m;
}

/// Adds k to every element (shape preserved).
inline SetMatrix shift_setmatrix(const SetMatrix &m, int k) {
  if (k < 0)
    throw std::invalid_argument("shift: negative amount");
  SetMatrix r = m;
  for (auto &cell : r.cells)
    for (int &x : cell)
      x += k;
  return r;
}

/// Order-preserving relabeling of the entries onto {1,...,n}. Rows and
/// columns are left untouched, empty ones included.
inline SetMatrix standardize(const SetMatrix &m) {
  std::vector<int> all;
  for (auto &cell : m.cells)
    all.insert(all.end(), cell.begin(), cell.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("std: entries are not pairwise disjoint");
  SetMatrix r = m;
  for (auto &cell : r.cells)
    for (int &x : cell)
      x = static_cast<int>(std::lower_bound(all.begin(), all.end(), x) -
                           all.begin() + 1);
  return r;
}

/// Pair of equal-length words of positive integers.
struct BiWord {
  std::vector<int> top;
  std::vector<int> bottom;

  BiWord() = default;
  BiWord(std::vector<int> t, std::vector<int> b)
      : top(std::move(t)), bottom(std::move(b)) {
    if (top.size() != bottom.size())
      throw std::invalid_argument("bi-word rows have different lengths");
  }
  std::size_t size() const { return top.size(); }
  bool is_bipacked() const {
    return PackedWord::is_packed(top) && PackedWord::is_packed(bottom);
  }
  friend auto operator<=>(const BiWord &, const BiWord &) = default;
};

inline std::string to_text(const BiWord &b) {
  return "(" + detail::word_text(b.top) + "|" + detail::word_text(b.bottom) +
         ")";
}

inline BiWord parse_biword(std::string_view text) {
  auto t = detail::trim(text);
  if (t.size() < 3 || t.front() != '(' || t.back() != ')')
    throw ParseError("bi-word must look like (top|bottom): " + t);
  auto bar = t.find('|');
  if (bar == std::string::npos)
    throw ParseError("bi-word: missing '|'");
  auto top = detail::parse_word(detail::trim(t.substr(1, bar - 1)));
  auto bottom =
      detail::parse_word(detail::trim(t.substr(bar + 1, t.size() - bar - 2)));
  if (top.size() != bottom.size())
    throw ParseError("bi-word: top has " + std::to_string(top.size()) +
                     " letters, bottom has " + std::to_string(bottom.size()));
  return BiWord(std::move(top), std::move(bottom));
}

/// Packs both rows independently.
inline BiWord bipack(const BiWord &b) {
  return BiWord(pack(b.top).letters(), pack(b.bottom).letters());
}

/// Concatenates tops; bottom2 is shifted by max(bottom1).
inline BiWord star(const BiWord &a, const BiWord &b) {
  int shift =
      a.bottom.empty() ? 0 : *std::max_element(a.bottom.begin(), a.bottom.end());
  BiWord r = a;
  r.top.insert(r.top.end(), b.top.begin(), b.top.end());
  for (int x : b.bottom)
    r.bottom.push_back(x + shift);
  return r;
}

/// Matrix of disjoint sets partitioning [1,n] with no empty row or column.
/// Stored as its bi-packed bi-word: label i sits in row rows()[i-1] and
/// column cols()[i-1].
class SetPackedMatrix {
public:
  /// The 0x0 unit matrix.
  SetPackedMatrix() = default;

  SetPackedMatrix(PackedWord row_word, PackedWord col_word)
      : rows_(std::move(row_word)), cols_(std::move(col_word)) {
    if (rows_.size() != cols_.size())
      throw std::invalid_argument("row and column words differ in length");
  }

  const PackedWord &row_word() const { return rows_; }
  const PackedWord &col_word() const { return cols_; }
  int height() const { return rows_.max(); }
  int width() const { return cols_.max(); }
  int ground_size() const { return static_cast<int>(rows_.size()); }
  bool is_unit() const { return rows_.empty(); }

  SetMatrix cells() const {
    SetMatrix m;
    m.rows = height();
    m.cols = width();
    m.cells.assign(static_cast<std::size_t>(m.rows) * m.cols, {});
    for (int i = 0; i < ground_size(); ++i)
      m.at(rows_[i] - 1, cols_[i] - 1).push_back(i + 1);
    return m;
  }

  friend auto operator<=>(const SetPackedMatrix &,
                          const SetPackedMatrix &) = default;

private:
  PackedWord rows_;
  PackedWord cols_;
};

inline std::string to_text(const SetPackedMatrix &m) {
  return to_text(m.cells());
}

/// Validates a general set matrix as packed; diagnostics name the offending
/// row or column.
inline SetPackedMatrix to_packed(const SetMatrix &m) {
  std::vector<int> where_row, where_col;
  int n = 0;
  for (auto &cell : m.cells)
    n += static_cast<int>(cell.size());
  where_row.assign(n + 1, 0);
  where_col.assign(n + 1, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      for (int x : m.at(i, j)) {
        if (x < 1 || x > n)
          throw std::invalid_argument(
              "entry " + std::to_string(x) + " in row " +
              std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
              " is outside [1," + std::to_string(n) + "]");
        if (where_row[x])
          throw std::invalid_argument("entry " + std::to_string(x) +
                                      " appears twice");
        where_row[x] = i + 1;
        where_col[x] = j + 1;
      }
  for (int i = 0; i < m.rows; ++i) {
    bool empty = true;
    for (int j = 0; j < m.cols; ++j)
      empty = empty && m.at(i, j).empty();
    if (empty)
      throw std::invalid_argument("row " + std::to_string(i + 1) +
                                  " is empty");
  }
  for (int j = 0; j < m.cols; ++j) {
    bool empty = true;
    for (int i = 0; i < m.rows; ++i)
      empty = empty && m.at(i, j).empty();
    if (empty)
      throw std::invalid_argument("column " + std::to_string(j + 1) +
                                  " is empty");
  }
  return SetPackedMatrix(PackedWord({where_row.begin() + 1, where_row.end()}),
                         PackedWord({where_col.begin() + 1, where_col.end()}));
}

inline SetPackedMatrix parse_set_packed_matrix(std::string_view text) {
  auto m = parse_set_matrix(text);
  try {
    return to_packed(m);
  } catch (const std::invalid_argument &e) {
    throw ParseError(std::string("set matrix: ") + e.what());
  }
}

/// Row-wise and column-wise unions, in order.
inline std::pair<SetComposition, SetComposition>
setmatrix_to_setcomp_pair(const SetPackedMatrix &m) {
  return {word_to_setcomp(m.row_word()), word_to_setcomp(m.col_word())};
}

/// M_ij = rows_i ∩ cols_j.
inline SetPackedMatrix setcomp_pair_to_setmatrix(const SetComposition &rows,
                                                 const SetComposition &cols) {
  if (rows.ground_size() != cols.ground_size())
    throw std::invalid_argument(
        "set compositions of different ground sets [1," +
        std::to_string(rows.ground_size()) + "] and [1," +
        std::to_string(cols.ground_size()) + "]");
  return SetPackedMatrix(setcomp_to_word(rows), setcomp_to_word(cols));
}

inline BiWord to_biword(const SetPackedMatrix &m) {
  return BiWord(m.row_word().letters(), m.col_word().letters());
}

inline SetPackedMatrix from_biword(const BiWord &b) {
  if (!b.is_bipacked())
    throw std::invalid_argument("bi-word " + to_text(b) + " is not bi-packed");
  return SetPackedMatrix(PackedWord(b.top), PackedWord(b.bottom));
}

/// Nonnegative integer matrix with no zero row or column.
class IntPackedMatrix {
public:
  IntPackedMatrix() = default;
  IntPackedMatrix(int rows, int cols, std::vector<int> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows < 0 || cols < 0 ||
        static_cast<int>(data_.size()) != rows * cols || (rows == 0) != (cols == 0))
      throw std::invalid_argument("integer matrix: bad shape");
    for (int x : data_)
      if (x < 0)
        throw std::invalid_argument("integer matrix: negative entry");
    for (int i = 0; i < rows_; ++i) {
      int s = 0;
      for (int j = 0; j < cols_; ++j)
        s += at(i, j);
      if (s == 0)
        throw std::invalid_argument("row " + std::to_string(i + 1) +
                                    " is zero");
    }
    for (int j = 0; j < cols_; ++j) {
      int s = 0;
      for (int i = 0; i < rows_; ++i)
        s += at(i, j);
      if (s == 0)
        throw std::invalid_argument("column " + std::to_string(j + 1) +
                                    " is zero");
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int i, int j) const { return data_[i * cols_ + j]; }
  const std::vector<int> &entries() const { return data_; }
  int degree() const { return std::accumulate(data_.begin(), data_.end(), 0); }
  std::vector<int> row(int i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }
  std::vector<int> col(int j) const {
    std::vector<int> c(rows_);
    for (int i = 0; i < rows_; ++i)
      c[i] = at(i, j);
    return c;
  }
  bool is_unit() const { return rows_ == 0; }

  static IntPackedMatrix from_rows(const std::vector<std::vector<int>> &rows) {
    std::vector<int> d;
    int q = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    for (auto &r : rows) {
      if (static_cast<int>(r.size()) != q)
        throw std::invalid_argument("integer matrix: ragged rows");
      d.insert(d.end(), r.begin(), r.end());
    }
    return IntPackedMatrix(static_cast<int>(rows.size()), q, std::move(d));
  }

  friend auto operator<=>(const IntPackedMatrix &,
                          const IntPackedMatrix &) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

inline std::string to_text(const IntPackedMatrix &m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i)
      s += ";";
    s += detail::join_ints(m.row(i), ",");
  }
  return s + "]";
}

/// "[2,0,1;0,3,4]"; "[]" is the unit.
inline IntPackedMatrix parse_int_matrix(std::string_view text) {
  auto t = detail::trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ParseError("integer matrix must be enclosed in [ ]: " + t);
  std::string body = detail::trim(t.substr(1, t.size() - 2));
  if (body.empty())
    return {};
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(';', start);
    if (end == std::string::npos)
      end = body.size();
    std::vector<int> row;
    std::string r = body.substr(start, end - start);
    std::size_t i = 0;
    while (i < r.size()) {
      if (r[i] == ',' || r[i] == ' ') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(r[i])))
        throw ParseError("integer matrix: unexpected character '" +
                         std::string(1, r[i]) + "' in row " +
                         std::to_string(rows.size() + 1));
      int v = 0;
      while (i < r.size() && std::isdigit(static_cast<unsigned char>(r[i])))
        v = v * 10 + (r[i++] - '0');
      row.push_back(v);
    }
    rows.push_back(std::move(row));
    start = end + 1;
  }
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() != rows[0].size())
      throw ParseError("integer matrix: row " + std::to_string(i + 1) +
                       " has " + std::to_string(rows[i].size()) +
                       " entries, expected " +
                       std::to_string(rows[0].size()));
  try {
    return IntPackedMatrix::from_rows(rows);
  } catch (const std::invalid_argument &e) {
    throw ParseError(std::string("integer matrix: ") + e.what());
  }
}

/// Column-major reading (top to bottom, left to right, each cell in
/// increasing order) yields 1, 2, ..., n.
inline bool is_sa(const SetPackedMatrix &m) {
  auto c = m.cells();
  int expect = 1;
  for (int j = 0; j < c.cols; ++j)
    for (int i = 0; i < c.rows; ++i)
      for (int x : c.at(i, j))
        if (x != expect++)
          return false;
  return true;
}

/// Replaces each set by its cardinality. Requires m in SA.
inline IntPackedMatrix gimel(const SetPackedMatrix &m) {
  if (!is_sa(m))
    throw std::invalid_argument("gimel: " + to_text(m) + " is not in SA");
  auto c = m.cells();
  std::vector<int> d;
  d.reserve(c.cells.size());
  for (auto &cell : c.cells)
    d.push_back(static_cast<int>(cell.size()));
  return IntPackedMatrix(c.rows, c.cols, std::move(d));
}

/// Fills cells with consecutive intervals in column-major order.
inline SetPackedMatrix gimel_inverse(const IntPackedMatrix &a) {
  std::vector<int> rows, cols;
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      for (int k = 0; k < a.at(i, j); ++k) {
        rows.push_back(i + 1);
        cols.push_back(j + 1);
      }
  return SetPackedMatrix(PackedWord(std::move(rows)),
                         PackedWord(std::move(cols)));
}

/// Bipartite multigraph: white spots index rows, black spots index columns,
/// weights count edges.
struct LabelledDiagram {
  int white = 0;
  int black = 0;
  std::vector<int> weights; // white x black, row-major

  int weight(int i, int j) const { return weights[i * black + j]; }
  friend auto operator<=>(const LabelledDiagram &,
                          const LabelledDiagram &) = default;
};

inline IntPackedMatrix diagram_to_matrix(const LabelledDiagram &d) {
  return IntPackedMatrix(d.white, d.black, d.weights);
}

inline LabelledDiagram matrix_to_diagram(const IntPackedMatrix &m) {
  return {m.rows(), m.cols(), m.entries()};
}

/// Exponents (alpha, beta): alpha_i counts white spots of degree i, beta_i
/// black spots of degree i.
inline std::pair<Multidegree, Multidegree>
multiplier(const LabelledDiagram &d) {
  auto m = diagram_to_matrix(d);
  std::vector<int> alpha(m.degree() + 1, 0), beta(m.degree() + 1, 0);
  for (int i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    ++alpha[std::accumulate(r.begin(), r.end(), 0)];
  }
  for (int j = 0; j < m.cols(); ++j) {
    auto c = m.col(j);
    ++beta[std::accumulate(c.begin(), c.end(), 0)];
  }
  alpha.erase(alpha.begin());
  beta.erase(beta.begin());
  return {Multidegree(alpha), Multidegree(beta)};
}

/// Column vectors of the diagram's matrix, as multidegrees.
inline std::vector<Multidegree> code_w(const LabelledDiagram &d) {
  std::vector<Multidegree> w;
  auto m = diagram_to_matrix(d);
  for (int j = 0; j < m.cols(); ++j)
    w.emplace_back(m.col(j));
  return w;
}

/// Inverse of code_w: the number of white spots is the longest letter.
inline LabelledDiagram diagram_from_code(const std::vector<Multidegree> &w) {
  int p = 0;
  for (auto &a : w) {
    if (a.is_zero())
      throw std::invalid_argument("diagram code: zero letter");
    p = std::max(p, a.length());
  }
  int q = static_cast<int>(w.size());
  std::vector<int> d(static_cast<std::size_t>(p) * q);
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < p; ++i)
      d[i * q + j] = w[j][i];
  LabelledDiagram diag{p, q, d};
  diagram_to_matrix(diag); // validates projections
  return diag;
}

// Orbit canonical forms.
//
// Set matrices: rows (columns) sorted by their minimum element; since cells
// are disjoint this is a total order, so row-then-column sorting is already
// canonical for the simultaneous action.

inline SetPackedMatrix canonical_row_class(const SetPackedMatrix &m) {
  return SetPackedMatrix(first_occurrence_form(m.row_word()), m.col_word());
}
inline SetPackedMatrix canonical_col_class(const SetPackedMatrix &m) {
  return SetPackedMatrix(m.row_word(), first_occurrence_form(m.col_word()));
}
inline SetPackedMatrix canonical_rowcol_class(const SetPackedMatrix &m) {
  return SetPackedMatrix(first_occurrence_form(m.row_word()),
                         first_occurrence_form(m.col_word()));
}

namespace detail {

inline IntPackedMatrix with_rows(const std::vector<std::vector<int>> &rows) {
  return IntPackedMatrix::from_rows(rows);
}

inline std::vector<std::vector<int>> rows_of(const IntPackedMatrix &m) {
  std::vector<std::vector<int>> r;
  for (int i = 0; i < m.rows(); ++i)
    r.push_back(m.row(i));
  return r;
}

inline IntPackedMatrix transpose(const IntPackedMatrix &m) {
  std::vector<std::vector<int>> r;
  for (int j = 0; j < m.cols(); ++j)
    r.push_back(m.col(j));
  return with_rows(r);
}

} // namespace detail

/// Rows sorted lexicographically, largest first.
inline IntPackedMatrix canonical_row_class(const IntPackedMatrix &m) {
  auto rows = detail::rows_of(m);
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return detail::with_rows(rows);
}

/// Columns sorted lexicographically, largest first.
inline IntPackedMatrix canonical_col_class(const IntPackedMatrix &m) {
  return detail::transpose(canonical_row_class(detail::transpose(m)));
}

/// Lexicographically largest column-sorted matrix over all row orders.
inline IntPackedMatrix canonical_rowcol_class(const IntPackedMatrix &m) {
  if (m.is_unit())
    return m;
  auto rows = detail::rows_of(m);
  std::sort(rows.begin(), rows.end());
  IntPackedMatrix best;
  bool have = false;
  do {
    auto c = canonical_col_class(detail::with_rows(rows));
    if (!have || best < c) {
      best = c;
      have = true;
    }
  } while (std::next_permutation(rows.begin(), rows.end()));
  return best;
}

/// Distinct matrices obtained by permuting rows.
inline std::vector<IntPackedMatrix> row_permutations(const IntPackedMatrix &m) {
  auto rows = detail::rows_of(m);
  std::sort(rows.begin(), rows.end());
  std::vector<IntPackedMatrix> out;
  do
    out.push_back(detail::with_rows(rows));
  while (std::next_permutation(rows.begin(), rows.end()));
  return out;
}

inline std::vector<IntPackedMatrix> col_permutations(const IntPackedMatrix &m) {
  std::vector<IntPackedMatrix> out;
  for (auto &t : row_permutations(detail::transpose(m)))
    out.push_back(detail::transpose(t));
  return out;
}

/// Every set packed matrix with ground set [1,n] (one per pair of packed
/// words of length n).
inline std::vector<SetPackedMatrix> set_packed_matrices(int n) {
  auto words = packed_words(n);
  std::vector<SetPackedMatrix> out;
  out.reserve(words.size() * words.size());
  for (auto &u : words)
    for (auto &v : words)
      out.emplace_back(u, v);
  return out;
}

/// Every integer packed matrix of degree n, built column by column.
inline std::vector<IntPackedMatrix> int_packed_matrices(int n) {
  std::vector<IntPackedMatrix> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (int p = 1; p <= n; ++p) {
    // nonzero columns of N^p grouped by weight
    std::vector<std::vector<std::vector<int>>> by_weight(n + 1);
    std::vector<int> v(p);
    for (int w = 1; w <= n; ++w) {
      std::function<void(int, int)> fill = [&](int i, int left) {
        if (i == p - 1) {
          v[i] = left;
          by_weight[w].push_back(v);
          return;
        }
        for (int x = 0; x <= left; ++x) {
          v[i] = x;
          fill(i + 1, left - x);
        }
      };
      fill(0, w);
    }
    std::vector<std::vector<int>> columns;
    std::vector<int> row_sum(p, 0);
    std::function<void(int)> rec = [&](int left) {
      if (left == 0) {
        if (std::all_of(row_sum.begin(), row_sum.end(),
                        [](int s) { return s > 0; })) {
          int q = static_cast<int>(columns.size());
          std::vector<int> d(static_cast<std::size_t>(p) * q);
          for (int j = 0; j < q; ++j)
            for (int i = 0; i < p; ++i)
              d[i * q + j] = columns[j][i];
          out.emplace_back(p, q, std::move(d));
        }
        return;
      }
      int zero_rows = static_cast<int>(
          std::count(row_sum.begin(), row_sum.end(), 0));
      if (zero_rows > left)
        return;
      for (int w = 1; w <= left; ++w)
        for (auto &c : by_weight[w]) {
          columns.push_back(c);
          for (int i = 0; i < p; ++i)
            row_sum[i] += c[i];
          rec(left - w);
          for (int i = 0; i < p; ++i)
            row_sum[i] -= c[i];
          columns.pop_back();
        }
    };
    rec(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace pmhopf
