#pragma once

// GF(2) primitives used by every other module: words of up to 64 coordinates
// packed into one machine integer, dense bit matrices, rank and null space by
// elimination, and validated linear codes with enumerated minimum distance.
//
// Bit order: coordinate i of a word is bit i of the underlying integer
// (coordinate 0 = least significant bit). The text form prints coordinate 0
// leftmost, so "1110000" has bits {0,1,2} set.

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codelen/errors.hpp"

namespace codelen::gf2 {

inline constexpr int max_word_bits = 64;

// Operations that walk 2^m objects refuse with CapError when m exceeds this.
inline constexpr int default_budget_bits = 28;

namespace detail {

inline std::uint64_t length_mask(int length) {
  return length >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
}

inline void check_word_length(int length) {
  if (length < 1 || length > max_word_bits)
    throw DomainError("word length must be in [1, 64], got " + std::to_string(length));
}

}  // namespace detail

class Word {
 public:
  Word(int length, std::uint64_t bits) : length_(length), bits_(bits) {
    detail::check_word_length(length);
    if (bits & ~detail::length_mask(length))
      throw DomainError("word has bits set beyond its length");
  }

  static Word zero(int length) { return Word(length, 0); }

  static Word unit(int length, int pos) {
    detail::check_word_length(length);
    if (pos < 0 || pos >= length) throw DomainError("unit coordinate out of range");
    return Word(length, std::uint64_t{1} << pos);
  }

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }

  bool bit(int pos) const {
    if (pos < 0 || pos >= length_) throw DomainError("coordinate out of range");
    return (bits_ >> pos) & 1;
  }

  std::string str() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i)
      if ((bits_ >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  static Word parse(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(max_word_bits))
      throw DomainError("word text must have 1..64 characters");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1')
        bits |= std::uint64_t{1} << i;
      else if (text[i] != '0')
        throw DomainError("word text may contain only '0' and '1'");
    }
    return Word(static_cast<int>(text.size()), bits);
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int length_;
  std::uint64_t bits_;
};

inline int weight(const Word& u) { return std::popcount(u.bits()); }

namespace detail {

inline void check_same_length(const Word& u, const Word& v) {
  if (u.length() != v.length())
    throw LengthMismatchError("word lengths differ: " + std::to_string(u.length()) + " vs " +
                              std::to_string(v.length()));
}

}  // namespace detail

inline Word operator^(const Word& u, const Word& v) {
  detail::check_same_length(u, v);
  return Word(u.length(), u.bits() ^ v.bits());
}

inline Word operator&(const Word& u, const Word& v) {
  detail::check_same_length(u, v);
  return Word(u.length(), u.bits() & v.bits());
}

// Hamming distance: the number of coordinates where u and v differ.
inline int distance(const Word& u, const Word& v) { return weight(u ^ v); }

class BinaryMatrix {
 public:
  static BinaryMatrix from_rows(std::vector<Word> rows) {
    if (rows.empty() || rows.size() > static_cast<std::size_t>(max_word_bits))
      throw DomainError("matrix row count must be in [1, 64]");
    const int cols = rows.front().length();
    std::vector<std::uint64_t> bits;
    bits.reserve(rows.size());
    for (const Word& r : rows) {
      if (r.length() != cols) throw DomainError("matrix rows must all have the same length");
      bits.push_back(r.bits());
    }
    return BinaryMatrix(static_cast<int>(rows.size()), cols, std::move(bits));
  }

  // Column j holds the bits of columns[j]: bit i is the entry in row i.
  static BinaryMatrix from_columns(int rows, const std::vector<std::uint64_t>& columns) {
    if (rows < 1 || rows > max_word_bits) throw DomainError("matrix row count must be in [1, 64]");
    if (columns.empty() || columns.size() > static_cast<std::size_t>(max_word_bits))
      throw DomainError("matrix column count must be in [1, 64]");
    const std::uint64_t mask = detail::length_mask(rows);
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(rows), 0);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j] & ~mask) throw DomainError("column value has bits beyond the row count");
      for (int i = 0; i < rows; ++i) bits[static_cast<std::size_t>(i)] |= ((columns[j] >> i) & 1) << j;
    }
    return BinaryMatrix(rows, static_cast<int>(columns.size()), std::move(bits));
  }

  static BinaryMatrix identity(int n) {
    std::vector<Word> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows.push_back(Word::unit(n, i));
    return from_rows(std::move(rows));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Word row(int i) const {
    if (i < 0 || i >= rows_) throw DomainError("row index out of range");
    return Word(cols_, row_bits_[static_cast<std::size_t>(i)]);
  }

  bool at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("matrix index out of range");
    return (row_bits_[static_cast<std::size_t>(r)] >> c) & 1;
  }

  std::uint64_t column_bits(int j) const {
    if (j < 0 || j >= cols_) throw DomainError("column index out of range");
    std::uint64_t v = 0;
    for (int i = 0; i < rows_; ++i) v |= ((row_bits_[static_cast<std::size_t>(i)] >> j) & 1) << i;
    return v;
  }

  // H * x^T over GF(2); the result has one bit per row.
  Word mul(const Word& x) const {
    if (x.length() != cols_)
      throw LengthMismatchError("matrix has " + std::to_string(cols_) + " columns, word has length " +
                                std::to_string(x.length()));
    std::uint64_t out = 0;
    for (int i = 0; i < rows_; ++i)
      out |= static_cast<std::uint64_t>(std::popcount(row_bits_[static_cast<std::size_t>(i)] & x.bits()) & 1)
             << i;
    return Word(rows_, out);
  }

  // Newline-separated rows of 0/1 characters, coordinate 0 leftmost.
  std::string to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_ + 1));
    for (int i = 0; i < rows_; ++i) {
      out += row(i).str();
      out += '\n';
    }
    return out;
  }

  static BinaryMatrix parse(std::string_view text) {
    std::vector<Word> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto nl = text.find('\n', pos);
      const auto line = nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
      if (!line.empty()) rows.push_back(Word::parse(line));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (rows.empty()) throw DomainError("matrix text has no rows");
    return from_rows(std::move(rows));
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  BinaryMatrix(int rows, int cols, std::vector<std::uint64_t> bits)
      : rows_(rows), cols_(cols), row_bits_(std::move(bits)) {}

  int rows_;
  int cols_;
  std::vector<std::uint64_t> row_bits_;
};

namespace detail {

struct Rref {
  std::vector<std::uint64_t> rows;  // reduced nonzero rows, one per pivot
  std::vector<int> pivot_cols;      // ascending
};

inline Rref rref(const BinaryMatrix& m) {
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).bits());
  Rref out;
  std::size_t next = 0;
  for (int c = 0; c < m.cols() && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !((rows[p] >> c) & 1)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != next && ((rows[i] >> c) & 1)) rows[i] ^= rows[next];
    out.pivot_cols.push_back(c);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

// Minimum weight over all nonzero combinations of the basis (Gray-code walk).
inline int min_weight_of_span(const std::vector<Word>& basis) {
  int best = std::numeric_limits<int>::max();
  std::uint64_t acc = 0;
  const int m = static_cast<int>(basis.size());
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
    acc ^= basis[static_cast<std::size_t>(std::countr_zero(i))].bits();
    best = std::min(best, std::popcount(acc));
  }
  return best;
}

}  // namespace detail

inline int rank(const BinaryMatrix& m) { return static_cast<int>(detail::rref(m).pivot_cols.size()); }

// Basis of {x : H x^T = 0}, one vector per free column, in ascending free
// column order.
inline std::vector<Word> null_space_basis(const BinaryMatrix& h) {
  const auto red = detail::rref(h);
  const int n = h.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : red.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Word> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::uint64_t x = std::uint64_t{1} << f;
    for (std::size_t j = 0; j < red.pivot_cols.size(); ++j)
      if ((red.rows[j] >> f) & 1) x |= std::uint64_t{1} << red.pivot_cols[j];
    basis.push_back(Word(n, x));
  }
  return basis;
}

// All 2^(cols - rank) words x with H x^T = 0, zero word first, the rest in a
// deterministic Gray-code order over the null-space basis.
inline std::vector<Word> null_space_enumeration(const BinaryMatrix& h,
                                                int budget_bits = default_budget_bits) {
  const auto basis = null_space_basis(h);
  const int m = static_cast<int>(basis.size());
  if (m > budget_bits)
    throw CapError("null space enumeration of 2^" + std::to_string(m) + " words exceeds the 2^" +
                   std::to_string(budget_bits) + " budget");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << m);
  out.push_back(Word::zero(h.cols()));
  std::uint64_t acc = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
    acc ^= basis[static_cast<std::size_t>(std::countr_zero(i))].bits();
    out.push_back(Word(h.cols(), acc));
  }
  return out;
}

// A validated [n, k, d] code held as a full-rank check matrix plus a derived
// generator (a null-space basis of the check matrix, so G H^T = 0 by
// construction). The minimum distance is enumerated over all 2^k - 1 nonzero
// codewords at construction while k fits the budget.
class LinearCode {
 public:
  static LinearCode from_check_matrix(const BinaryMatrix& check, int budget_bits = default_budget_bits) {
    const int n = check.cols();
    if (rank(check) != check.rows()) throw DomainError("check matrix rows are linearly dependent");
    const int k = n - check.rows();
    if (k < 1) throw DomainError("check matrix leaves no code dimension");
    auto basis = null_space_basis(check);
    std::optional<int> dist;
    if (k <= budget_bits) dist = detail::min_weight_of_span(basis);
    return LinearCode(n, k, check, BinaryMatrix::from_rows(std::move(basis)), dist);
  }

  int n() const { return n_; }
  int k() const { return k_; }
  const BinaryMatrix& check() const { return check_; }
  const BinaryMatrix& generator() const { return generator_; }

  bool min_distance_known() const { return min_distance_.has_value(); }

  int min_distance() const {
    if (!min_distance_)
      throw CapError("minimum distance was not enumerated: 2^k exceeds the enumeration budget");
    return *min_distance_;
  }

  Word syndrome(const Word& received) const { return check_.mul(received); }

 private:
  LinearCode(int n, int k, BinaryMatrix check, BinaryMatrix generator, std::optional<int> dist)
      : n_(n), k_(k), check_(std::move(check)), generator_(std::move(generator)), min_distance_(dist) {}

  int n_;
  int k_;
  BinaryMatrix check_;
  BinaryMatrix generator_;
  std::optional<int> min_distance_;
};

}  // namespace codelen::gf2
