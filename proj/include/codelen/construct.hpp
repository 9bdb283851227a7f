#pragma once

// Explicit single-error-correcting codes at the minimal length: a check
// matrix whose n columns are distinct nonzero syndromes, and the syndrome
// decoder that corrects any one flipped coordinate.
//
// Column layout for r = n - k check rows: the first r columns are the
// identity (values 1, 2, 4, ..., 2^(r-1)), the rest are the remaining
// nonzero values below 2^r in ascending order, skipping powers of two.
// Distinct nonzero columns make every syndrome of a single flip unique,
// so the code has minimum distance >= 3.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "codelen/bounds.hpp"
#include "codelen/errors.hpp"
#include "codelen/gf2.hpp"

namespace codelen::construct {

struct ConstructionSpec {
  std::int64_t k;
  std::optional<std::int64_t> n;  // defaults to the minimal feasible length
};

// Largest k for which the minimal length still fits in a 64-bit word.
inline constexpr std::int64_t max_dimension_in_word = 57;

inline gf2::LinearCode build_check_matrix(const ConstructionSpec& spec) {
  if (spec.k < 1) throw DomainError("dimension k must be >= 1, got " + std::to_string(spec.k));
  const std::int64_t n = spec.n ? *spec.n : bounds::nl_single_formula(spec.k);
  if (spec.n && *spec.n <= spec.k)
    throw DomainError("length n must exceed dimension k");
  const std::int64_t r = n - spec.k;
  // Feasibility first: r check rows provide 2^r - 1 nonzero syndromes and we
  // need n of them, i.e. 2^r >= n + 1. This is checked before the word-size
  // cap so infeasible lengths report as infeasible at any k.
  if (r < static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(n))))
    throw InfeasibleError("no single-error-correcting code of length " + std::to_string(n) +
                          " and dimension " + std::to_string(spec.k) +
                          " exists: 2^" + std::to_string(r) + " < " + std::to_string(n + 1));
  if (n > gf2::max_word_bits)
    throw CapError("length " + std::to_string(n) + " exceeds the 64-coordinate word size (k <= " +
                   std::to_string(max_dimension_in_word) + " at minimal length)");

  std::vector<std::uint64_t> columns;
  columns.reserve(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < r; ++j) columns.push_back(std::uint64_t{1} << j);
  for (std::uint64_t v = 3; static_cast<std::int64_t>(columns.size()) < n; ++v)
    if ((v & (v - 1)) != 0) columns.push_back(v);

  auto code = gf2::LinearCode::from_check_matrix(
      gf2::BinaryMatrix::from_columns(static_cast<int>(r), columns));
  if (code.min_distance_known() && code.min_distance() < 3)
    throw std::logic_error("constructed code has minimum distance below 3");
  return code;
}

// Precomputed map from syndrome to the error pattern it identifies: the zero
// syndrome means no error, a column syndrome means one flipped coordinate,
// anything else is beyond single-error correction.
class SyndromeTable {
 public:
  static SyndromeTable build(const gf2::LinearCode& code, int budget_bits = gf2::default_budget_bits) {
    const int r = code.check().rows();
    if (r > budget_bits)
      throw CapError("syndrome table of 2^" + std::to_string(r) + " entries exceeds the 2^" +
                     std::to_string(budget_bits) + " budget");
    std::vector<std::int32_t> patterns(std::size_t{1} << r, uncorrectable);
    patterns[0] = no_error;
    for (int j = 0; j < code.n(); ++j) {
      const std::uint64_t s = code.check().column_bits(j);
      if (s == 0 || patterns[static_cast<std::size_t>(s)] != uncorrectable)
        throw DistanceTooSmallError("check matrix columns are not distinct and nonzero");
      patterns[static_cast<std::size_t>(s)] = j;
    }
    return SyndromeTable(code.n(), std::move(patterns));
  }

  // The corrected word, or nullopt when the syndrome matches no single flip.
  std::optional<gf2::Word> decode(const gf2::Word& received, const gf2::Word& syndrome) const {
    if (received.length() != n_) throw LengthMismatchError("received word has the wrong length");
    if ((std::size_t{1} << syndrome.length()) != patterns_.size())
      throw LengthMismatchError("syndrome length does not match the table");
    const std::int32_t p = patterns_[static_cast<std::size_t>(syndrome.bits())];
    if (p == uncorrectable) return std::nullopt;
    if (p == no_error) return received;
    return received ^ gf2::Word::unit(n_, p);
  }

 private:
  static constexpr std::int32_t no_error = -1;
  static constexpr std::int32_t uncorrectable = -2;

  SyndromeTable(int n, std::vector<std::int32_t> patterns) : n_(n), patterns_(std::move(patterns)) {}

  int n_;
  std::vector<std::int32_t> patterns_;
};

// One-shot decode: compute the syndrome of the received word and correct at
// most one flipped coordinate.
inline std::optional<gf2::Word> syndrome_decode(const gf2::LinearCode& code, const SyndromeTable& table,
                                                const gf2::Word& received) {
  return table.decode(received, code.syndrome(received));
}

}  // namespace codelen::construct
