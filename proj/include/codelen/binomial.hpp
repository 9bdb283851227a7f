#pragma once

// Exact integer combinatorics. Everything is unbounded-width (GMP) and no
// floating point is involved anywhere: floor(log2 x) is a bit-length query
// and all inequalities downstream are compared as integers.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "codelen/errors.hpp"

namespace codelen {

using Bigint = mpz_class;

inline Bigint pow2(std::int64_t e) {
  if (e < 0) throw DomainError("pow2: exponent must be >= 0");
  Bigint r = 0;
  mpz_setbit(r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

// floor(log2 x) = bit_length(x) - 1, x >= 1.
inline int floor_log2(std::int64_t x) {
  if (x < 1) throw DomainError("floor_log2: x must be >= 1");
  return std::bit_width(static_cast<std::uint64_t>(x)) - 1;
}

// Binomial coefficient by the multiplicative formula with exact division,
// memoized one row per n (per thread). r outside [0, n] yields 0.
inline Bigint binomial(std::int64_t n, std::int64_t r) {
  if (n < 0) throw DomainError("binomial: n must be >= 0");
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  thread_local std::unordered_map<std::int64_t, std::vector<Bigint>> rows;
  auto& row = rows[n];
  if (row.empty()) row.emplace_back(1);
  while (static_cast<std::int64_t>(row.size()) <= r) {
    const auto j = static_cast<std::int64_t>(row.size());
    Bigint next = row.back() * (n - j + 1);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(j));
    row.push_back(std::move(next));
  }
  return row[r];
}

}  // namespace codelen
