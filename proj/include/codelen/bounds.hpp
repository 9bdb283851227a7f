#pragma once

// Exact minimal-length bounds for binary codes correcting e errors, all in
// integer arithmetic:
//
//   hamming_bound(k, e)    smallest n with sphere_volume(n, e) * 2^k <= 2^n
//   n_single_scan(k)       smallest n with 2^(n-k) >= n + 1     (e = 1 case)
//   nl_single_formula(k)   the closed form k + 1 + floor(log2(k + 1 + floor(log2 k)))
//   coset_bound(k, e)      smallest n where the coset packing inequality holds
//
// Every scan result carries integer witnesses: the two sides of the defining
// inequality at the returned n, and at n - 1 where it must still fail.

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "codelen/binomial.hpp"
#include "codelen/errors.hpp"

namespace codelen::bounds {

// Parameter cap keeping n + 1 and friends inside int64 with headroom; the
// interesting range is k in the thousands.
inline constexpr std::int64_t max_dimension = std::int64_t{1} << 56;
inline constexpr std::int64_t max_errors = 1024;

struct BoundQuery {
  std::int64_t k;
  std::int64_t e;

  BoundQuery(std::int64_t k_, std::int64_t e_) : k(k_), e(e_) {
    if (k < 1) throw DomainError("dimension k must be >= 1, got " + std::to_string(k));
    if (e < 1) throw DomainError("error count e must be >= 1, got " + std::to_string(e));
    if (k > max_dimension) throw CapError("dimension k exceeds the supported range");
    if (e > max_errors) throw CapError("error count e exceeds the supported range");
  }
};

enum class BoundKind { ham, n1_scan, n1_formula, coset_c };

inline const char* kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::ham: return "ham";
    case BoundKind::n1_scan: return "n1_scan";
    case BoundKind::n1_formula: return "n1_formula";
    case BoundKind::coset_c: return "coset_c";
  }
  throw std::logic_error("unknown bound kind");
}

// Two sides of the defining inequality at a particular n. For ham the
// condition is lhs <= rhs; for the others it is lhs >= rhs.
struct Witness {
  Bigint lhs;
  Bigint rhs;
};

struct BoundResult {
  BoundKind kind;
  std::int64_t k;
  std::int64_t e;
  std::int64_t n;
  Witness witness_at_n;
  Witness witness_below;
};

// |B(n, e)| = sum_{i=0}^{e} binomial(n, i), the ball of radius e in {0,1}^n.
inline Bigint sphere_volume(std::int64_t n, std::int64_t e) {
  if (e < 0 || e > n) throw DomainError("sphere radius must satisfy 0 <= e <= n");
  Bigint total = 0;
  for (std::int64_t i = 0; i <= e; ++i) total += binomial(n, i);
  return total;
}

// Smallest n >= k with sphere_volume(n, e) * 2^k <= 2^n. Lengths n < e cannot
// host a radius-e ball and count as failures.
inline BoundResult hamming_bound(std::int64_t k, std::int64_t e) {
  const BoundQuery q(k, e);
  const auto holds = [&](std::int64_t n) {
    if (n < q.e) return false;
    return sphere_volume(n, q.e) * pow2(q.k) <= pow2(n);
  };
  std::int64_t n = q.k;
  // At n = k the ball has at least 1 + n points (n >= 1), so the scan always
  // advances at least once and the witness below the answer is well defined.
  assert(!holds(n));
  while (!holds(n)) ++n;
  // Sanity floor: packing e errors needs n >= k + 2e.
  if (n < q.k + 2 * q.e) throw std::logic_error("hamming bound fell below k + 2e");
  const auto witness = [&](std::int64_t m) {
    return Witness{sphere_volume(m, q.e) * pow2(q.k), pow2(m)};
  };
  return BoundResult{BoundKind::ham, q.k, q.e, n, witness(n), witness(n - 1)};
}

namespace detail {

// The e = 1 condition 2^(n-k) >= n + 1, evaluated in machine words:
// 2^m >= n + 1 is exactly m >= bit_width(n).
inline std::int64_t n_single_value(std::int64_t k) {
  std::int64_t n = k + 1;
  while (n - k < static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(n)))) ++n;
  return n;
}

}  // namespace detail

// Smallest n with 2^(n-k) >= n + 1: the e = 1 bound by direct scan.
inline BoundResult n_single_scan(std::int64_t k) {
  const BoundQuery q(k, 1);
  const std::int64_t n = detail::n_single_value(q.k);
  const auto witness = [&](std::int64_t m) { return Witness{pow2(m - q.k), Bigint(m + 1)}; };
  return BoundResult{BoundKind::n1_scan, q.k, 1, n, witness(n), witness(n - 1)};
}

// Closed form for the e = 1 bound: k + 1 + floor(log2(k + 1 + floor(log2 k))).
inline std::int64_t nl_single_formula(std::int64_t k) {
  const BoundQuery q(k, 1);
  return q.k + 1 + floor_log2(q.k + 1 + floor_log2(q.k));
}

// Same value packaged with the scan's witnesses, for uniform reporting.
inline BoundResult nl_single_formula_result(std::int64_t k) {
  const BoundQuery q(k, 1);
  const std::int64_t n = nl_single_formula(q.k);
  const auto witness = [&](std::int64_t m) { return Witness{pow2(m - q.k), Bigint(m + 1)}; };
  return BoundResult{BoundKind::n1_formula, q.k, 1, n, witness(n), witness(n - 1)};
}

// Dimensions k in [1, k_max - 1] where the e = 1 bound jumps by 2 from k to
// k + 1; these are exactly k = 2^s - s - 1 for s >= 2.
inline std::vector<std::int64_t> step_positions(std::int64_t k_max) {
  if (k_max < 2) throw DomainError("step scan needs k_max >= 2");
  std::vector<std::int64_t> out;
  std::int64_t prev = detail::n_single_value(1);
  for (std::int64_t k = 1; k < k_max; ++k) {
    const std::int64_t next = detail::n_single_value(k + 1);
    if (next - prev == 2) out.push_back(k);
    prev = next;
  }
  return out;
}

struct PackingEvaluation {
  Bigint lhs;
  Bigint rhs;
  bool holds;
};

// The coset packing inequality at length n, dimension k, error count e:
//
//   floor(n/(e+1)) * (2^(n-k) - |B(n,e)|) + floor((n-e)/(e+1)) * binomial(n,e)
//     >= binomial(n, e+1)
//
// It counts, coset by coset, vectors of weight e + 1 that each coset can
// absorb: cosets of weight > e contribute at most floor(n/(e+1)) each, and
// the binomial(n, e) cosets of weight exactly e at most floor((n-e)/(e+1)).
inline PackingEvaluation packing_inequality(std::int64_t n, std::int64_t k, std::int64_t e) {
  if (e < 0) throw DomainError("error count e must be >= 0");
  if (n < e) throw DomainError("length n must be >= e");
  if (k < 0 || k > n) throw DomainError("dimension k must satisfy 0 <= k <= n");
  const Bigint lhs = Bigint(n / (e + 1)) * (pow2(n - k) - sphere_volume(n, e)) +
                     Bigint((n - e) / (e + 1)) * binomial(n, e);
  const Bigint rhs = binomial(n, e + 1);
  return PackingEvaluation{lhs, rhs, lhs >= rhs};
}

// Smallest n where the packing inequality holds, scanned from n = k + 2e.
inline BoundResult coset_bound(std::int64_t k, std::int64_t e) {
  const BoundQuery q(k, e);
  std::int64_t n = q.k + 2 * q.e;
  while (!packing_inequality(n, q.k, q.e).holds) ++n;
  const auto witness = [&](std::int64_t m) {
    const auto ev = packing_inequality(m, q.k, q.e);
    return Witness{ev.lhs, ev.rhs};
  };
  return BoundResult{BoundKind::coset_c, q.k, q.e, n, witness(n), witness(n - 1)};
}

}  // namespace codelen::bounds
