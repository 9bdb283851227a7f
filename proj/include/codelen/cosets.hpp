#pragma once

// Coset structure of a code, checked by exhaustive enumeration of {0,1}^n:
// every coset's minimum-weight representative, its weight, and how many
// weight-(e+1) vectors it contains. On top of the enumeration sit the
// structural facts that drive the coset packing bound:
//
//   (a) cosets of weight <= e are in bijection with the weight-<= e words,
//   (b) cosets of weight < e contain no weight-(e+1) vector,
//   (c) no coset contains more than floor(n/(e+1)) of them,
//   (d) cosets of weight exactly e at most floor((n-e)/(e+1)),
//
// and the aggregate count that sums those caps against binomial(n, e+1).

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "codelen/binomial.hpp"
#include "codelen/bounds.hpp"
#include "codelen/errors.hpp"
#include "codelen/gf2.hpp"

namespace codelen::cosets {

struct CosetRecord {
  gf2::Word representative;       // minimum weight, ties by smallest bit value
  int coset_weight;               // weight of that representative
  std::int64_t count_e_plus_1;    // number of weight-(e+1) vectors in the coset
};

// One record per syndrome value; records[s] describes the coset whose
// syndrome has bit value s.
struct CosetReport {
  gf2::LinearCode code;
  std::int64_t e;
  std::vector<CosetRecord> records;
};

// Walk all 2^n words in Gray-code order, updating word and syndrome by one
// column XOR per step, and bucket them by syndrome.
inline CosetReport enumerate_cosets(const gf2::LinearCode& code, std::int64_t e,
                                    int budget_bits = gf2::default_budget_bits) {
  if (e < 0) throw DomainError("error count e must be >= 0, got " + std::to_string(e));
  const int n = code.n();
  if (n > budget_bits)
    throw CapError("coset enumeration of 2^" + std::to_string(n) + " words exceeds the 2^" +
                   std::to_string(budget_bits) + " budget");
  if (e >= 1 && code.min_distance() < 2 * e + 1)
    throw DistanceTooSmallError("coset analysis at e = " + std::to_string(e) +
                                " needs minimum distance >= " + std::to_string(2 * e + 1) + ", code has " +
                                std::to_string(code.min_distance()));

  const int r = code.check().rows();
  std::vector<std::uint64_t> col(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) col[static_cast<std::size_t>(j)] = code.check().column_bits(j);

  struct Bucket {
    std::uint64_t best_bits = 0;
    int best_weight = std::numeric_limits<int>::max();
    std::int64_t count = 0;
    std::int64_t size = 0;
  };
  std::vector<Bucket> buckets(std::size_t{1} << r);

  const int target = static_cast<int>(e) + 1;
  std::uint64_t w = 0, s = 0;
  for (std::uint64_t i = 0;; ++i) {
    Bucket& b = buckets[static_cast<std::size_t>(s)];
    ++b.size;
    const int wt = std::popcount(w);
    if (wt < b.best_weight || (wt == b.best_weight && w < b.best_bits)) {
      b.best_weight = wt;
      b.best_bits = w;
    }
    if (wt == target) ++b.count;
    if (i + 1 == (std::uint64_t{1} << n)) break;
    const int j = std::countr_zero(i + 1);
    w ^= std::uint64_t{1} << j;
    s ^= col[static_cast<std::size_t>(j)];
  }

  const std::int64_t coset_size = std::int64_t{1} << code.k();
  std::vector<CosetRecord> records;
  records.reserve(buckets.size());
  for (const Bucket& b : buckets) {
    if (b.size != coset_size) throw std::logic_error("syndrome classes do not partition evenly");
    records.push_back(CosetRecord{gf2::Word(n, b.best_bits), b.best_weight, b.count});
  }
  return CosetReport{code, e, std::move(records)};
}

struct LemmaPart {
  bool pass = true;
  std::optional<std::uint64_t> counterexample_syndrome;
};

struct LemmaVerification {
  LemmaPart a;  // #cosets of weight <= e equals the ball volume
  LemmaPart b;  // weight < e implies no weight-(e+1) vectors
  LemmaPart c;  // every count <= floor(n/(e+1))
  LemmaPart d;  // weight == e implies count <= floor((n-e)/(e+1))

  bool all_pass() const { return a.pass && b.pass && c.pass && d.pass; }
};

namespace detail {

// On an (a) failure, two weight-<= e words share a syndrome; find one such
// syndrome by scanning the weight classes with Gosper's combination advance.
// Enumeration budgets keep n far below 64, so v >> n is a valid end test.
inline std::optional<std::uint64_t> find_low_weight_collision(const gf2::LinearCode& code,
                                                              std::int64_t e) {
  const int n = code.n();
  if (n >= gf2::max_word_bits) return std::nullopt;
  std::vector<bool> seen(std::size_t{1} << code.check().rows(), false);
  seen[0] = true;  // weight-0 word
  for (int wt = 1; wt <= e && wt <= n; ++wt) {
    for (std::uint64_t v = (std::uint64_t{1} << wt) - 1; (v >> n) == 0;) {
      const std::uint64_t s = code.syndrome(gf2::Word(n, v)).bits();
      if (seen[static_cast<std::size_t>(s)]) return s;
      seen[static_cast<std::size_t>(s)] = true;
      const std::uint64_t low = v & (~v + 1);
      const std::uint64_t ripple = v + low;
      v = ripple | (((v ^ ripple) >> 2) / low);
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline LemmaVerification verify_lemma(const CosetReport& report) {
  const int n = report.code.n();
  const std::int64_t e = report.e;
  LemmaVerification out;

  Bigint low_weight_cosets = 0;
  for (const CosetRecord& rec : report.records)
    if (rec.coset_weight <= e) ++low_weight_cosets;
  if (low_weight_cosets != bounds::sphere_volume(n, e)) {
    out.a.pass = false;
    out.a.counterexample_syndrome = detail::find_low_weight_collision(report.code, e);
  }

  const std::int64_t cap_any = n / (e + 1);
  const std::int64_t cap_at_e = (n - e) / (e + 1);
  for (std::size_t s = 0; s < report.records.size(); ++s) {
    const CosetRecord& rec = report.records[s];
    if (out.b.pass && rec.coset_weight < e && rec.count_e_plus_1 != 0) {
      out.b.pass = false;
      out.b.counterexample_syndrome = s;
    }
    if (out.c.pass && rec.count_e_plus_1 > cap_any) {
      out.c.pass = false;
      out.c.counterexample_syndrome = s;
    }
    if (out.d.pass && rec.coset_weight == e && rec.count_e_plus_1 > cap_at_e) {
      out.d.pass = false;
      out.d.counterexample_syndrome = s;
    }
  }
  return out;
}

struct TheoremCounts {
  bounds::PackingEvaluation evaluation;  // the packing inequality at (n, k, e)
  Bigint observed_total;                 // sum of per-coset weight-(e+1) counts
  Bigint cap_sum;                        // sum of per-coset caps from the observed weights
  bool total_within_caps;                // every coset count within its cap
  bool total_within_formula;             // observed_total <= evaluation.lhs
};

// Checks the counting argument behind the packing inequality on a concrete
// code: each weight-(e+1) vector lands in exactly one coset, each coset
// absorbs at most its cap, and the caps sum to the inequality's left side.
inline TheoremCounts verify_theorem_counts(const CosetReport& report) {
  const int n = report.code.n();
  const std::int64_t e = report.e;
  auto evaluation = bounds::packing_inequality(n, report.code.k(), e);

  const std::int64_t cap_any = n / (e + 1);
  const std::int64_t cap_at_e = (n - e) / (e + 1);
  Bigint observed = 0, caps = 0;
  bool within = true;
  for (const CosetRecord& rec : report.records) {
    observed += rec.count_e_plus_1;
    const std::int64_t cap = rec.coset_weight < e ? 0 : rec.coset_weight == e ? cap_at_e : cap_any;
    caps += cap;
    if (rec.count_e_plus_1 > cap) within = false;
  }
  const bool within_formula = observed <= evaluation.lhs;
  return TheoremCounts{std::move(evaluation), std::move(observed), std::move(caps), within,
                       within_formula};
}

}  // namespace codelen::cosets
