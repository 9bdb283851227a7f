#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "codelen/errors.hpp"
#include "codelen/gf2.hpp"
#include "test_support.hpp"

using namespace codelen;
using gf2::BinaryMatrix;
using gf2::Word;

TEST_CASE("word text form puts coordinate 0 leftmost", "[gf2]") {
  const Word w = Word::parse("1110000");
  CHECK(w.length() == 7);
  CHECK(w.bits() == 0b0000111);
  CHECK(w.str() == "1110000");
  CHECK(w.bit(0));
  CHECK(w.bit(2));
  CHECK_FALSE(w.bit(3));
  CHECK(Word::parse(w.str()) == w);
}

TEST_CASE("word constructors validate their input", "[gf2]") {
  CHECK_THROWS_AS(Word(0, 0), DomainError);
  CHECK_THROWS_AS(Word(65, 0), DomainError);
  CHECK_THROWS_AS(Word(3, 0b1000), DomainError);
  CHECK_THROWS_AS(Word::unit(3, 3), DomainError);
  CHECK_THROWS_AS(Word::parse(""), DomainError);
  CHECK_THROWS_AS(Word::parse("01x"), DomainError);
  CHECK(Word::zero(5).bits() == 0);
  CHECK(Word::unit(5, 4).bits() == 0b10000);
  CHECK(Word(64, ~std::uint64_t{0}).str() == std::string(64, '1'));
}

TEST_CASE("word xor, and, weight, distance", "[gf2]") {
  const Word a = Word::parse("1100");
  const Word b = Word::parse("1010");
  CHECK((a ^ b) == Word::parse("0110"));
  CHECK((a & b) == Word::parse("1000"));
  CHECK(gf2::weight(a) == 2);
  CHECK(gf2::distance(a, b) == 2);
  CHECK(gf2::distance(a, a) == 0);
  CHECK_THROWS_AS(a ^ Word::parse("110"), LengthMismatchError);
  CHECK_THROWS_AS(a & Word::parse("110"), LengthMismatchError);
  CHECK_THROWS_AS(gf2::distance(a, Word::parse("11000")), LengthMismatchError);
}

TEST_CASE("distance identity against weights of xor and and", "[gf2]") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int len = 1 + static_cast<int>(rng() % 64);
    const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
    const Word u(len, (static_cast<std::uint64_t>(rng()) << 32 | rng()) & mask);
    const Word v(len, (static_cast<std::uint64_t>(rng()) << 32 | rng()) & mask);
    REQUIRE(gf2::distance(u, v) == gf2::weight(u) + gf2::weight(v) - 2 * gf2::weight(u & v));
  }
}

TEST_CASE("matrix construction from rows and from columns agree", "[gf2]") {
  const auto m = BinaryMatrix::from_rows({Word::parse("101"), Word::parse("011")});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.column_bits(0) == 0b01);
  CHECK(m.column_bits(1) == 0b10);
  CHECK(m.column_bits(2) == 0b11);
  CHECK(m == BinaryMatrix::from_columns(2, {1, 2, 3}));
  CHECK(m.at(0, 0));
  CHECK_FALSE(m.at(0, 1));
  CHECK(m.row(1) == Word::parse("011"));
  CHECK_THROWS_AS(BinaryMatrix::from_rows({}), DomainError);
  CHECK_THROWS_AS(BinaryMatrix::from_rows({Word::parse("10"), Word::parse("100")}), DomainError);
  CHECK_THROWS_AS(BinaryMatrix::from_columns(2, {1, 4}), DomainError);
  CHECK_THROWS_AS(BinaryMatrix::from_columns(65, {1}), DomainError);
}

TEST_CASE("matrix text form round trips", "[gf2]") {
  const auto m = BinaryMatrix::from_columns(3, {1, 2, 4, 3, 5, 6, 7});
  CHECK(m.to_text() == "1001101\n0101011\n0010111\n");
  CHECK(BinaryMatrix::parse(m.to_text()) == m);
  CHECK(BinaryMatrix::parse("101\n011") == BinaryMatrix::from_columns(2, {1, 2, 3}));
  CHECK_THROWS_AS(BinaryMatrix::parse(""), DomainError);
  CHECK_THROWS_AS(BinaryMatrix::parse("10\n0"), DomainError);
}

TEST_CASE("matrix-vector product over GF(2)", "[gf2]") {
  const auto m = BinaryMatrix::from_rows({Word::parse("1101"), Word::parse("0111")});
  CHECK(m.mul(Word::parse("1000")) == Word::parse("10"));
  CHECK(m.mul(Word::parse("1101")) == Word::parse("10"));
  CHECK(m.mul(Word::parse("0000")) == Word::parse("00"));
  CHECK_THROWS_AS(m.mul(Word::parse("100")), LengthMismatchError);
  const auto id = BinaryMatrix::identity(6);
  for (int i = 0; i < 6; ++i) CHECK(id.mul(Word::unit(6, i)) == Word::unit(6, i));
}

TEST_CASE("rank agrees with elimination over int vectors", "[gf2]") {
  CHECK(gf2::rank(BinaryMatrix::identity(8)) == 8);
  CHECK(gf2::rank(BinaryMatrix::from_rows({Word::parse("110"), Word::parse("110")})) == 1);
  CHECK(gf2::rank(BinaryMatrix::from_rows({Word::parse("000")})) == 0);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 8);
    const int cols = 1 + static_cast<int>(rng() % 10);
    std::vector<Word> rws;
    for (int i = 0; i < rows; ++i)
      rws.push_back(Word(cols, rng() & ((std::uint64_t{1} << cols) - 1)));
    const auto m = BinaryMatrix::from_rows(rws);
    REQUIRE(gf2::rank(m) == oracle::rank_by_elimination(m));
  }
}

TEST_CASE("null space basis spans exactly the kernel", "[gf2]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 2 + static_cast<int>(rng() % 9);
    std::vector<Word> rws;
    for (int i = 0; i < rows; ++i)
      rws.push_back(Word(cols, rng() & ((std::uint64_t{1} << cols) - 1)));
    const auto h = BinaryMatrix::from_rows(rws);
    const auto basis = gf2::null_space_basis(h);
    REQUIRE(static_cast<int>(basis.size()) == cols - gf2::rank(h));
    for (const auto& b : basis) REQUIRE(h.mul(b).bits() == 0);
    if (!basis.empty())
      REQUIRE(gf2::rank(BinaryMatrix::from_rows(basis)) == static_cast<int>(basis.size()));

    const auto enumerated = gf2::null_space_enumeration(h);
    REQUIRE(enumerated.front() == Word::zero(cols));
    std::set<std::uint64_t> got;
    for (const auto& w : enumerated) got.insert(w.bits());
    std::set<std::uint64_t> expect;
    for (const auto& w : oracle::kernel_by_filter(h)) expect.insert(w.bits());
    REQUIRE(got == expect);
    REQUIRE(enumerated.size() == expect.size());
  }
}

TEST_CASE("null space enumeration on one-row and full-rank matrices", "[gf2]") {
  const auto pair_check = BinaryMatrix::from_rows({Word::parse("11")});
  std::set<std::uint64_t> got;
  for (const auto& w : gf2::null_space_enumeration(pair_check)) got.insert(w.bits());
  CHECK(got == std::set<std::uint64_t>{0b00, 0b11});

  const auto full = gf2::null_space_enumeration(BinaryMatrix::identity(2));
  REQUIRE(full.size() == 1);
  CHECK(full.front() == Word::zero(2));
}

TEST_CASE("null space enumeration refuses beyond its budget", "[gf2]") {
  const auto h = BinaryMatrix::from_rows({Word(20, 1)});
  CHECK_THROWS_AS(gf2::null_space_enumeration(h, 10), CapError);
  CHECK(gf2::null_space_enumeration(h, 19).size() == std::size_t{1} << 19);
}

TEST_CASE("linear code from a check matrix", "[gf2]") {
  const auto h = BinaryMatrix::from_columns(3, {1, 2, 4, 3, 5, 6, 7});
  const auto code = gf2::LinearCode::from_check_matrix(h);
  CHECK(code.n() == 7);
  CHECK(code.k() == 4);
  CHECK(code.min_distance_known());
  CHECK(code.min_distance() == 3);
  CHECK(code.min_distance() == oracle::brute_min_weight(h));
  for (int i = 0; i < code.generator().rows(); ++i)
    CHECK(code.syndrome(code.generator().row(i)).bits() == 0);
  CHECK(code.syndrome(Word::unit(7, 3)) == Word(3, 3));

  CHECK_THROWS_AS(gf2::LinearCode::from_check_matrix(
                      BinaryMatrix::from_rows({Word::parse("110"), Word::parse("110")})),
                  DomainError);
  CHECK_THROWS_AS(gf2::LinearCode::from_check_matrix(BinaryMatrix::identity(3)), DomainError);
}

TEST_CASE("minimum distance enumeration respects the budget", "[gf2]") {
  const auto h = BinaryMatrix::from_columns(3, {1, 2, 4, 3, 5, 6, 7});
  const auto code = gf2::LinearCode::from_check_matrix(h, 2);
  CHECK_FALSE(code.min_distance_known());
  CHECK_THROWS_AS(code.min_distance(), CapError);
}

TEST_CASE("minimum distance matches brute force on random codes", "[gf2]") {
  std::mt19937 rng(23);
  int built = 0;
  while (built < 60) {
    const int rows = 2 + static_cast<int>(rng() % 4);
    const int cols = rows + 1 + static_cast<int>(rng() % 6);
    std::vector<Word> rws;
    for (int i = 0; i < rows; ++i)
      rws.push_back(Word(cols, rng() & ((std::uint64_t{1} << cols) - 1)));
    const auto h = BinaryMatrix::from_rows(rws);
    if (gf2::rank(h) != rows) continue;
    const auto code = gf2::LinearCode::from_check_matrix(h);
    REQUIRE(code.min_distance() == oracle::brute_min_weight(h));
    ++built;
  }
}

// Linearity: min nonzero codeword weight equals min pairwise distance.
TEST_CASE("minimum distance equals minimum pairwise codeword distance", "[gf2]") {
  std::mt19937 rng(29);
  int built = 0;
  while (built < 40) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = rows + 1 + static_cast<int>(rng() % (9 - rows));
    std::vector<Word> rws;
    for (int i = 0; i < rows; ++i)
      rws.push_back(Word(cols, rng() & ((std::uint64_t{1} << cols) - 1)));
    const auto h = BinaryMatrix::from_rows(rws);
    if (gf2::rank(h) != rows) continue;
    const auto code = gf2::LinearCode::from_check_matrix(h);
    REQUIRE(code.k() <= 8);
    const auto words = gf2::null_space_enumeration(h);
    int best = cols + 1;
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j)
        best = std::min(best, gf2::distance(words[i], words[j]));
    REQUIRE(code.min_distance() == best);
    ++built;
  }
}
