// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <sstream>

#include "borwein/io.hpp"
#include "borwein/series.hpp"

using borwein::BigInt;
using borwein::TruncatedSeries;

namespace {

TruncatedSeries from_list(std::initializer_list<long> values) {
  TruncatedSeries s(static_cast<std::int64_t>(values.size()) - 1);
  std::int64_t i = 0;
  for (long v : values) s.coeff(i++) = v;
  return s;
}

TruncatedSeries random_series(std::mt19937& rng, std::int64_t trunc) {
  TruncatedSeries s(trunc);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (std::int64_t i = 0; i <= trunc; ++i) s.coeff(i) = dist(rng);
  return s;
}

}  // namespace

TEST_CASE("binomial factor ops invert each other") {
  std::mt19937 rng(11);
  TruncatedSeries s = random_series(rng, 60);
  TruncatedSeries copy = s;
  copy.mul_one_minus_qk(7);
  copy.div_one_minus_qk(7);
  CHECK(copy == s);
}

TEST_CASE("multiplication truncates to the shorter operand") {
  TruncatedSeries a = from_list({1, 2, 3, 4, 5});
  TruncatedSeries b = from_list({1, -1});
  TruncatedSeries p = a * b;
  CHECK(p.trunc() == 1);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 1);
}

TEST_CASE("multiplication is commutative and associative up to truncation") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries a = random_series(rng, 30);
    TruncatedSeries b = random_series(rng, 30);
    TruncatedSeries c = random_series(rng, 30);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("divided_by inverts multiplication") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    TruncatedSeries a = random_series(rng, 40);
    TruncatedSeries b = random_series(rng, 40);
    b.coeff(0) = 1;
    CHECK((a * b).divided_by(b) == a);
  }
}

TEST_CASE("inverse times self is one") {
  std::mt19937 rng(31);
  TruncatedSeries b = random_series(rng, 25);
  b.coeff(0) = 1;
  CHECK(b * b.inverse() == TruncatedSeries::one(25));
  TruncatedSeries bad = from_list({2, 1});
  CHECK_THROWS(bad.inverse());
}

TEST_CASE("exact degree bookkeeping") {
  TruncatedSeries s = from_list({1, -1, -1, 1, 0, 0});
  s.mark_exact();
  REQUIRE(s.exact_degree().has_value());
  CHECK(*s.exact_degree() == 3);
  CHECK(s.is_palindromic());
  CHECK_THROWS(s.set_exact_degree(4));
}

TEST_CASE("csv and json serialization carry decimal text") {
  TruncatedSeries s = from_list({1, -2, 0});
  s.coeff(2) = BigInt("123456789012345678901234567890");
  s.label = "sample";
  std::ostringstream csv;
  borwein::write_csv(s, csv);
  CHECK(csv.str() ==
        "m,coefficient\n0,1\n1,-2\n2,123456789012345678901234567890\n");
  auto j = borwein::series_to_json(s);
  CHECK(j["label"] == "sample");
  CHECK(j["trunc"] == 2);
  CHECK(j["coeffs"][2] == "123456789012345678901234567890");
  CHECK(j["exact_degree"].is_null());
}
