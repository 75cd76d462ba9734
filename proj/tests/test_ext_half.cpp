#include <doctest.h>

#include <random>

#include "permsing/error.hpp"
#include "permsing/ext_half.hpp"

using permsing::ExtHalf;

TEST_CASE("neg infinity absorbs addition") {
  auto inf = ExtHalf::neg_infinity();
  CHECK((inf + ExtHalf::integer(5)).is_neg_infinity());
  CHECK((ExtHalf::from_halves(-3) + inf).is_neg_infinity());
  CHECK((inf + inf).is_neg_infinity());
  CHECK((inf - ExtHalf::integer(2)).is_neg_infinity());
  CHECK_THROWS_AS(ExtHalf::integer(0) - inf, permsing::InvalidInput);
}

TEST_CASE("half-integer arithmetic stays exact") {
  auto a = ExtHalf::from_halves(3);   // 3/2
  auto b = ExtHalf::from_halves(-1);  // -1/2
  CHECK(a + b == ExtHalf::integer(1));
  CHECK((a + a).is_integer());
  CHECK(a - b == ExtHalf::integer(2));
  CHECK(b.numerator() == -1);
  CHECK(b.denominator() == 2);
}

TEST_CASE("order has -inf as minimum") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    auto x = ExtHalf::from_halves(dist(rng));
    CHECK(ExtHalf::neg_infinity() < x);
    CHECK_FALSE(x < ExtHalf::neg_infinity());
  }
  CHECK(ExtHalf::neg_infinity() == ExtHalf::neg_infinity());
  CHECK(ExtHalf::from_halves(-3) < ExtHalf::integer(-1));
  CHECK(max(ExtHalf::neg_infinity(), ExtHalf::from_halves(-1)) == ExtHalf::from_halves(-1));
}

TEST_CASE("text form round-trips") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-500, 500);
  for (int i = 0; i < 200; ++i) {
    auto x = ExtHalf::from_halves(dist(rng));
    CHECK(permsing::parse_ext_half(x.to_string()) == x);
  }
  CHECK(ExtHalf::neg_infinity().to_string() == "-inf");
  CHECK(ExtHalf::from_halves(-1).to_string() == "-1/2");
  CHECK(ExtHalf::integer(2).to_string() == "2");
  CHECK(permsing::parse_ext_half("-inf").is_neg_infinity());
  CHECK_THROWS_AS(permsing::parse_ext_half("1/3"), permsing::InvalidInput);
  CHECK_THROWS_AS(permsing::parse_ext_half("x"), permsing::InvalidInput);
}
