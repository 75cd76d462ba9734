#include <doctest.h>

#include <random>
#include <set>

#include "as_oracle.hpp"
#include "permsing/error.hpp"
#include "permsing/oracle.hpp"
#include "permsing/strata.hpp"

using namespace permsing;

TEST_CASE("as_class_count examples") {
  CHECK(as_class_count(2, 2, 1) == 1);
  CHECK(oracle::translation_class_count(GaloisField::of_order(2), 1) == 1);
  CHECK(as_class_count(2, 4, 3) == 12);
  CHECK(oracle::translation_class_count(GaloisField::of_order(4), 3) == 12);
  CHECK(as_class_count(3, 3, 1) == 2);
  CHECK(oracle::translation_class_count(GaloisField::of_order(3), 1) == 2);
}

TEST_CASE("as_class_count preconditions") {
  CHECK_THROWS_AS(as_class_count(5, 5, 1), InvalidInput);
  CHECK_THROWS_AS(as_class_count(2, 3, 1), InvalidInput);
  CHECK_THROWS_AS(as_class_count(2, 6, 1), InvalidInput);
  CHECK_THROWS_AS(as_class_count(2, 128, 1), InvalidInput);
  CHECK_THROWS_AS(as_class_count(3, 243, 1), InvalidInput);
  CHECK_THROWS_AS(as_class_count(2, 2, 10), InvalidInput);
  CHECK_THROWS_AS(as_class_count(2, 2, 0), InvalidInput);
  CHECK_THROWS_AS(as_class_count(2, 2, 4), InvalidInput);
  CHECK_THROWS_AS(as_class_count(3, 9, 3), InvalidInput);
}

TEST_CASE("brute force, rank count and translation oracle agree") {
  for (std::int64_t q : {2, 4, 8, 3, 9}) {
    auto f = GaloisField::of_order(q);
    for (int m = 1; m <= 7; ++m) {
      if (oracle::ipow(static_cast<std::uint64_t>(q), m) > 70000) break;
      const auto brute = count_classes_brute_force(f, m);
      CHECK(brute == count_classes_by_rank(f, m));
      CHECK(brute == oracle::translation_class_count(f, m));
      if (m % f.characteristic() == 0) CHECK(brute == 0);
    }
  }
}

TEST_CASE("closed forms for p = 2 and p = 3") {
  for (std::uint64_t q : {2u, 4u})
    for (int m : {1, 3, 5}) CHECK(as_class_count(2, static_cast<std::int64_t>(q), m) == (q - 1) * oracle::ipow(q, (m - 1) / 2));
  for (std::uint64_t q : {3u, 9u})
    for (int j : {1, 2, 4, 5})
      CHECK(as_class_count(3, static_cast<std::int64_t>(q), j) == (q - 1) * oracle::ipow(q, j - j / 3 - 1));
}

TEST_CASE("large parameters fall back to rank counting") {
  // 81^9 parts cannot be enumerated; the rank route still gives the count.
  CHECK(as_class_count(3, 81, 8) == 80 * oracle::ipow(81, 8 - 8 / 3 - 1));
  CHECK(as_class_count(2, 64, 9) == 63 * oracle::ipow(64, 9 - 9 / 2 - 1));
}

TEST_CASE("reduction lands on pole orders prime to p and is surjective there") {
  for (std::int64_t q : {2, 4, 3, 9}) {
    auto f = GaloisField::of_order(q);
    const int p = f.characteristic();
    const int m = q <= 4 ? 6 : 4;
    ASQuotient quotient(f, m);
    std::set<std::vector<GaloisField::Element>> reps;
    const auto total = oracle::ipow(static_cast<std::uint64_t>(q), m);
    for (std::uint64_t code = 0; code < total; ++code) {
      PrincipalPart part{std::vector<GaloisField::Element>(static_cast<std::size_t>(m))};
      std::uint64_t rest = code;
      for (int i = 0; i < m; ++i) {
        part.coeffs[static_cast<std::size_t>(i)] = static_cast<GaloisField::Element>(rest % static_cast<std::uint64_t>(q));
        rest /= static_cast<std::uint64_t>(q);
      }
      auto rep = quotient.reduce(part);
      for (int i = p; i <= m; i += p) CHECK(rep.coeffs[static_cast<std::size_t>(i - 1)] == 0);
      reps.insert(rep.coeffs);
      // Parts already supported on orders prime to p are their own reps.
      bool coprime_support = true;
      for (int i = p; i <= m; i += p) coprime_support = coprime_support && part.coeffs[static_cast<std::size_t>(i - 1)] == 0;
      if (coprime_support) CHECK(rep == part);
    }
    const auto coprime = static_cast<int>(quotient.basis_pole_orders().size());
    CHECK(reps.size() == oracle::ipow(static_cast<std::uint64_t>(q), coprime));
  }
}

TEST_CASE("classes are invariant under adding Artin-Schreier images") {
  std::mt19937 rng(42);
  for (std::int64_t q : {4, 8, 9, 27}) {
    auto f = GaloisField::of_order(q);
    const int m = 8;
    ASQuotient quotient(f, m);
    std::uniform_int_distribution<GaloisField::Element> pick(0, static_cast<GaloisField::Element>(q - 1));
    for (int trial = 0; trial < 200; ++trial) {
      PrincipalPart x{std::vector<GaloisField::Element>(m)};
      for (auto& c : x.coeffs) c = pick(rng);
      PrincipalPart y{std::vector<GaloisField::Element>(m, 0)};
      for (int i = 1; i * f.characteristic() <= m; ++i) y.coeffs[static_cast<std::size_t>(i - 1)] = pick(rng);
      auto w = quotient.artin_schreier(y);
      PrincipalPart shifted{std::vector<GaloisField::Element>(m)};
      for (int i = 0; i < m; ++i) shifted.coeffs[static_cast<std::size_t>(i)] = f.add(x.coeffs[static_cast<std::size_t>(i)], w.coeffs[static_cast<std::size_t>(i)]);
      CHECK(quotient.equivalent(x, shifted));
      CHECK(quotient.reduce(w).pole_order() == 0);
    }
  }
}

TEST_CASE("artin_schreier rejects parts that overflow the pole bound") {
  ASQuotient quotient(GaloisField::of_order(4), 5);
  PrincipalPart f{{0, 0, 1, 0, 0}};
  CHECK_THROWS_AS(quotient.artin_schreier(f), InvalidInput);
  CHECK_THROWS_AS(ASQuotient(GaloisField::of_order(4), 0), InvalidInput);
}

TEST_CASE("discriminant_of_jump") {
  CHECK(discriminant_of_jump(3, 1) == 4);
  CHECK(discriminant_of_jump(2, 1) == 2);
  CHECK(dim_connected(2, 2, Characteristic::of(2)).is_finite());
  CHECK(discriminant_of_jump(3, 2) == 6);
  CHECK_THROWS_AS(discriminant_of_jump(3, 3), InvalidInput);
  CHECK_THROWS_AS(discriminant_of_jump(2, 0), InvalidInput);
}

TEST_CASE("verify_dimension_growth examples") {
  auto a = verify_dimension_growth(2, 2, 4, {2, 4});
  CHECK(a.predicted == ExtHalf::integer(2));
  REQUIRE(a.rows.size() == 2);
  CHECK(a.rows[0].count == 2);
  CHECK(a.rows[1].count == 12);
  CHECK(a.rows[1].measured_dimension == ExtHalf::integer(2));
  CHECK(a.ok);

  auto b = verify_dimension_growth(3, 3, 4, {3});
  CHECK(b.predicted == ExtHalf::integer(1));
  CHECK(b.rows[0].count == 2);
  CHECK(b.ok);

  auto c = verify_dimension_growth(2, 2, 3, {2});
  CHECK(c.predicted == ExtHalf::neg_infinity());
  CHECK(c.rows[0].count == 0);
  CHECK(c.rows[0].measured_dimension == ExtHalf::neg_infinity());
  CHECK(c.ok);

  auto d = verify_dimension_growth(3, 3, 8, {3, 9});
  CHECK(d.predicted == ExtHalf::neg_infinity());
  CHECK(d.ok);

  CHECK_THROWS_AS(verify_dimension_growth(5, 5, 4, {5}), InvalidInput);
  CHECK_THROWS_AS(verify_dimension_growth(2, 2, 4, {3}), InvalidInput);
  CHECK_THROWS_AS(verify_dimension_growth(2, 2, 4, {}), InvalidInput);
  CHECK_THROWS_AS(verify_dimension_growth(2, 2, 40, {2}), InvalidInput);
}

TEST_CASE("tame_totally_ramified_count examples") {
  CHECK(tame_totally_ramified_count(5, 2) == 2);
  CHECK(tame_totally_ramified_count(4, 3) == 3);
  CHECK(tame_totally_ramified_count(3, 2) == 2);
  CHECK_THROWS_AS(tame_totally_ramified_count(4, 2), InvalidInput);
  CHECK_THROWS_AS(tame_totally_ramified_count(6, 5), InvalidInput);
}

TEST_CASE("tame count does not depend on q, even without n-th roots of unity") {
  CHECK(tame_totally_ramified_count(2, 1) == 1);
  CHECK(tame_totally_ramified_count(2, 3) == 3);
  CHECK(tame_totally_ramified_count(2, 5) == 5);
  CHECK(tame_totally_ramified_count(3, 4) == 4);
  CHECK(tame_totally_ramified_count(5, 3) == 3);
  CHECK(tame_totally_ramified_count(7, 2) == 2);
  CHECK(tame_totally_ramified_count(9, 2) == 2);
}
