#include "pln/error.hpp"
#include "pln/linalg.hpp"
#include "pln/scalar.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace pln;

namespace {

Scalar random_element(std::mt19937_64& rng, long long n) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  std::array<Rational, 4> c;
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Scalar::from_coeffs(n, c);
}

}  // namespace

TEST_CASE("quarter powers fold back to integers", "[scalar]") {
  for (long long n : {2, 3, 5, 6, 7}) {
    Scalar x = Scalar::quarter_power(n, 1);
    CHECK(x * x * x * x == Scalar(n));
    CHECK(Scalar::quarter_power(n, 2) * Scalar::quarter_power(n, 2) == Scalar(n));
    CHECK(Scalar::quarter_power(n, -1) * x == Scalar(1));
    CHECK_FALSE(x.is_rational());
  }
  // 4^{1/4} = sqrt 2, 16^{1/4} = 2, 9^{1/4} = sqrt 3
  CHECK(Scalar::quarter_power(4, 2) == Scalar(2));
  CHECK(Scalar::quarter_power(16, 1) == Scalar(2));
  CHECK(Scalar::quarter_power(16, 1).is_rational());
  CHECK(Scalar::quarter_power(9, 1) * Scalar::quarter_power(9, 1) == Scalar(3));
  CHECK_FALSE(Scalar::quarter_power(9, 1).is_rational());
  CHECK(Scalar::quarter_power(1, 3) == Scalar(1));
  CHECK(Scalar::quarter_power(3, 8) == Scalar(9));
}

TEST_CASE("field axioms on random elements of Q(n^{1/4})", "[scalar]") {
  std::mt19937_64 rng(7);
  for (long long n : {2, 3, 4, 12}) {
    for (int t = 0; t < 40; ++t) {
      Scalar a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == Scalar(0));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
      // double evaluation is a ring homomorphism up to rounding
      CHECK(std::abs((a * b).to_double() - a.to_double() * b.to_double()) <
            1e-9 * (1 + std::abs(a.to_double() * b.to_double())));
    }
  }
}

TEST_CASE("scalar values and ordering agree with floating point", "[scalar]") {
  CHECK(Scalar::quarter_power(3, 1).to_double() == Catch::Approx(std::pow(3.0, 0.25)));
  CHECK(Scalar::quarter_power(5, 3).to_double() == Catch::Approx(std::pow(5.0, 0.75)));
  // 3^{1/4} = 1.316074...
  Scalar x = Scalar::quarter_power(3, 1);
  CHECK(x > Scalar(Rational(1316, 1000)));
  CHECK(x < Scalar(Rational(1317, 1000)));
  CHECK((x - Scalar(Rational(1316074, 1000000))).sign() == 1);
  CHECK((x - Scalar(Rational(1316075, 1000000))).sign() == -1);
  CHECK(Scalar(0).sign() == 0);
}

TEST_CASE("different radicands do not mix", "[scalar]") {
  CHECK_THROWS_AS(Scalar::quarter_power(2, 1) + Scalar::quarter_power(3, 1), IncompatibleRadicands);
  // rationals combine with anything
  CHECK_NOTHROW(Scalar::quarter_power(2, 1) + Scalar(Rational(1, 2)));
  // an irrational part that cancels releases the radicand
  Scalar y = Scalar::quarter_power(2, 1) - Scalar::quarter_power(2, 1);
  CHECK(y.is_rational());
  CHECK_NOTHROW(y + Scalar::quarter_power(3, 1));
}

TEST_CASE("float mode compares with tolerance", "[scalar]") {
  Scalar a = Scalar::from_double(0.1 + 0.2), b = Scalar::from_double(0.3);
  CHECK_FALSE(a.is_exact());
  CHECK(a == b);
  CHECK(a != Scalar::from_double(0.3 + 1e-6));
  CHECK(Scalar::from_double(std::sqrt(2.0)) == Scalar::quarter_power(2, 2));
}

TEST_CASE("rational parsing", "[scalar]") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == Rational(-4));
  CHECK(parse_rational("+2/3") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("2/"), Error);
}

TEST_CASE("exact elimination over Scalar", "[scalar][linalg]") {
  Scalar r = Scalar::quarter_power(3, 1);
  Mat<Scalar> m(3, 3);
  m << Scalar(1), r, r * r, r, r * r, r * r * r, Scalar(2), Scalar(0), Scalar(1);
  // rows 0 and 1 are proportional
  CHECK(rank(m) == 2);
  Mat<Scalar> id = Mat<Scalar>::Identity(3, 3);
  CHECK(rank(id) == 3);
  CHECK(is_positive_definite(id));
  Mat<Scalar> neg = -id;
  CHECK_FALSE(is_positive_definite(neg));
  Vec<Scalar> b(3);
  b << Scalar(1), r, Scalar(3);
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  Vec<Scalar> back = m * *x;
  for (int i = 0; i < 3; ++i) CHECK(back(i) == b(i));
  b(1) = Scalar(5);
  CHECK_FALSE(solve(m, b).has_value());
}
