#include <doctest.h>

#include <cmath>
#include <numbers>

#include "artin/errors.hpp"
#include "artin/exact_arith.hpp"
#include "support/generators.hpp"

using namespace artin::exact;

namespace {

  RatPoly poly(std::initializer_list<int> coeffs) {
    RatPoly p;
    for (int c : coeffs) {
      p.emplace_back(c);
    }
    return p;
  }

  unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        while (n % p == 0) {
          n /= p;
        }
        result -= result / p;
      }
    }
    if (n > 1) {
      result -= result / n;
    }
    return result;
  }

  ExactReal constant(ContextPtr const& ctx, int q) { return ExactReal::from_rational(ctx, Rational(q)); }

}  // namespace

TEST_CASE("minimal polynomials of small cases") {
  CHECK(minpoly_two_cos(1) == poly({2, 1}));
  CHECK(minpoly_two_cos(2) == poly({0, 1}));
  CHECK(minpoly_two_cos(3) == poly({-1, 1}));
  CHECK(minpoly_two_cos(4) == poly({-2, 0, 1}));
  CHECK(minpoly_two_cos(5) == poly({-1, -1, 1}));
  CHECK(minpoly_two_cos(6) == poly({-3, 0, 1}));
}

TEST_CASE("minimal polynomial degree and root") {
  for (unsigned L = 1; L <= 60; ++L) {
    CAPTURE(L);
    auto p = minpoly_two_cos(L);
    unsigned expected = L == 1 ? 1 : euler_phi(2 * L) / 2;
    CHECK(p.size() == expected + 1);
    CHECK(p.back() == 1);
    double theta = 2.0 * std::cos(std::numbers::pi / L);
    double scale = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      scale += std::abs(p[k].get_d()) * std::pow(std::abs(theta), double(k));
    }
    CHECK(std::abs(evaluate(p, theta)) < 1e-12 * (scale + 1));
  }
}

TEST_CASE("chebyshev polynomials satisfy the defining identity") {
  for (unsigned k = 0; k <= 12; ++k) {
    double z = 1.3;
    CHECK(evaluate(chebyshev_c(k), z + 1 / z) == doctest::Approx(std::pow(z, k) + std::pow(z, -double(k))));
  }
}

TEST_CASE("field arithmetic examples") {
  auto c4 = FieldContext::make(4);
  auto t4 = ExactReal::theta(c4);
  CHECK(t4 * t4 == constant(c4, 2));
  CHECK(t4.inverse() == t4 / constant(c4, 2));

  auto c5 = FieldContext::make(5);
  auto t5 = ExactReal::theta(c5);
  CHECK(t5 * t5 - t5 == constant(c5, 1));
  CHECK(-(-t5) == t5);
  CHECK((t5 - t5).is_zero());
  CHECK(t5.to_double() == doctest::Approx(2 * std::cos(std::numbers::pi / 5)));
}

TEST_CASE("field arithmetic errors") {
  auto c4 = FieldContext::make(4);
  auto c5 = FieldContext::make(5);
  auto zero = ExactReal(c4);
  CHECK_THROWS_AS(zero.inverse(), artin::DomainError);
  CHECK_THROWS_AS(ExactReal::theta(c4) / zero, artin::DomainError);
  CHECK_THROWS_AS((void)(ExactReal::theta(c4) == ExactReal::theta(c5)), artin::DomainError);
  CHECK_THROWS_AS(ExactReal::theta(c4) + ExactReal::theta(c5), artin::DomainError);
}

TEST_CASE("embedding of 2cos(pi/m)") {
  auto c6 = FieldContext::make(6);
  CHECK(embed_two_cos(2, c6).is_zero());
  CHECK(embed_two_cos(3, c6) == constant(c6, 1));
  CHECK(embed_two_cos(6, c6) == ExactReal::theta(c6));
  CHECK(embed_two_cos(1, c6) == constant(c6, -2));
  CHECK_THROWS_AS(embed_two_cos(4, c6), artin::DomainError);

  for (unsigned L : {12u, 20u, 30u, 60u}) {
    auto ctx = FieldContext::make(L);
    for (unsigned m = 1; m <= L; ++m) {
      if (L % m == 0) {
        CAPTURE(L);
        CAPTURE(m);
        CHECK(embed_two_cos(m, ctx).to_double() == doctest::Approx(2 * std::cos(std::numbers::pi / m)));
      }
    }
  }
}

TEST_CASE("field axioms on seeded samples") {
  testgen::Rng rng(20261019);
  for (unsigned L : {5u, 7u, 8u, 12u, 15u}) {
    auto ctx = FieldContext::make(L);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = testgen::random_real(rng, ctx);
      auto b = testgen::random_real(rng, ctx);
      auto c = testgen::random_real(rng, ctx);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == constant(ctx, 1));
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("exact values track floating point on random expressions") {
  testgen::Rng rng(7);
  for (unsigned L : {5u, 9u, 12u}) {
    auto ctx = FieldContext::make(L);
    for (int trial = 0; trial < 100; ++trial) {
      auto x = testgen::random_real(rng, ctx);
      double xd = x.to_double();
      for (int depth = 0; depth < 8; ++depth) {
        auto y = testgen::random_real(rng, ctx);
        double yd = y.to_double();
        switch (rng() % 4) {
          case 0: x += y; xd += yd; break;
          case 1: x -= y; xd -= yd; break;
          case 2: x *= y; xd *= yd; break;
          default:
            if (!y.is_zero()) {
              x /= y;
              xd /= yd;
            }
        }
      }
      CHECK(x.to_double() == doctest::Approx(xd).epsilon(1e-6));
    }
  }
}
