#include <random>

#include "doctest.h"
#include "knotfiber/int_poly.hpp"
#include "knotfiber/laurent.hpp"

using namespace knotfiber;

namespace {

LaurentPoly P1(const char* s) { return parse_laurent(s, 1); }
LaurentPoly P2(const char* s) { return parse_laurent(s, 2); }

LaurentPoly random_poly(std::mt19937& rng, int vars) {
  std::uniform_int_distribution<int> n_terms(0, 4), e(-3, 3), c(-4, 4);
  std::vector<LaurentPoly::Term> terms;
  for (int i = n_terms(rng); i > 0; --i)
    terms.push_back({{e(rng), vars == 2 ? e(rng) : 0}, c(rng)});
  return LaurentPoly::from_terms(vars, terms);
}

}  // namespace

TEST_CASE("addition cancels and merges") {
  CHECK(P2("x + 1") + P2("-x") == P2("1"));
  CHECK(P2("x^-2 + y") + P2("x^-2") == P2("2*x^-2 + y"));
  const auto p = P2("3*x*y^-1 - 7");
  CHECK(p + LaurentPoly(2) == p);
  CHECK((P2("x") - P2("x")).is_zero());
}

TEST_CASE("multiplication") {
  CHECK(P2("x - 1") * P2("x + 1") == P2("x^2 - 1"));
  const auto p = P2("x^-1*y^2 + 5");
  CHECK(p * LaurentPoly::constant(2, 1) == p);
  CHECK(P1("t^-1 - 1 + t") * P1("t") == P1("1 - t + t^2"));
}

TEST_CASE("variable-count mismatch is rejected") {
  CHECK_THROWS_AS(P1("t") + P2("x"), std::invalid_argument);
  CHECK_THROWS_AS(P1("t") * P2("x"), std::invalid_argument);
}

TEST_CASE("unit normalization") {
  auto n = normalize_units(P1("-t^-3 + t^-2 - t^-1"));
  CHECK(n.canonical == P1("1 - t + t^2"));
  CHECK(n.sign == -1);
  CHECK(n.shift == -3);

  n = normalize_units(P1("5"));
  CHECK(n.canonical == P1("5"));
  CHECK(n.sign == 1);
  CHECK(n.shift == 0);

  n = normalize_units(P1("t^4 - 5*t^3 + 7*t^2 - 5*t + 1"));
  CHECK(n.canonical == P1("1 - 5*t + 7*t^2 - 5*t^3 + t^4"));
  CHECK(n.sign == 1);

  n = normalize_units(LaurentPoly(1));
  CHECK(n.canonical.is_zero());
  CHECK(n.sign == 1);
}

TEST_CASE("span") {
  CHECK(span(P2("1"), 0) == std::pair{0, 0});
  CHECK(span(P2("x^-2*y + x^4"), 0) == std::pair{-2, 4});
  CHECK(span(P2("x^-2*y + x^4"), 1) == std::pair{0, 1});
  CHECK_THROWS_AS(span(LaurentPoly(2), 0), std::domain_error);
}

TEST_CASE("rendering and parsing round trip") {
  CHECK(to_string(P2("3 - x^-2*y")) == "-x^-2*y + 3");
  CHECK(to_string(LaurentPoly(1)) == "0");
  CHECK(to_string(P1("1 - t + t^2")) == "1 - t + t^2");
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng, 1 + i % 2);
    CHECK(parse_laurent(to_string(p), p.num_vars()) == p);
  }
  CHECK_THROWS_AS(P1("t^"), std::invalid_argument);
  CHECK_THROWS_AS(P1("2 * * t"), std::invalid_argument);
  CHECK_THROWS_AS(P1("x"), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int v = 1 + i % 2;
    const auto a = random_poly(rng, v), b = random_poly(rng, v), c = random_poly(rng, v);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("normalization is idempotent") {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng, 1);
    const auto n = normalize_units(a);
    const auto again = normalize_units(n.canonical);
    CHECK(again.canonical == n.canonical);
    CHECK(again.sign == 1);
    CHECK(again.shift == 0);
    // a = sign * t^shift * canonical
    CHECK(n.canonical.shifted({n.shift, 0}).scaled(n.sign) == a);
  }
}

TEST_CASE("span is additive under multiplication") {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng, 1), b = random_poly(rng, 1);
    if (a.is_zero() || b.is_zero()) continue;
    const auto sa = span(a, 0), sb = span(b, 0), sab = span(a * b, 0);
    CHECK(sab.first == sa.first + sb.first);
    CHECK(sab.second == sa.second + sb.second);
  }
}

TEST_CASE("integer polynomial gcd and exact division") {
  int s = 0;
  const auto a = IntPoly::from_laurent(P1("1 - t + t^2"), s);
  const auto b = IntPoly::from_laurent(P1("1 - t"), s);
  const auto c = IntPoly::from_laurent(P1("2 + 3*t"), s);
  CHECK(gcd(a * c, b * c) == c);
  CHECK(gcd((a * b).scaled(6), (b * c).scaled(4)) == primitive_part(b).scaled(2));
  CHECK(divexact(a * b, b) == a);
  CHECK_THROWS_AS(divexact(a, b), std::domain_error);
  CHECK(gcd(IntPoly{}, IntPoly{}).is_zero());
}
