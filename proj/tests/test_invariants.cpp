#include <random>
#include <stdexcept>

#include "doctest.h"
#include "knotfiber/invariants.hpp"
#include "knotfiber/presentation.hpp"

using namespace knotfiber;

namespace {

LaurentPoly xy(const char* s) { return parse_laurent(s, 2); }
LaurentPoly t1(const char* s) { return parse_laurent(s, 1); }

LinkDiagram closure(int strands, std::vector<int> letters) {
  return braid_closure_diagram(BraidWord(strands, std::move(letters)));
}

LaurentPoly P(const BraidWord& b) { return homfly(braid_closure_diagram(b)); }

BraidWord random_braid(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len), gen(1, strands - 1), sgn(0, 1);
  std::vector<int> w;
  for (int i = len(rng); i > 0; --i) w.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
  return BraidWord(strands, w);
}

const LaurentPoly X = LaurentPoly::variable(2, 0);
const LaurentPoly Xi = LaurentPoly::variable(2, 0, -1);
const LaurentPoly Y = LaurentPoly::variable(2, 1);
const LaurentPoly Yi = LaurentPoly::variable(2, 1, -1);

}  // namespace

TEST_CASE("reduced Burau Alexander") {
  CHECK(burau_alexander(BraidWord(2, {1})) == t1("1"));
  CHECK(burau_alexander(BraidWord(2, {1, 1, 1})) == t1("1 - t + t^2"));
  for (int n = 0; n <= 3; ++n)
    CHECK(burau_alexander(beta_braid(n)) == t1("1 - 5*t + 7*t^2 - 5*t^3 + t^4"));
  CHECK_THROWS_AS(burau_alexander(BraidWord(2, {1, 1})), std::invalid_argument);
}

TEST_CASE("Burau of a braid times its inverse is the identity") {
  std::mt19937 rng(21);
  for (int i = 0; i < 10; ++i) {
    const auto b = random_braid(rng, 4, 6);
    const auto m = reduced_burau(b * b.inverse());
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c)
        CHECK(m[r][c] == (r == c ? t1("1") : LaurentPoly(1)));
  }
}

TEST_CASE("HOMFLY of small links") {
  CHECK(P(BraidWord(1)) == xy("1"));
  CHECK(P(BraidWord(2, {1})) == xy("1"));
  CHECK(P(BraidWord(2, {1, 1, 1})) == xy("-x^-4 - 2*x^-2 + x^-2*y^2"));
  CHECK(P(BraidWord(3, {1, -2, 1, -2})) == xy("-x^-2 - 1 - x^2 + y^2"));
  CHECK(P(BraidWord(2, {1, 1})) == xy("x^-3*y^-1 + x^-1*y^-1 - x^-1*y"));
}

TEST_CASE("unlink value is forced by the skein relation") {
  // x P(closure s1) + x^-1 P(closure s1^-1) + y P(two circles) = 0,
  // both closures unknots, so P(two circles) = -(x + x^-1) y^-1.
  const LaurentPoly two = (X + Xi) * Yi * xy("-1");
  CHECK(unlink_homfly(2) == two);
  CHECK(P(BraidWord(2)) == two);
  CHECK(P(BraidWord(2, {1, -1})) == two);
  CHECK(unlink_homfly(3) == two * two);
  CHECK(P(BraidWord(3)) == two * two);
  CHECK(unlink_homfly(1) == xy("1"));
}

TEST_CASE("skein relation at a random braid letter") {
  std::mt19937 rng(22);
  for (int i = 0; i < 25; ++i) {
    auto b = random_braid(rng, 3, 7);
    std::vector<int> l = b.letters();
    std::uniform_int_distribution<std::size_t> pos(0, l.size() - 1);
    const std::size_t p = pos(rng);
    l[p] = std::abs(l[p]);
    std::vector<int> minus = l, zero = l;
    minus[p] = -minus[p];
    zero.erase(zero.begin() + static_cast<std::ptrdiff_t>(p));
    const LaurentPoly lhs = X * P(BraidWord(3, l)) + Xi * P(BraidWord(3, minus)) + Y * P(BraidWord(3, zero));
    CHECK_MESSAGE(lhs.is_zero(), to_string(BraidWord(3, l)));
  }
}

TEST_CASE("Markov invariance") {
  std::mt19937 rng(23);
  for (int i = 0; i < 20; ++i) {
    const auto b = random_braid(rng, 3, 8);
    const auto g = random_braid(rng, 3, 3);
    const LaurentPoly p = P(b);
    CHECK(P(conjugate(b, g)) == p);
    std::vector<int> up = b.letters(), down = b.letters();
    up.push_back(3);
    down.push_back(-3);
    CHECK(P(BraidWord(4, up)) == p);
    CHECK(P(BraidWord(4, down)) == p);
  }
}

TEST_CASE("x-span parity") {
  std::mt19937 rng(24);
  for (int i = 0; i < 30; ++i) {
    std::uniform_int_distribution<int> strands(2, 4);
    const LaurentPoly p = P(random_braid(rng, strands(rng), 9));
    const auto [lo, hi] = span(p, 0);
    CHECK((hi - lo) % 2 == 0);
  }
}

TEST_CASE("memoization, parallelism and the serial kernel agree") {
  std::mt19937 rng(25);
  for (int i = 0; i < 12; ++i) {
    const auto d = braid_closure_diagram(random_braid(rng, 4, 9));
    const LaurentPoly ref = homfly(d);
    CHECK(homfly(d, {false, false, false}) == ref);
    CHECK(homfly(d, {false, true, false}) == ref);
    CHECK(homfly(d, {false, false, true}) == ref);
    CHECK(homfly_serial(d) == ref);
  }
  const auto el = encircle(beta_braid(0), {AxisOrientation::Positive, AxisOrientation::Negative});
  CHECK(homfly(el) == homfly_serial(el));
}

TEST_CASE("mirror toggle evaluates the mirror image") {
  std::mt19937 rng(26);
  for (int i = 0; i < 10; ++i) {
    const auto b = random_braid(rng, 3, 7);
    std::vector<int> neg;
    for (int l : b.letters()) neg.push_back(-l);
    CHECK(homfly(braid_closure_diagram(b), {true, true, true}) == P(BraidWord(3, neg)));
  }
  CHECK(P(BraidWord(2, {-1, -1, -1})) == P(BraidWord(2, {1, 1, 1})).inverted(0));
}

TEST_CASE("axis drawn over or under gives the same invariants") {
  for (const auto& b : {BraidWord(2, {1}), BraidWord(3, {1, -2}), beta_braid(0), morton_braid(1)}) {
    for (const auto& axes : std::vector<std::vector<AxisOrientation>>{
             {AxisOrientation::Positive}, {AxisOrientation::Positive, AxisOrientation::Negative}}) {
      const auto over = encircle(b, axes, true);
      const auto under = encircle(b, axes, false);
      CHECK(homfly(over) == homfly(under));
      CHECK(alexander_of(over) == alexander_of(under));
    }
  }
}

TEST_CASE("Alexander specialization of HOMFLY") {
  CHECK(alexander_from_homfly(P(BraidWord(2, {1, 1, 1}))) == t1("1 - t + t^2"));
  const auto d76 = load_pd(std::string(KNOTFIBER_FIXTURES_DIR) + "/7_6.pd");
  CHECK(alexander_from_homfly(homfly(d76)) == alexander_of(d76));
  std::mt19937 rng(27);
  for (int done = 0; done < 15;) {
    const auto b = random_braid(rng, 3, 8);
    if (closure_components(b) != 1) continue;
    ++done;
    CHECK(alexander_from_homfly(P(b)) == burau_alexander(b));
  }
  CHECK_THROWS_AS(alexander_from_homfly(P(BraidWord(2, {1, 1}))), std::invalid_argument);
}

TEST_CASE("7_6 fixture and the beta closures are mirror images") {
  const auto d76 = load_pd(std::string(KNOTFIBER_FIXTURES_DIR) + "/7_6.pd");
  const LaurentPoly b = P(beta_braid(0));
  CHECK(homfly(d76) != b);
  CHECK(homfly(d76).inverted(0) == b);
  for (int n = 1; n <= 2; ++n) CHECK(P(beta_braid(n)) == b);
}

TEST_CASE("MFW bound") {
  CHECK(mfw_bound(braid_closure_diagram(BraidWord(1))) == 1);
  CHECK(mfw_bound(braid_closure_diagram(BraidWord(2, {1, 1, 1}))) == 2);
  CHECK(mfw_bound(braid_closure_diagram(BraidWord(3, {1, -2, 1, -2}))) == 3);
  CHECK_THROWS_AS(mfw_bound(X + xy("1")), std::domain_error);
  CHECK_THROWS_AS(mfw_bound(LaurentPoly(2)), std::domain_error);
}

TEST_CASE("denominators: split links keep y^-1, the Hopf link does too") {
  const auto [ylo, yhi] = span(P(BraidWord(2, {1, 1})), 1);
  CHECK(ylo == -1);
  CHECK(yhi == 1);
  // knots clear denominators
  std::mt19937 rng(28);
  for (int done = 0; done < 10;) {
    const auto b = random_braid(rng, 3, 8);
    if (closure_components(b) != 1) continue;
    ++done;
    CHECK(span(P(b), 1).first >= 0);
  }
}
