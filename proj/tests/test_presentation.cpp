#include <random>
#include <stdexcept>

#include "doctest.h"
#include "knotfiber/invariants.hpp"
#include "knotfiber/presentation.hpp"

using namespace knotfiber;

namespace {

LaurentPoly t1(const char* s) { return parse_laurent(s, 1); }

LinkDiagram closure(int strands, std::vector<int> letters) {
  return braid_closure_diagram(BraidWord(strands, std::move(letters)));
}

LinkDiagram hopf() {
  return parse_pd(
      "pd v1\n"
      "component a 1,2\n"
      "component b 3,4\n"
      "crossing +1 1 2 4 3\n"
      "crossing +1 3 4 2 1\n");
}

BraidWord random_braid(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len), gen(1, strands - 1), sgn(0, 1);
  std::vector<int> w;
  for (int i = len(rng); i > 0; --i) w.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
  return BraidWord(strands, w);
}

std::vector<LinkDiagram> corpus() {
  return {closure(2, {1}),
          closure(2, {1, 1, 1}),
          closure(3, {1, -2, 1, -2}),
          closure(2, {1, 1, 1, 1}),
          reverse_component(closure(2, {1, 1, 1, 1}), "c2"),
          hopf(),
          load_pd(std::string(KNOTFIBER_FIXTURES_DIR) + "/7_6.pd"),
          encircle(beta_braid(0), {AxisOrientation::Positive}),
          encircle(morton_braid(1), {AxisOrientation::Positive, AxisOrientation::Negative}),
          closure(4, {1, 2, -3, 2, 1, -3}),
          closure(3, {1, 1, 2, 2})};
}

}  // namespace

TEST_CASE("Wirtinger structure counts") {
  const auto h = wirtinger(hopf());
  CHECK(h.num_generators() == 2);
  CHECK(h.relators.size() == 2);

  const auto t = wirtinger(closure(2, {1, 1, 1}));
  CHECK(t.num_generators() == 3);
  CHECK(t.relators.size() == 3);
  for (const auto& r : t.relators) {
    REQUIRE(r.size() == 4);
    CHECK(r[0] < 0);         // b^-1 ...
    CHECK(r[1] == -r[3]);    // ... u^e a u^-e
    CHECK(r[2] > 0);
  }
}

TEST_CASE("one relator per crossing, one generator per over-arc") {
  for (const auto& d : corpus()) {
    const auto w = wirtinger(d);
    CHECK(w.relators.size() == d.num_crossings());
    // every crossing merges its over-arc pair: arcs - crossings over-arcs
    CHECK(w.num_generators() == d.num_arcs() - d.num_crossings());
  }
}

TEST_CASE("crossingless components are rejected") {
  CHECK_THROWS_AS(wirtinger(braid_closure_diagram(BraidWord(1))), DiagramError);
  CHECK_THROWS_AS(wirtinger(braid_closure_diagram(BraidWord(3, {1}))), DiagramError);
}

TEST_CASE("weights") {
  const auto w = wirtinger(hopf());
  CHECK_THROWS_AS(assign_weights(w, {{"a", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(assign_weights(w, {{"a", 1}, {"b", 0}, {"z", 1}}), std::invalid_argument);
  const auto k = assign_weights(w, {{"a", 1}, {"b", 0}});
  CHECK(k.weights.at("a") == 1);
  CHECK(k.weights.at("b") == 0);
  CHECK_THROWS_AS(alexander_poly(assign_weights(w, {{"a", 0}, {"b", 0}})), std::invalid_argument);
  CHECK_THROWS_AS(alexander_poly(w), std::invalid_argument);  // unweighted
}

TEST_CASE("relator weight balance under every per-component weighting") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> wt(-3, 3);
  for (const auto& d : corpus()) {
    const auto w = wirtinger(d);
    for (int trial = 0; trial < 5; ++trial) {
      std::map<std::string, int> m;
      for (const auto& l : w.component_labels) m[l] = wt(rng);
      const auto ww = assign_weights(w, m);
      for (std::size_t r = 0; r < ww.relators.size(); ++r) CHECK(relator_weight_sum(ww, r) == 0);
    }
  }
}

TEST_CASE("Alexander polynomials of small knots and links") {
  CHECK(alexander_of(closure(2, {1})) == t1("1"));
  CHECK(alexander_of(closure(2, {1, 1, 1})) == t1("1 - t + t^2"));
  CHECK(alexander_of(closure(2, {-1, -1, -1})) == t1("1 - t + t^2"));
  CHECK(alexander_of(closure(3, {1, -2, 1, -2})) == t1("1 - 3*t + t^2"));
  CHECK(alexander_of(hopf()) == t1("-1 + t"));
  // (2,4) torus link, parallel orientation: (1 - t^4)/(1 + t) up to units
  CHECK(alexander_of(closure(2, {1, 1, 1, 1})) == t1("-1 + t - t^2 + t^3"));
}

TEST_CASE("split links have zero Alexander polynomial") {
  const auto split = closure(2, {1, -1});
  CHECK(alexander_of(split).is_zero());
  CHECK(!is_monic(alexander_of(split)));
}

TEST_CASE("7_6 fixture agrees with the Burau value of beta(0)") {
  const auto d = load_pd(std::string(KNOTFIBER_FIXTURES_DIR) + "/7_6.pd");
  CHECK(d.num_crossings() == 7);
  CHECK(d.num_components() == 1);
  CHECK(alexander_of(d) == burau_alexander(beta_braid(0)));
  CHECK(alexander_of(d) == t1("1 - 5*t + 7*t^2 - 5*t^3 + t^4"));
}

TEST_CASE("Hopf link with the kernel weighting") {
  // Both relators are commutators of a and b. With a -> t, b -> 1 the
  // derivative in a vanishes and the one in b is -1 + t; deleting the a
  // column leaves a single column of +-(t - 1).
  const auto w = assign_weights(wirtinger(hopf()), {{"a", 1}, {"b", 0}});
  CHECK(alexander_poly(w) == t1("-1 + t"));
}

TEST_CASE("column-deletion independence") {
  for (const auto& d : corpus()) {
    const auto w = all_ones(wirtinger(d));
    const auto ref = alexander_poly(w, {0, true, true});
    for (std::size_t g = 1; g < w.num_generators(); ++g) {
      CHECK(alexander_poly(w, {static_cast<int>(g), true, true}) == ref);
      CHECK(alexander_poly(w, {static_cast<int>(g), false, false}) == ref);
    }
  }
}

TEST_CASE("Fox calculus agrees with Burau on random knot closures") {
  std::mt19937 rng(11);
  int done = 0;
  while (done < 40) {
    std::uniform_int_distribution<int> strands(2, 4);
    const auto b = random_braid(rng, strands(rng), 8);
    if (closure_components(b) != 1) continue;
    ++done;
    CHECK_MESSAGE(alexander_of(braid_closure_diagram(b)) == burau_alexander(b), to_string(b));
  }
}

TEST_CASE("conjugation invariance") {
  std::mt19937 rng(12);
  for (int i = 0; i < 20; ++i) {
    const auto b = random_braid(rng, 3, 7);
    const auto g = random_braid(rng, 3, 3);
    if (closure_components(b) != 1) continue;  // links may leave a strand crossingless
    CHECK(alexander_of(braid_closure_diagram(b)) == alexander_of(braid_closure_diagram(conjugate(b, g))));
  }
}

TEST_CASE("serial and parallel Alexander kernels agree") {
  for (const auto& d : corpus()) {
    const auto w = all_ones(wirtinger(d));
    CHECK(alexander_poly(w) == alexander_poly_serial(w));
    CHECK(alexander_poly(w, {-1, false, true}) == alexander_poly(w, {-1, true, true}));
  }
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 4;
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n, LaurentPoly(1)));
    for (auto& row : m)
      for (auto& x : row)
        for (int k = 0; k < 2; ++k) x += LaurentPoly::monomial(1, {e(rng), 0}, c(rng));
    CHECK(bareiss_determinant(m) == cofactor_determinant(m));
  }
  CHECK(bareiss_determinant({}) == t1("1"));
}

TEST_CASE("monicity") {
  CHECK(is_monic(t1("1 - t + t^2")));
  CHECK(is_monic(t1("-1 + t")));
  CHECK(!is_monic(t1("-2 + 2*t")));
  CHECK(!is_monic(t1("2 - 3*t + 2*t^2")));
  CHECK(!is_monic(LaurentPoly(1)));
}

TEST_CASE("presentation dump") {
  const auto w = all_ones(wirtinger(hopf()));
  CHECK(format_presentation(w) ==
        "wirtinger v1\n"
        "generator g1 a\n"
        "generator g2 b\n"
        "relator r1 g2^-1 g1 g2 g1^-1\n"
        "relator r2 g1^-1 g2 g1 g2^-1\n"
        "weight a 1\n"
        "weight b 1\n");
}
