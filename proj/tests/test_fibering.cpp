#include <random>
#include <stdexcept>

#include "doctest.h"
#include "knotfiber/fibering.hpp"
#include "knotfiber/invariants.hpp"
#include "knotfiber/presentation.hpp"

using namespace knotfiber;

namespace {

const FiberStatus F = FiberStatus::Fibered;
const FiberStatus N = FiberStatus::NotFibered;
const FiberStatus U = FiberStatus::Unknown;

bool has_tag(const FiberingVerdict& v, const char* tag) {
  for (const auto& e : v.evidence)
    if (e.citation == tag) return true;
  return false;
}

BraidWord random_braid(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len), gen(1, strands - 1), sgn(0, 1);
  std::vector<int> w;
  for (int i = len(rng); i > 0; --i) w.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
  return BraidWord(strands, w);
}

LinkDiagram fixture(const std::string& name) {
  return load_pd(std::string(KNOTFIBER_FIXTURES_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("satellite verdict is a three-valued conjunction") {
  CHECK(satellite_verdict(F, F) == F);
  CHECK(satellite_verdict(F, N) == N);
  CHECK(satellite_verdict(N, F) == N);
  CHECK(satellite_verdict(N, U) == N);
  CHECK(satellite_verdict(U, F) == U);
  CHECK(satellite_verdict(U, U) == U);
}

TEST_CASE("satellite verdict is monotone in refinement") {
  const std::vector<FiberStatus> all = {F, N, U};
  auto refinements = [&](FiberStatus s) {
    return s == U ? all : std::vector<FiberStatus>{s};
  };
  for (auto a : all)
    for (auto b : all) {
      const FiberStatus out = satellite_verdict(a, b);
      if (out == U) continue;
      for (auto ra : refinements(a))
        for (auto rb : refinements(b)) CHECK(satellite_verdict(ra, rb) == out);
    }
}

TEST_CASE("unknot patterns") {
  const Pattern trivial = unknot_pattern_from_braid(BraidWord(1));
  CHECK(trivial.winding == 1);
  CHECK(std::abs(linking_number(trivial.knot_and_meridian, "k", "m")) == 1);
  CHECK(homfly(trivial.knot_and_meridian) == homfly(braid_closure_diagram(BraidWord(2, {1, 1}))));
  CHECK(!trivial.assumptions.empty());

  const Pattern p = unknot_pattern_from_braid(BraidWord(2, {1}));
  CHECK(p.winding == 2);
  const LinkDiagram l = pattern_link(p);
  CHECK(l.num_components() == 3);
  CHECK(std::abs(linking_number(l, "k", "m")) == 2);
  CHECK(linking_number(l, "k", "m") == -linking_number(l, "k", "m_prime"));
  CHECK(linking_number(l, "m", "m_prime") == 0);

  CHECK_THROWS_AS(unknot_pattern_from_braid(BraidWord(2, {1, 1})), std::invalid_argument);
}

TEST_CASE("winding equals strand count for braid patterns") {
  std::mt19937 rng(31);
  for (int done = 0; done < 20;) {
    std::uniform_int_distribution<int> strands(1, 4);
    const int n = strands(rng);
    const BraidWord b = n == 1 ? BraidWord(1) : random_braid(rng, n, 7);
    if (closure_components(b) != 1) continue;
    ++done;
    for (const Pattern& p : {unknot_pattern_from_braid(b), closed_braid_pattern(b)}) {
      CHECK(p.winding == n);
      CHECK(winding_number(p.knot_and_meridian, "k", "m") == n);
    }
  }
}

TEST_CASE("closed-braid pattern link is the encircled closure") {
  for (int n = 0; n <= 2; ++n) {
    const Pattern p = closed_braid_pattern(beta_braid(n));
    CHECK(pattern_link(p) ==
          encircle(beta_braid(n), {AxisOrientation::Positive, AxisOrientation::Negative}));
  }
}

TEST_CASE("winding-zero pattern") {
  LinkDiagram d = braid_closure_diagram(BraidWord(2, {1, -1}));
  d = relabel_component(relabel_component(d, "c1", "k"), "c2", "m");
  const Pattern p = diagram_pattern(d);
  CHECK(p.winding == 0);
  CHECK_THROWS_AS(pattern_link(p), std::invalid_argument);
  const FiberingVerdict v = pattern_fibered_check(p);
  CHECK(v.status == N);
  CHECK(has_tag(v, kWindingCriterion));
  CHECK_THROWS_AS(diagram_pattern(braid_closure_diagram(BraidWord(2, {1, 1}))), DiagramError);
}

TEST_CASE("fibering verdicts") {
  const FiberingVerdict s12 = pattern_fibered_check(unknot_pattern_from_braid(BraidWord(3, {1, 2})));
  CHECK(s12.status == F);
  CHECK(has_tag(s12, kBraidAxisClassification));

  const FiberingVerdict b0 = pattern_fibered_check(closed_braid_pattern(beta_braid(0)));
  CHECK(b0.status == F);
  CHECK(has_tag(b0, kHomogeneousClosure));

  // the beta(n) pattern links have monic Alexander polynomials, so the
  // necessary condition cannot decide them
  for (int n = 1; n <= 3; ++n) {
    const FiberingVerdict v = pattern_fibered_check(closed_braid_pattern(beta_braid(n)));
    CHECK(v.status == U);
    CHECK(has_tag(v, kInconclusive));
  }

  // 5_2 closes s1^3 s2 s1^-1 s2; 2 - 3t + 2t^2 is not monic
  const BraidWord five2(3, {1, 1, 1, 2, -1, 2});
  CHECK(burau_alexander(five2) == parse_laurent("2 - 3*t + 2*t^2", 1));
  const FiberingVerdict v52 = pattern_fibered_check(closed_braid_pattern(five2));
  CHECK(v52.status == N);
  CHECK(has_tag(v52, kMonodromyMonicity));
}

TEST_CASE("verdict soundness contract") {
  std::mt19937 rng(32);
  for (int done = 0; done < 25;) {
    const BraidWord b = random_braid(rng, 3, 7);
    if (closure_components(b) != 1) continue;
    ++done;
    for (const Pattern& p : {unknot_pattern_from_braid(b), closed_braid_pattern(b)}) {
      const FiberingVerdict v = pattern_fibered_check(p);
      CHECK(!v.evidence.empty());
      if (v.status == F) CHECK((has_tag(v, kBraidAxisClassification) || has_tag(v, kHomogeneousClosure)));
      if (v.status == N) {
        bool witnessed = false;
        for (const auto& e : v.evidence)
          witnessed = witnessed || e.finding.rfind("winding number zero", 0) == 0 ||
                      e.finding.rfind("non-monic", 0) == 0 || e.finding.rfind("zero Alexander", 0) == 0;
        CHECK(witnessed);
      }
    }
  }
}

TEST_CASE("Mazur-type fixture has winding number one") {
  const Pattern p = diagram_pattern(fixture("ml_1.pd"));
  CHECK(p.winding == 1);
  const LinkDiagram l = pattern_link(p);
  CHECK(l.num_components() == 3);
  CHECK(linking_number(l, "m", "m_prime") == 0);
}

TEST_CASE("conjugacy separator") {
  const Separation s = conjugacy_separator(beta_braid(0), beta_braid(1));
  CHECK(s.separated);
  CHECK(s.witness == kWitnessAxisAlexander);

  const Separation e = conjugacy_separator(BraidWord(3, {1, 2}), BraidWord(3, {-1, -2}));
  CHECK(e.separated);
  CHECK(e.witness == kWitnessExponentSum);
  CHECK(e.value_a == "2");
  CHECK(e.value_b == "-2");

  const Separation c = conjugacy_separator(BraidWord(3, {1, 1}), BraidWord(3, {1, 2}));
  CHECK(c.separated);
  CHECK(c.witness == kWitnessCycleType);

  CHECK_THROWS_AS(conjugacy_separator(BraidWord(2), BraidWord(3)), std::invalid_argument);
}

TEST_CASE("separator is symmetric and never separates conjugates") {
  std::mt19937 rng(33);
  for (int i = 0; i < 15; ++i) {
    const BraidWord a = random_braid(rng, 3, 6);
    const BraidWord b = random_braid(rng, 3, 6);
    const BraidWord g = random_braid(rng, 3, 3);
    CHECK(!conjugacy_separator(a, a).separated);
    CHECK(!conjugacy_separator(a, conjugate(a, g)).separated);
    const Separation ab = conjugacy_separator(a, b);
    const Separation ba = conjugacy_separator(b, a);
    CHECK(ab.separated == ba.separated);
    CHECK(ab.witness == ba.witness);
  }
}

TEST_CASE("verdict report") {
  FiberingVerdict v;
  v.status = N;
  v.evidence.push_back({kWindingCriterion, "winding number zero"});
  CHECK(format_verdict(v) == "status NotFibered\nevidence [winding-criterion] winding number zero\n");
}
