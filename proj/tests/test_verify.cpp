#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "knotfiber/invariants.hpp"
#include "knotfiber/verify.hpp"

using namespace knotfiber;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = KNOTFIBER_FIXTURES_DIR;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("knotfiber_test_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

LinkDiagram ml(int n) { return load_fixture(kFixtures, "ml_" + std::to_string(n) + ".pd"); }

}  // namespace

TEST_CASE("convention file round trip and refusal when unpinned") {
  TempDir tmp;
  CHECK(!load_convention(tmp.path));
  CHECK_THROWS_AS(require_convention(tmp.path), FixtureError);
  CHECK_THROWS_AS(make_context(tmp.path), FixtureError);
  save_convention(tmp.path, {true});
  CHECK(require_convention(tmp.path).mirror);
  save_convention(tmp.path, {false});
  CHECK(!require_convention(tmp.path).mirror);
  std::ofstream(tmp.path / "convention.cfg") << "mirror = maybe\n";
  CHECK_THROWS_AS(load_convention(tmp.path), FixtureError);
}

TEST_CASE("missing fixtures are reported") {
  TempDir tmp;
  CHECK_THROWS_AS(load_fixture(tmp.path, "ml_1.pd"), FixtureError);
  CHECK_THROWS_AS(load_expected(tmp.path), FixtureError);
  std::ofstream(tmp.path / "bad.pd") << "pd v1\ncomponent k 1\ncrossing +1 1 1 1 1\n";
  CHECK_THROWS_AS(load_fixture(tmp.path, "bad.pd"), FixtureError);
}

TEST_CASE("calibration pins exactly one convention") {
  const Calibration c = calibrate(kFixtures);
  REQUIRE(c.pinned.has_value());
  CHECK(c.direct.passes != c.mirrored.passes);
  CHECK(c.pinned->mirror == require_convention(kFixtures).mirror);
}

TEST_CASE("the recursion without a y factor fails by parity") {
  const LaurentPoly lt = homfly(braid_closure_diagram(BraidWord(2, {-1, -1, -1})));
  for (int n = 2; n <= 4; ++n) {
    const LaurentPoly prev = homfly(ml(n - 1)), next = homfly(ml(n));
    CHECK(twist_recursion_holds(prev, next, lt));
    CHECK(!literal_recursion_holds(prev, next, lt));
    // two-component links have odd y-degrees only, knots even only
    for (const auto& t : next.terms()) CHECK(t.exp[1] % 2 != 0);
    for (const auto& t : lt.terms()) CHECK(t.exp[1] % 2 == 0);
  }
}

TEST_CASE("ML fixtures") {
  for (int n = 1; n <= 4; ++n) {
    const LinkDiagram d = ml(n);
    CHECK(d.num_components() == 2);
    CHECK(linking_number(d, "k", "m") == n);
    // both components unknotted
    CHECK(homfly(delete_component(d, "m")) == parse_laurent("1", 2));
    CHECK(homfly(delete_component(d, "k")) == parse_laurent("1", 2));
    // reproducible from the braid construction
    const std::string w = "s1^-" + std::to_string(2 * n + 2) + " s2 s1^-1 s2";
    LinkDiagram built = braid_closure_diagram(parse_braid(w, 3));
    built = reverse_component(relabel_component(relabel_component(built, "c1", "k"), "c2", "m"), "m");
    CHECK(built == d);
  }
}

TEST_CASE("check registry covers criteria 1..10") {
  const auto& reg = check_registry();
  REQUIRE(reg.size() == 10);
  std::set<std::string> names;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(reg[i].criterion == static_cast<int>(i) + 1);
    names.insert(reg[i].name);
    CHECK(find_check(reg[i].name) == &reg[i]);
  }
  CHECK(names.size() == 10);
  CHECK(find_check("no-such-check") == nullptr);
}

TEST_CASE("reports are deterministic without timing") {
  const VerifyContext ctx = make_context(kFixtures);
  RunReport a, b;
  a.command = b.command = "verify --check mfw-growth";
  a.records.push_back(run_check(*find_check("mfw-growth"), ctx));
  b.records.push_back(run_check(*find_check("mfw-growth"), ctx));
  CHECK(a.passed());
  CHECK(format_report(a, false) == format_report(b, false));
  CHECK(format_report(a, false).find("overall: PASS (1/1 checks)") != std::string::npos);
}

TEST_CASE("a throwing check becomes a failed record") {
  const VerifyContext ctx = make_context(kFixtures);
  const CheckEntry boom{"boom", 0, [](const VerifyContext&) -> CheckRecord {
                         throw std::runtime_error("kaput");
                       }};
  const CheckRecord r = run_check(boom, ctx);
  CHECK(!r.pass);
  CHECK(r.name == "boom");
  CHECK(r.computed == "error: kaput");
  RunReport rep;
  rep.records.push_back(r);
  CHECK(!rep.passed());
}

TEST_CASE("frozen values match a fresh computation") {
  TempDir tmp;
  for (const char* f : {"7_6.pd", "ml_1.pd", "ml_2.pd", "ml_3.pd", "ml_4.pd"})
    fs::copy_file(kFixtures / f, tmp.path / f);
  const ExpectedValues fresh = freeze_expected(tmp.path);
  CHECK(fresh == load_expected(kFixtures));
  CHECK(load_expected(tmp.path) == fresh);
}
