#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotfiber/diagram.hpp"
#include "knotfiber/laurent.hpp"

namespace knotfiber {

/// Missing or unreadable fixture files, or an unpinned convention.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixture directory: $KNOTFIBER_FIXTURES if set, else the source tree's.
std::filesystem::path fixtures_dir();

/// Loads <dir>/<name>, turning I/O and parse failures into FixtureError.
LinkDiagram load_fixture(const std::filesystem::path& dir, const std::string& name);

/// HOMFLY orientation convention, stored as "mirror = true|false" in
/// convention.cfg.
struct Convention {
  bool mirror = false;
};
std::optional<Convention> load_convention(const std::filesystem::path& dir);
/// Throws FixtureError when the pin is absent.
Convention require_convention(const std::filesystem::path& dir);
void save_convention(const std::filesystem::path& dir, const Convention& c);

/// P(ML_n) = -x^-2 P(ML_{n-1}) - x^-1 y P(left trefoil).
bool twist_recursion_holds(const LaurentPoly& prev, const LaurentPoly& next,
                           const LaurentPoly& left_trefoil);
/// The same without the y factor; impossible by y-parity for two-component
/// links, kept to document that.
bool literal_recursion_holds(const LaurentPoly& prev, const LaurentPoly& next,
                             const LaurentPoly& left_trefoil);

struct GateResult {
  bool passes = false;
  /// One line per n = 2..4.
  std::vector<std::string> lines;
};
/// Runs the recursion gate on ml_1..ml_4 under one mirror setting.
GateResult recursion_gate(const std::filesystem::path& dir, bool mirror);

struct Calibration {
  GateResult direct;
  GateResult mirrored;
  /// Set iff exactly one setting passes.
  std::optional<Convention> pinned;
};
Calibration calibrate(const std::filesystem::path& dir);

/// Frozen values of the DERIVED fixtures, "key = value" per line in
/// expected/derived.txt.
using ExpectedValues = std::map<std::string, std::string>;
ExpectedValues load_expected(const std::filesystem::path& dir);
/// Computes every derived value (cross-checking against a second oracle
/// where one exists) and writes the file. Throws std::runtime_error when
/// the oracles disagree.
ExpectedValues freeze_expected(const std::filesystem::path& dir);

struct CheckRecord {
  std::string name;
  int criterion = 0;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;
  std::vector<std::string> notes;
};

struct VerifyContext {
  std::filesystem::path dir;
  Convention convention;
  ExpectedValues expected;
};

struct CheckEntry {
  std::string name;
  int criterion;
  std::function<CheckRecord(const VerifyContext&)> run;
};

/// Checks in report order; one per acceptance criterion.
const std::vector<CheckEntry>& check_registry();
const CheckEntry* find_check(const std::string& name);

/// Builds the context from the fixture directory; FixtureError when the
/// convention is unpinned or a fixture is missing.
VerifyContext make_context(const std::filesystem::path& dir);
/// Runs one check, timing it; exceptions become failed records.
CheckRecord run_check(const CheckEntry& check, const VerifyContext& ctx);

struct RunReport {
  std::string command;
  std::vector<CheckRecord> records;
  bool passed() const;
};

std::string format_report(const RunReport& r, bool timing);

}  // namespace knotfiber
