// Acceptance run: one line per criterion, exit 0 iff every criterion passes.
// Every criterion is exact; the only pinned tolerances are the time budgets
// below, reported but not enforced on slower machines.

#include <cstdio>
#include <iostream>

#include "knotfiber/verify.hpp"

using namespace knotfiber;

namespace {

// seconds, by criterion
constexpr double kBudget[] = {0, 10, 1, 60, 60, 60, 60, 60, 1, 30, 120};

}  // namespace

int main() {
  VerifyContext ctx;
  try {
    ctx = make_context(fixtures_dir());
  } catch (const FixtureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  bool all = true;
  for (const auto& check : check_registry()) {
    const CheckRecord r = run_check(check, ctx);
    all = all && r.pass;
    const bool in_budget = r.seconds <= kBudget[check.criterion];
    std::printf("criterion %2d %-4s %-26s %8.3f s%s\n", check.criterion, r.pass ? "PASS" : "FAIL",
                check.name.c_str(), r.seconds, in_budget ? "" : "  (over time budget)");
    if (!r.pass) std::printf("    expected: %s\n    computed: %s\n", r.expected.c_str(), r.computed.c_str());
  }
  return all ? 0 : 1;
}
