#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotfiber/braid.hpp"
#include "knotfiber/diagram.hpp"
#include "knotfiber/laurent.hpp"

namespace knotfiber {

enum class FiberStatus { Fibered, NotFibered, Unknown };

std::string to_string(FiberStatus s);

/// One finding of a fibering check. `citation` is a short tag naming the
/// criterion that makes the finding conclusive (or "inconclusive").
struct Evidence {
  std::string citation;
  std::string finding;
  bool operator==(const Evidence&) const = default;
};

struct FiberingVerdict {
  FiberStatus status = FiberStatus::Unknown;
  std::vector<Evidence> evidence;
};

/// Citation tags.
inline constexpr const char* kWindingCriterion = "winding-criterion";
inline constexpr const char* kMonodromyMonicity = "monodromy-monicity";
inline constexpr const char* kBraidAxisClassification = "braid-axis-classification";
inline constexpr const char* kHomogeneousClosure = "homogeneous-closure";
inline constexpr const char* kInconclusive = "inconclusive";

/// How the pattern (V, k) is given. In every case the diagram of k u m
/// carries labels "k" and "m", m being a meridian of the solid torus V.
///   UnknotAxis:  k is the braid axis, m the closure of B (assumed unknotted).
///   ClosedBraid: k is the closure of B, m the braid axis.
///   Diagram:     an explicit two-component diagram.
enum class PatternKind { UnknotAxis, ClosedBraid, Diagram };

struct Pattern {
  PatternKind kind = PatternKind::Diagram;
  std::optional<BraidWord> braid;
  LinkDiagram knot_and_meridian;
  int winding = 0;
  /// Facts taken on trust rather than checked.
  std::vector<std::string> assumptions;
};

/// Inverse of the classification map for unknot patterns: k is the axis of
/// B, m its closure. Throws std::invalid_argument unless the closure is a
/// knot. Unknottedness of the closure is recorded as an assumption.
Pattern unknot_pattern_from_braid(const BraidWord& b);
/// The closure of B inside the complement of its axis.
Pattern closed_braid_pattern(const BraidWord& b);
/// Throws DiagramError unless the diagram has exactly the components k, m.
Pattern diagram_pattern(const LinkDiagram& k_and_m);

/// k u m u m_prime, m_prime a disjoint meridian with opposite orientation.
/// Throws std::invalid_argument for winding number zero.
LinkDiagram pattern_link(const Pattern& p);

/// Checks in fixed order: winding number, monicity of the all-ones Alexander
/// polynomial of the pattern link, then the sufficient conditions. Never
/// Fibered without a classification or homogeneity witness, never
/// NotFibered without a winding or monicity violation.
FiberingVerdict pattern_fibered_check(const Pattern& p);

/// Three-valued conjunction: a satellite is fibered iff its companion and
/// its pattern are.
FiberStatus satellite_verdict(FiberStatus companion, FiberStatus pattern);

struct Separation {
  bool separated = false;
  /// Name of the first invariant that differs; empty when not separated.
  std::string witness;
  std::string value_a;
  std::string value_b;
};

inline constexpr const char* kWitnessExponentSum = "exponent sum";
inline constexpr const char* kWitnessCycleType = "permutation cycle type";
inline constexpr const char* kWitnessAxisAlexander = "axis-link Alexander polynomial";
inline constexpr const char* kWitnessAxisHomfly = "axis-link HOMFLY polynomial";

/// Compares conjugacy invariants in order: exponent sum, cycle type,
/// Alexander and HOMFLY polynomials of encircle(., [+]). A separation proves
/// non-conjugacy; NotSeparated proves nothing. Throws on strand mismatch.
Separation conjugacy_separator(const BraidWord& a, const BraidWord& b);

/// status line, then "evidence [tag] finding" lines.
std::string format_verdict(const FiberingVerdict& v);

}  // namespace knotfiber
