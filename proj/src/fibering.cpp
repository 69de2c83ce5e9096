#include "knotfiber/fibering.hpp"

#include <sstream>
#include <stdexcept>

#include "knotfiber/invariants.hpp"
#include "knotfiber/presentation.hpp"

namespace knotfiber {

std::string to_string(FiberStatus s) {
  switch (s) {
    case FiberStatus::Fibered: return "Fibered";
    case FiberStatus::NotFibered: return "NotFibered";
    case FiberStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

std::string cycle_type_text(const BraidWord& b) {
  std::ostringstream out;
  out << '(';
  const auto ct = cycle_type(braid_permutation(b));
  for (std::size_t i = 0; i < ct.size(); ++i) out << (i ? "," : "") << ct[i];
  out << ')';
  return out.str();
}

}  // namespace

Pattern unknot_pattern_from_braid(const BraidWord& b) {
  if (closure_components(b) != 1)
    throw std::invalid_argument("closure of " + to_string(b) + " has " +
                                std::to_string(closure_components(b)) +
                                " components; an unknot pattern needs a knot");
  LinkDiagram d = encircle(b, {AxisOrientation::Positive});
  d = relabel_component(d, "k", "closure");
  d = relabel_component(d, "m", "k");
  d = relabel_component(d, "closure", "m");
  Pattern p;
  p.kind = PatternKind::UnknotAxis;
  p.braid = b;
  p.knot_and_meridian = std::move(d);
  p.winding = b.strands();
  p.assumptions.push_back("closure of " + (b.empty() ? std::string("the trivial braid") : to_string(b)) +
                          " is unknotted");
  return p;
}

Pattern closed_braid_pattern(const BraidWord& b) {
  if (closure_components(b) != 1)
    throw std::invalid_argument("closure of " + to_string(b) + " is not a knot");
  Pattern p;
  p.kind = PatternKind::ClosedBraid;
  p.braid = b;
  p.knot_and_meridian = encircle(b, {AxisOrientation::Positive});
  p.winding = b.strands();
  return p;
}

Pattern diagram_pattern(const LinkDiagram& k_and_m) {
  if (k_and_m.num_components() != 2 || !k_and_m.has_label("k") || !k_and_m.has_label("m"))
    throw DiagramError("a pattern diagram needs exactly the components 'k' and 'm'");
  Pattern p;
  p.kind = PatternKind::Diagram;
  p.knot_and_meridian = k_and_m;
  p.winding = winding_number(k_and_m, "k", "m");
  p.assumptions.push_back("m bounds a meridian disk of the solid torus");
  return p;
}

LinkDiagram pattern_link(const Pattern& p) {
  if (p.winding == 0) throw std::invalid_argument("pattern has winding number zero");
  if (p.kind == PatternKind::ClosedBraid)
    return encircle(*p.braid, {AxisOrientation::Positive, AxisOrientation::Negative});
  return double_component(p.knot_and_meridian, "m", "m_prime", true);
}

FiberingVerdict pattern_fibered_check(const Pattern& p) {
  FiberingVerdict v;
  auto& ev = v.evidence;
  if (p.winding == 0) {
    v.status = FiberStatus::NotFibered;
    ev.push_back({kWindingCriterion, "winding number zero"});
    return v;
  }
  ev.push_back({kWindingCriterion, "winding number " + std::to_string(p.winding) + " (nonzero)"});

  const LaurentPoly delta = alexander_of(pattern_link(p));
  if (delta.is_zero()) {
    v.status = FiberStatus::NotFibered;
    ev.push_back({kMonodromyMonicity, "zero Alexander polynomial of k u m u m_prime"});
    return v;
  }
  if (!is_monic(delta)) {
    v.status = FiberStatus::NotFibered;
    ev.push_back({kMonodromyMonicity,
                  "non-monic Alexander polynomial of k u m u m_prime: " + to_string(delta)});
    return v;
  }
  ev.push_back({kMonodromyMonicity,
                "monic Alexander polynomial of k u m u m_prime (consistent): " + to_string(delta)});

  for (const auto& a : p.assumptions) ev.push_back({kInconclusive, "assumed: " + a});

  if (p.kind == PatternKind::UnknotAxis) {
    v.status = FiberStatus::Fibered;
    ev.push_back({kBraidAxisClassification, "member of P_" + std::to_string(p.winding) +
                                                " via braid " + to_string(*p.braid)});
    return v;
  }
  if (p.kind == PatternKind::ClosedBraid) {
    if (is_homogeneous(*p.braid)) {
      v.status = FiberStatus::Fibered;
      ev.push_back({kHomogeneousClosure,
                    "k is the closure of the homogeneous braid " + to_string(*p.braid)});
      return v;
    }
    ev.push_back({kInconclusive, "braid " + to_string(*p.braid) + " is not homogeneous"});
  } else {
    ev.push_back({kInconclusive, "no braid presentation supplied"});
  }
  ev.push_back({kInconclusive, "no sufficient condition applies"});
  return v;
}

FiberStatus satellite_verdict(FiberStatus companion, FiberStatus pattern) {
  if (companion == FiberStatus::NotFibered || pattern == FiberStatus::NotFibered)
    return FiberStatus::NotFibered;
  if (companion == FiberStatus::Fibered && pattern == FiberStatus::Fibered)
    return FiberStatus::Fibered;
  return FiberStatus::Unknown;
}

Separation conjugacy_separator(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand counts differ");
  auto differ = [](const char* witness, std::string va, std::string vb) -> std::optional<Separation> {
    if (va == vb) return std::nullopt;
    return Separation{true, witness, std::move(va), std::move(vb)};
  };
  if (auto s = differ(kWitnessExponentSum, std::to_string(exponent_sum(a)),
                      std::to_string(exponent_sum(b))))
    return *s;
  if (auto s = differ(kWitnessCycleType, cycle_type_text(a), cycle_type_text(b))) return *s;
  const LinkDiagram da = encircle(a, {AxisOrientation::Positive});
  const LinkDiagram db = encircle(b, {AxisOrientation::Positive});
  if (auto s = differ(kWitnessAxisAlexander, to_string(alexander_of(da)), to_string(alexander_of(db))))
    return *s;
  if (auto s = differ(kWitnessAxisHomfly, to_string(homfly(da)), to_string(homfly(db)))) return *s;
  return {};
}

std::string format_verdict(const FiberingVerdict& v) {
  std::ostringstream out;
  out << "status " << to_string(v.status) << '\n';
  for (const auto& e : v.evidence) out << "evidence [" << e.citation << "] " << e.finding << '\n';
  return out.str();
}

}  // namespace knotfiber
