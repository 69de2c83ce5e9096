#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotfiber/braid.hpp"

namespace knotfiber {

/// Raised for malformed PD input and for diagrams that break a structural
/// invariant. The message names the offending arc, crossing or line.
class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A crossing splits both strands: four distinct arc ends. The sign follows
/// the right-hand rule and, together with the over/under roles, fixes the
/// cyclic order of the four ends in the plane.
struct Crossing {
  int over_in = 0;
  int over_out = 0;
  int under_in = 0;
  int under_out = 0;
  int sign = 1;
  bool operator==(const Crossing&) const = default;
};

/// A labeled oriented circle: arcs listed in orientation order.
struct Component {
  std::string label;
  std::vector<int> arcs;
  bool operator==(const Component&) const = default;
};

enum class StrandRole { Over, Under };

/// One passage of a component through a crossing.
struct Pass {
  int crossing = 0;
  StrandRole role = StrandRole::Over;
  bool operator==(const Pass&) const = default;
};

/// Crossing-centric description: each component is the cyclic sequence of
/// its passes. Every crossing must be passed exactly once over and once
/// under. Arcs are implicit (one between consecutive passes).
struct PassDiagram {
  std::vector<int> signs;  // one per crossing
  std::vector<std::string> labels;
  std::vector<std::vector<Pass>> passes;  // per component
};

/// Oriented planar link diagram in PD form. Arc ids are positive integers.
/// Construction validates every structural invariant.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  LinkDiagram(std::vector<Crossing> crossings, std::vector<Component> components);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Component>& components() const { return components_; }
  std::size_t num_crossings() const { return crossings_.size(); }
  std::size_t num_components() const { return components_.size(); }
  std::size_t num_arcs() const;
  int crossingless_circles() const;

  bool has_label(std::string_view label) const;
  /// Throws DiagramError for unknown labels.
  std::size_t component_index(std::string_view label) const;
  /// Component index owning an arc; throws for unknown arcs.
  std::size_t component_of_arc(int arc) const;

  PassDiagram to_passes() const;
  /// Arcs are numbered consecutively along components in order.
  static LinkDiagram from_passes(const PassDiagram& pd);

  /// Renumbers arcs along components (each from its listed first arc) and
  /// keeps crossing order.
  LinkDiagram renumbered() const { return from_passes(to_passes()); }

  bool operator==(const LinkDiagram&) const = default;

 private:
  void validate() const;

  std::vector<Crossing> crossings_;
  std::vector<Component> components_;
};

/// Standard closed-braid diagram: one crossing per letter with sign equal to
/// the letter sign; components labeled c1, c2, ... by closure cycle (ordered
/// by smallest starting position).
LinkDiagram braid_closure_diagram(const BraidWord& b);

enum class AxisOrientation { Positive, Negative };

/// Closed braid plus one or two unknotted axis circles, each linking all
/// strands: the axis passes over every strand on one side and under on the
/// other (2p crossings per axis). By default the axis is on top along its
/// upper edge; `axis_over_upper = false` builds the isotopic diagram with the
/// layers exchanged. A positive axis has lk = +p with the closure. The
/// closure is labeled "k" when it is a knot (c1, c2, ... otherwise); axes
/// are labeled "m" and "m_prime".
LinkDiagram encircle(const BraidWord& b, const std::vector<AxisOrientation>& axes,
                     bool axis_over_upper = true);
std::vector<AxisOrientation> parse_axes(std::string_view text);

LinkDiagram reverse_component(const LinkDiagram& d, std::string_view label);
LinkDiagram relabel_component(const LinkDiagram& d, std::string_view from, std::string_view to);
/// Removes a component; strands of other components through its crossings
/// are joined.
LinkDiagram delete_component(const LinkDiagram& d, std::string_view label);
/// Adds a blackboard-parallel copy of a component, corrected by full twists
/// to have linking number zero with the original, optionally reversed.
LinkDiagram double_component(const LinkDiagram& d, std::string_view label,
                             std::string_view copy_label, bool reversed);

int linking_number(const LinkDiagram& d, std::string_view a, std::string_view b);
/// |lk|; equals the geometric winding number for closed braids in the
/// solid torus, otherwise only the homological one.
int winding_number(const LinkDiagram& d, std::string_view knot, std::string_view axis);
/// Sum of signs of the self-crossings of a component.
int self_writhe(const LinkDiagram& d, std::string_view label);
int writhe(const LinkDiagram& d);

/// Text format:
///   pd v1
///   component <label> <arc,arc,...>
///   crossing <+1|-1> <over_in> <over_out> <under_in> <under_out>
std::string format_pd(const LinkDiagram& d);
LinkDiagram parse_pd(std::string_view text);
LinkDiagram load_pd(const std::filesystem::path& path);
void save_pd(const LinkDiagram& d, const std::filesystem::path& path);

}  // namespace knotfiber
