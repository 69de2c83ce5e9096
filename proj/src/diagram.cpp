#include "knotfiber/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace knotfiber {

namespace {

std::string crossing_name(std::size_t i) { return "crossing " + std::to_string(i + 1); }

bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(),
                      [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; });
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::vector<Component> components)
    : crossings_(std::move(crossings)), components_(std::move(components)) {
  validate();
}

void LinkDiagram::validate() const {
  std::unordered_map<int, std::size_t> owner;
  std::vector<std::string> seen_labels;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    if (!valid_label(comp.label)) throw DiagramError("invalid component label '" + comp.label + "'");
    if (std::find(seen_labels.begin(), seen_labels.end(), comp.label) != seen_labels.end())
      throw DiagramError("duplicate component label '" + comp.label + "'");
    seen_labels.push_back(comp.label);
    if (comp.arcs.empty()) throw DiagramError("component '" + comp.label + "' has no arcs");
    for (int a : comp.arcs) {
      if (a <= 0) throw DiagramError("arc id " + std::to_string(a) + " is not positive");
      if (!owner.emplace(a, c).second)
        throw DiagramError("arc " + std::to_string(a) + " listed more than once in components");
    }
  }

  struct End {
    int count = 0;
    std::size_t crossing = 0;
    StrandRole role = StrandRole::Over;
  };
  std::unordered_map<int, End> heads, tails;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const auto& x = crossings_[i];
    if (x.sign != 1 && x.sign != -1)
      throw DiagramError(crossing_name(i) + ": sign must be +1 or -1");
    for (int a : {x.over_in, x.over_out, x.under_in, x.under_out})
      if (!owner.count(a))
        throw DiagramError(crossing_name(i) + ": arc " + std::to_string(a) +
                           " does not belong to any component");
    if (x.over_in == x.over_out || x.under_in == x.under_out)
      throw DiagramError(crossing_name(i) + ": a strand enters and leaves through the same arc");
    auto note = [&](std::unordered_map<int, End>& m, int a, StrandRole r) {
      End& e = m[a];
      ++e.count;
      e.crossing = i;
      e.role = r;
    };
    note(heads, x.over_in, StrandRole::Over);
    note(heads, x.under_in, StrandRole::Under);
    note(tails, x.over_out, StrandRole::Over);
    note(tails, x.under_out, StrandRole::Under);
  }

  for (const auto& comp : components_) {
    const bool crossingless = comp.arcs.size() == 1 && !heads.count(comp.arcs[0]) &&
                              !tails.count(comp.arcs[0]);
    if (crossingless) continue;
    for (std::size_t k = 0; k < comp.arcs.size(); ++k) {
      const int a = comp.arcs[k];
      const int uses = (heads.count(a) ? heads[a].count : 0) + (tails.count(a) ? tails[a].count : 0);
      if (uses != 2 || !heads.count(a) || !tails.count(a) || heads[a].count != 1)
        throw DiagramError("arc " + std::to_string(a) + " appears " + std::to_string(uses) +
                           " times as a crossing endpoint (expected once in, once out)");
      const int next = comp.arcs[(k + 1) % comp.arcs.size()];
      const End& h = heads[a];
      const auto& x = crossings_[h.crossing];
      const int out = h.role == StrandRole::Over ? x.over_out : x.under_out;
      if (out != next)
        throw DiagramError("component '" + comp.label + "': arc " + std::to_string(a) +
                           " continues through " + crossing_name(h.crossing) + " as arc " +
                           std::to_string(out) + ", not the listed arc " + std::to_string(next));
    }
  }
}

std::size_t LinkDiagram::num_arcs() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.arcs.size();
  return n;
}

int LinkDiagram::crossingless_circles() const {
  int n = 0;
  for (const auto& p : to_passes().passes) n += p.empty() ? 1 : 0;
  return n;
}

bool LinkDiagram::has_label(std::string_view label) const {
  return std::any_of(components_.begin(), components_.end(),
                     [&](const Component& c) { return c.label == label; });
}

std::size_t LinkDiagram::component_index(std::string_view label) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].label == label) return i;
  throw DiagramError("unknown component label '" + std::string(label) + "'");
}

std::size_t LinkDiagram::component_of_arc(int arc) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (std::find(components_[i].arcs.begin(), components_[i].arcs.end(), arc) !=
        components_[i].arcs.end())
      return i;
  throw DiagramError("unknown arc " + std::to_string(arc));
}

PassDiagram LinkDiagram::to_passes() const {
  std::unordered_map<int, Pass> head;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    head[crossings_[i].over_in] = {static_cast<int>(i), StrandRole::Over};
    head[crossings_[i].under_in] = {static_cast<int>(i), StrandRole::Under};
  }
  PassDiagram pd;
  for (const auto& x : crossings_) pd.signs.push_back(x.sign);
  for (const auto& comp : components_) {
    pd.labels.push_back(comp.label);
    std::vector<Pass> seq;
    for (int a : comp.arcs) {
      auto it = head.find(a);
      if (it != head.end()) seq.push_back(it->second);
    }
    pd.passes.push_back(std::move(seq));
  }
  return pd;
}

LinkDiagram LinkDiagram::from_passes(const PassDiagram& pd) {
  if (pd.labels.size() != pd.passes.size())
    throw DiagramError("pass diagram: label count does not match component count");
  std::vector<Crossing> crossings(pd.signs.size());
  std::vector<int> over_seen(pd.signs.size(), 0), under_seen(pd.signs.size(), 0);
  for (std::size_t i = 0; i < pd.signs.size(); ++i) crossings[i].sign = pd.signs[i];
  std::vector<Component> comps;
  int next_arc = 1;
  for (std::size_t c = 0; c < pd.passes.size(); ++c) {
    const auto& seq = pd.passes[c];
    Component comp{pd.labels[c], {}};
    if (seq.empty()) {
      comp.arcs.push_back(next_arc++);
      comps.push_back(std::move(comp));
      continue;
    }
    const int first = next_arc;
    const int k = static_cast<int>(seq.size());
    for (int j = 0; j < k; ++j) comp.arcs.push_back(first + j);
    next_arc += k;
    for (int j = 0; j < k; ++j) {
      const Pass& p = seq[static_cast<std::size_t>(j)];
      if (p.crossing < 0 || static_cast<std::size_t>(p.crossing) >= crossings.size())
        throw DiagramError("pass diagram: crossing index out of range");
      Crossing& x = crossings[static_cast<std::size_t>(p.crossing)];
      const int in = first + j;
      const int out = first + (j + 1) % k;
      if (p.role == StrandRole::Over) {
        ++over_seen[static_cast<std::size_t>(p.crossing)];
        x.over_in = in;
        x.over_out = out;
      } else {
        ++under_seen[static_cast<std::size_t>(p.crossing)];
        x.under_in = in;
        x.under_out = out;
      }
    }
    comps.push_back(std::move(comp));
  }
  for (std::size_t i = 0; i < crossings.size(); ++i)
    if (over_seen[i] != 1 || under_seen[i] != 1)
      throw DiagramError("pass diagram: " + crossing_name(i) +
                         " is not passed exactly once over and once under");
  return LinkDiagram(std::move(crossings), std::move(comps));
}

namespace {

// Builds closed braids (optionally with axes) strand by strand.
class ClosedBraidBuilder {
 public:
  explicit ClosedBraidBuilder(int strands)
      : occupant_(static_cast<std::size_t>(strands)), strand_passes_(static_cast<std::size_t>(strands)) {
    for (int p = 0; p < strands; ++p) occupant_[static_cast<std::size_t>(p)] = p;
  }

  void add_letter(int letter) {
    const std::size_t left = static_cast<std::size_t>(std::abs(letter) - 1);
    const std::size_t right = left + 1;
    const int x = new_crossing(letter > 0 ? 1 : -1);
    // Positive: the strand moving right-to-left passes over.
    const bool left_over = letter < 0;
    passes_of(occupant_[left]).push_back({x, left_over ? StrandRole::Over : StrandRole::Under});
    passes_of(occupant_[right]).push_back({x, left_over ? StrandRole::Under : StrandRole::Over});
    std::swap(occupant_[left], occupant_[right]);
  }

  // A circle around the whole bundle below the braid, over every strand along
  // one edge and under along the other. A positive axis makes every crossing
  // positive: counterclockwise when it is on top along the upper edge,
  // clockwise otherwise.
  void add_axis(AxisOrientation orient, bool over_upper) {
    const int p = static_cast<int>(occupant_.size());
    const int sign = orient == AxisOrientation::Positive ? 1 : -1;
    const StrandRole upper_role = over_upper ? StrandRole::Over : StrandRole::Under;
    const StrandRole lower_role = over_upper ? StrandRole::Under : StrandRole::Over;
    auto other = [](StrandRole r) { return r == StrandRole::Over ? StrandRole::Under : StrandRole::Over; };
    std::vector<int> upper, lower;
    for (int j = 0; j < p; ++j) {
      upper.push_back(new_crossing(sign));
      passes_of(occupant_[static_cast<std::size_t>(j)]).push_back({upper.back(), other(upper_role)});
    }
    for (int j = 0; j < p; ++j) {
      lower.push_back(new_crossing(sign));
      passes_of(occupant_[static_cast<std::size_t>(j)]).push_back({lower.back(), other(lower_role)});
    }
    // Counterclockwise: upper edge right to left, lower edge left to right.
    const bool ccw = (orient == AxisOrientation::Positive) == over_upper;
    std::vector<Pass> axis;
    if (ccw) {
      for (int j = p - 1; j >= 0; --j) axis.push_back({upper[static_cast<std::size_t>(j)], upper_role});
      for (int j = 0; j < p; ++j) axis.push_back({lower[static_cast<std::size_t>(j)], lower_role});
    } else {
      for (int j = 0; j < p; ++j) axis.push_back({upper[static_cast<std::size_t>(j)], upper_role});
      for (int j = p - 1; j >= 0; --j) axis.push_back({lower[static_cast<std::size_t>(j)], lower_role});
    }
    axes_.push_back(std::move(axis));
  }

  // Closure components in order of their smallest starting position.
  PassDiagram finish(const std::vector<std::string>& closure_labels,
                     const std::vector<std::string>& axis_labels) const {
    PassDiagram pd;
    pd.signs = signs_;
    const std::size_t n = occupant_.size();
    std::vector<int> final_pos(n);
    for (std::size_t p = 0; p < n; ++p) final_pos[static_cast<std::size_t>(occupant_[p])] = static_cast<int>(p);
    std::vector<bool> seen(n, false);
    std::size_t label_index = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<Pass> seq;
      for (std::size_t cur = s; !seen[cur]; cur = static_cast<std::size_t>(final_pos[cur])) {
        seen[cur] = true;
        seq.insert(seq.end(), strand_passes_[cur].begin(), strand_passes_[cur].end());
      }
      pd.labels.push_back(closure_labels.at(label_index++));
      pd.passes.push_back(std::move(seq));
    }
    for (std::size_t a = 0; a < axes_.size(); ++a) {
      pd.labels.push_back(axis_labels.at(a));
      pd.passes.push_back(axes_[a]);
    }
    return pd;
  }

 private:
  int new_crossing(int sign) {
    signs_.push_back(sign);
    return static_cast<int>(signs_.size()) - 1;
  }
  std::vector<Pass>& passes_of(int strand) { return strand_passes_[static_cast<std::size_t>(strand)]; }

  std::vector<int> occupant_;  // strand (by starting position) at each position
  std::vector<std::vector<Pass>> strand_passes_;
  std::vector<std::vector<Pass>> axes_;
  std::vector<int> signs_;
};

std::vector<std::string> numbered_labels(int count) {
  std::vector<std::string> labels;
  for (int i = 1; i <= count; ++i) labels.push_back("c" + std::to_string(i));
  return labels;
}

}  // namespace

LinkDiagram braid_closure_diagram(const BraidWord& b) {
  ClosedBraidBuilder builder(b.strands());
  for (int l : b.letters()) builder.add_letter(l);
  return LinkDiagram::from_passes(builder.finish(numbered_labels(closure_components(b)), {}));
}

LinkDiagram encircle(const BraidWord& b, const std::vector<AxisOrientation>& axes,
                     bool axis_over_upper) {
  if (axes.empty()) throw std::invalid_argument("encircle needs at least one axis");
  if (axes.size() > 2) throw std::invalid_argument("encircle supports at most two axes");
  ClosedBraidBuilder builder(b.strands());
  for (int l : b.letters()) builder.add_letter(l);
  for (auto a : axes) builder.add_axis(a, axis_over_upper);
  const int comps = closure_components(b);
  auto labels = comps == 1 ? std::vector<std::string>{"k"} : numbered_labels(comps);
  return LinkDiagram::from_passes(builder.finish(labels, {"m", "m_prime"}));
}

std::vector<AxisOrientation> parse_axes(std::string_view text) {
  std::vector<AxisOrientation> axes;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                token.end());
    if (token == "+")
      axes.push_back(AxisOrientation::Positive);
    else if (token == "-")
      axes.push_back(AxisOrientation::Negative);
    else
      throw std::invalid_argument("axis orientation must be '+' or '-', got '" + token + "'");
  }
  if (axes.empty()) throw std::invalid_argument("empty axis list");
  if (axes.size() > 2) throw std::invalid_argument("at most two axes are supported");
  return axes;
}

LinkDiagram reverse_component(const LinkDiagram& d, std::string_view label) {
  const std::size_t ci = d.component_index(label);
  const auto& arcs = d.components()[ci].arcs;
  std::vector<bool> mine(d.num_arcs() + 1, false);
  int max_arc = 0;
  for (const auto& c : d.components())
    for (int a : c.arcs) max_arc = std::max(max_arc, a);
  mine.assign(static_cast<std::size_t>(max_arc) + 1, false);
  for (int a : arcs) mine[static_cast<std::size_t>(a)] = true;

  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs) {
    const bool over_mine = mine[static_cast<std::size_t>(x.over_in)];
    const bool under_mine = mine[static_cast<std::size_t>(x.under_in)];
    if (over_mine) std::swap(x.over_in, x.over_out);
    if (under_mine) std::swap(x.under_in, x.under_out);
    if (over_mine != under_mine) x.sign = -x.sign;
  }
  std::vector<Component> comps = d.components();
  auto& r = comps[ci].arcs;
  // Arc k runs between passes k-1 and k; reversing the circle reverses the
  // list. Keep the first arc first.
  std::reverse(r.begin() + 1, r.end());
  return LinkDiagram(std::move(xs), std::move(comps));
}

LinkDiagram relabel_component(const LinkDiagram& d, std::string_view from, std::string_view to) {
  const std::size_t ci = d.component_index(from);
  if (from != to && d.has_label(to))
    throw DiagramError("label '" + std::string(to) + "' already in use");
  std::vector<Component> comps = d.components();
  comps[ci].label = std::string(to);
  return LinkDiagram(d.crossings(), std::move(comps));
}

LinkDiagram delete_component(const LinkDiagram& d, std::string_view label) {
  const std::size_t ci = d.component_index(label);
  PassDiagram pd = d.to_passes();
  std::vector<bool> removed(pd.signs.size(), false);
  for (const auto& p : pd.passes[ci]) removed[static_cast<std::size_t>(p.crossing)] = true;
  std::vector<int> new_index(pd.signs.size(), -1);
  PassDiagram out;
  for (std::size_t i = 0; i < pd.signs.size(); ++i)
    if (!removed[i]) {
      new_index[i] = static_cast<int>(out.signs.size());
      out.signs.push_back(pd.signs[i]);
    }
  for (std::size_t c = 0; c < pd.passes.size(); ++c) {
    if (c == ci) continue;
    std::vector<Pass> seq;
    for (const auto& p : pd.passes[c])
      if (!removed[static_cast<std::size_t>(p.crossing)])
        seq.push_back({new_index[static_cast<std::size_t>(p.crossing)], p.role});
    out.labels.push_back(pd.labels[c]);
    out.passes.push_back(std::move(seq));
  }
  return LinkDiagram::from_passes(out);
}

int linking_number(const LinkDiagram& d, std::string_view a, std::string_view b) {
  if (a == b) throw DiagramError("linking number needs two distinct components");
  const std::size_t ia = d.component_index(a);
  const std::size_t ib = d.component_index(b);
  int sum = 0;
  for (const auto& x : d.crossings()) {
    const std::size_t co = d.component_of_arc(x.over_in);
    const std::size_t cu = d.component_of_arc(x.under_in);
    if ((co == ia && cu == ib) || (co == ib && cu == ia)) sum += x.sign;
  }
  if (sum % 2 != 0) throw DiagramError("odd signed crossing count between components");
  return sum / 2;
}

int winding_number(const LinkDiagram& d, std::string_view knot, std::string_view axis) {
  return std::abs(linking_number(d, knot, axis));
}

int self_writhe(const LinkDiagram& d, std::string_view label) {
  const std::size_t ci = d.component_index(label);
  int w = 0;
  for (const auto& x : d.crossings())
    if (d.component_of_arc(x.over_in) == ci && d.component_of_arc(x.under_in) == ci) w += x.sign;
  return w;
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& x : d.crossings()) w += x.sign;
  return w;
}

LinkDiagram double_component(const LinkDiagram& d, std::string_view label,
                             std::string_view copy_label, bool reversed) {
  const std::size_t ci = d.component_index(label);
  if (d.has_label(copy_label))
    throw DiagramError("label '" + std::string(copy_label) + "' already in use");
  const PassDiagram pd = d.to_passes();

  // Which component passes each crossing over / under.
  std::vector<std::size_t> over_comp(pd.signs.size()), under_comp(pd.signs.size());
  for (std::size_t c = 0; c < pd.passes.size(); ++c)
    for (const auto& p : pd.passes[c])
      (p.role == StrandRole::Over ? over_comp : under_comp)[static_cast<std::size_t>(p.crossing)] = c;

  PassDiagram out;
  auto new_crossing = [&](int sign) {
    out.signs.push_back(sign);
    return static_cast<int>(out.signs.size()) - 1;
  };
  // Replacement pass lists for each original (crossing, role), for the
  // component itself and for the copy (which runs on its left).
  std::map<std::pair<int, int>, std::vector<Pass>> orig_repl, copy_repl;
  auto key = [](int x, StrandRole r) { return std::make_pair(x, r == StrandRole::Over ? 0 : 1); };
  const auto O = StrandRole::Over;
  const auto U = StrandRole::Under;

  for (std::size_t i = 0; i < pd.signs.size(); ++i) {
    const int s = pd.signs[i];
    const int xi = static_cast<int>(i);
    const bool c_over = over_comp[i] == ci;
    const bool c_under = under_comp[i] == ci;
    if (!c_over && !c_under) {
      const int y = new_crossing(s);
      orig_repl[key(xi, O)] = {{y, O}};
      orig_repl[key(xi, U)] = {{y, U}};
    } else if (c_over && !c_under) {
      // The under strand crosses from the right of C to its left when s > 0.
      const int y = new_crossing(s), yc = new_crossing(s);
      orig_repl[key(xi, O)] = {{y, O}};
      copy_repl[key(xi, O)] = {{yc, O}};
      orig_repl[key(xi, U)] = s > 0 ? std::vector<Pass>{{y, U}, {yc, U}}
                                    : std::vector<Pass>{{yc, U}, {y, U}};
    } else if (!c_over && c_under) {
      // The over strand crosses from the left of C to its right when s > 0.
      const int y = new_crossing(s), yc = new_crossing(s);
      orig_repl[key(xi, U)] = {{y, U}};
      copy_repl[key(xi, U)] = {{yc, U}};
      orig_repl[key(xi, O)] = s > 0 ? std::vector<Pass>{{yc, O}, {y, O}}
                                    : std::vector<Pass>{{y, O}, {yc, O}};
    } else {
      // Self-crossing: over pass o (and copy o'), under pass u (and copy u').
      const int ou = new_crossing(s), ouc = new_crossing(s);
      const int ocu = new_crossing(s), ocuc = new_crossing(s);
      const bool pos = s > 0;
      orig_repl[key(xi, O)] = pos ? std::vector<Pass>{{ouc, O}, {ou, O}}
                                  : std::vector<Pass>{{ou, O}, {ouc, O}};
      copy_repl[key(xi, O)] = pos ? std::vector<Pass>{{ocuc, O}, {ocu, O}}
                                  : std::vector<Pass>{{ocu, O}, {ocuc, O}};
      orig_repl[key(xi, U)] = pos ? std::vector<Pass>{{ou, U}, {ocu, U}}
                                  : std::vector<Pass>{{ocu, U}, {ou, U}};
      copy_repl[key(xi, U)] = pos ? std::vector<Pass>{{ouc, U}, {ocuc, U}}
                                  : std::vector<Pass>{{ocuc, U}, {ouc, U}};
    }
  }

  // Full twists restoring zero framing, placed before the first pass of C.
  const int w = self_writhe(d, label);
  std::vector<Pass> twist_orig, twist_copy;
  const int twist_sign = w > 0 ? -1 : 1;
  for (int t = 0; t < std::abs(w); ++t) {
    const int first = new_crossing(twist_sign);
    const int second = new_crossing(twist_sign);
    // Positive twist: the copy (left strand) passes over first, then C.
    const bool copy_over_first = twist_sign > 0;
    twist_copy.push_back({first, copy_over_first ? O : U});
    twist_orig.push_back({first, copy_over_first ? U : O});
    twist_copy.push_back({second, copy_over_first ? U : O});
    twist_orig.push_back({second, copy_over_first ? O : U});
  }

  for (std::size_t c = 0; c < pd.passes.size(); ++c) {
    std::vector<Pass> seq;
    if (c == ci) seq = twist_orig;
    for (const auto& p : pd.passes[c]) {
      const auto& r = orig_repl.at(key(p.crossing, p.role));
      seq.insert(seq.end(), r.begin(), r.end());
    }
    out.labels.push_back(pd.labels[c]);
    out.passes.push_back(std::move(seq));
  }
  std::vector<Pass> copy_seq = twist_copy;
  for (const auto& p : pd.passes[ci]) {
    const auto& r = copy_repl.at(key(p.crossing, p.role));
    copy_seq.insert(copy_seq.end(), r.begin(), r.end());
  }
  out.labels.emplace_back(copy_label);
  out.passes.push_back(std::move(copy_seq));

  LinkDiagram doubled = LinkDiagram::from_passes(out);
  if (reversed) doubled = reverse_component(doubled, copy_label);
  return doubled;
}

std::string format_pd(const LinkDiagram& d) {
  std::ostringstream out;
  out << "pd v1\n";
  for (const auto& c : d.components()) {
    out << "component " << c.label << ' ';
    for (std::size_t i = 0; i < c.arcs.size(); ++i) out << (i ? "," : "") << c.arcs[i];
    out << '\n';
  }
  for (const auto& x : d.crossings())
    out << "crossing " << (x.sign > 0 ? "+1" : "-1") << ' ' << x.over_in << ' ' << x.over_out << ' '
        << x.under_in << ' ' << x.under_out << '\n';
  return out.str();
}

namespace {

int parse_arc_id(const std::string& tok, std::size_t line) {
  const auto fail = [&] {
    return DiagramError("line " + std::to_string(line) + ": bad arc id '" + tok + "'");
  };
  if (tok.empty() || tok.size() > 9) throw fail();
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
  const int v = std::stoi(tok);
  if (v <= 0) throw fail();
  return v;
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::vector<Component> comps;
  std::vector<Crossing> xs;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (!header) {
      if (tok.size() != 2 || tok[0] != "pd" || tok[1] != "v1")
        throw DiagramError(where + "expected header 'pd v1'");
      header = true;
      continue;
    }
    if (tok[0] == "component") {
      if (!xs.empty()) throw DiagramError(where + "component lines must precede crossing lines");
      if (tok.size() != 3) throw DiagramError(where + "expected 'component <label> <arcs>'");
      Component c{tok[1], {}};
      std::istringstream arcs(tok[2]);
      for (std::string a; std::getline(arcs, a, ',');) c.arcs.push_back(parse_arc_id(a, line_no));
      comps.push_back(std::move(c));
    } else if (tok[0] == "crossing") {
      if (tok.size() != 6)
        throw DiagramError(where + "expected 'crossing <sign> <over_in> <over_out> <under_in> <under_out>'");
      Crossing x;
      if (tok[1] == "+1" || tok[1] == "+" || tok[1] == "1")
        x.sign = 1;
      else if (tok[1] == "-1" || tok[1] == "-")
        x.sign = -1;
      else
        throw DiagramError(where + "bad crossing sign '" + tok[1] + "'");
      x.over_in = parse_arc_id(tok[2], line_no);
      x.over_out = parse_arc_id(tok[3], line_no);
      x.under_in = parse_arc_id(tok[4], line_no);
      x.under_out = parse_arc_id(tok[5], line_no);
      xs.push_back(x);
    } else {
      throw DiagramError(where + "unknown record '" + tok[0] + "'");
    }
  }
  if (!header) throw DiagramError("missing header 'pd v1'");
  if (comps.empty()) throw DiagramError("diagram has no components");
  return LinkDiagram(std::move(xs), std::move(comps));
}

LinkDiagram load_pd(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DiagramError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_pd(buf.str());
  } catch (const DiagramError& e) {
    throw DiagramError(path.filename().string() + ": " + e.what());
  }
}

void save_pd(const LinkDiagram& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DiagramError("cannot write " + path.string());
  out << format_pd(d);
}

}  // namespace knotfiber
