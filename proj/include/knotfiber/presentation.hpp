#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotfiber/diagram.hpp"
#include "knotfiber/laurent.hpp"

namespace knotfiber {

/// Wirtinger presentation of a link group. Generators are over-arcs (arcs of
/// the diagram merged through over-passes). One relator per crossing; with
/// over generator u, incoming under generator a and outgoing b:
///   positive crossing: b^-1 u a u^-1
///   negative crossing: b^-1 u^-1 a u
/// Letters are signed 1-based generator indices.
struct WirtingerData {
  std::vector<std::string> component_labels;
  std::vector<std::size_t> generator_component;
  std::vector<std::vector<int>> relators;
  /// Exponent of t assigned to the meridians of each component; empty until
  /// assign_weights.
  std::map<std::string, int> weights;

  std::size_t num_generators() const { return generator_component.size(); }
  bool weighted() const { return !weights.empty(); }
  int generator_weight(std::size_t g) const;
};

/// Throws DiagramError if some component has no crossings.
WirtingerData wirtinger(const LinkDiagram& d);

/// Every component label must be present. Throws std::invalid_argument.
WirtingerData assign_weights(WirtingerData w, const std::map<std::string, int>& weights);
/// Weight 1 on every component.
WirtingerData all_ones(WirtingerData w);

/// Image of the relator under the weighting; always 0 for Wirtinger relators.
int relator_weight_sum(const WirtingerData& w, std::size_t relator);

/// Fox Jacobian (relators x generators) under g -> t^weight(g).
std::vector<std::vector<LaurentPoly>> fox_matrix(const WirtingerData& w);

struct AlexanderOptions {
  /// Generator column to delete; -1 picks the first generator of nonzero
  /// weight.
  int deleted_column = -1;
  /// Minors evaluated in an OpenMP loop.
  bool parallel = true;
  /// Eliminate unit pivots (entries ±t^k) before taking minors. Without it
  /// every maximal minor of the full matrix is expanded by Bareiss.
  bool reduce_unit_pivots = true;
};

/// Generator of the first elementary ideal of the weighted Alexander
/// module: gcd of all maximal minors of the Fox matrix with one column
/// deleted, unit-normalized. The zero polynomial is a legal result.
/// Throws std::invalid_argument if unweighted or every weight is zero.
LaurentPoly alexander_poly(const WirtingerData& w, const AlexanderOptions& opts = {});
LaurentPoly alexander_poly_serial(const WirtingerData& w, int deleted_column = -1);

/// Shorthand: all-ones Alexander polynomial of a diagram.
LaurentPoly alexander_of(const LinkDiagram& d);

/// Determinant of a square matrix over Z[t, t^-1] by fraction-free
/// elimination.
LaurentPoly bareiss_determinant(std::vector<std::vector<LaurentPoly>> m);

/// Leading and trailing coefficients of a canonical polynomial are ±1.
bool is_monic(const LaurentPoly& canonical);

/// Text dump:
///   wirtinger v1
///   generator g<i> <component label>
///   relator r<j> <word in g<i> and g<i>^-1>
///   weight <label> <int>
std::string format_presentation(const WirtingerData& w);

}  // namespace knotfiber
