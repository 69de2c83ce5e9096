#pragma once

#include <vector>

#include "knotfiber/braid.hpp"
#include "knotfiber/diagram.hpp"
#include "knotfiber/laurent.hpp"

namespace knotfiber {

/// Reduced Burau matrix of a braid, (n-1)x(n-1) over Z[t, t^-1].
std::vector<std::vector<LaurentPoly>> reduced_burau(const BraidWord& b);

/// Cofactor-expansion determinant; only for the small Burau matrices.
LaurentPoly cofactor_determinant(const std::vector<std::vector<LaurentPoly>>& m);

/// det(Burau(B) - I) / (1 + t + ... + t^(n-1)), unit-normalized. Throws
/// std::invalid_argument unless the closure of B is a knot.
LaurentPoly burau_alexander(const BraidWord& b);

/// HOMFLY-PT polynomial in (x, y) with the skein relation
///   x P(L+) + x^-1 P(L-) + y P(L0) = 0,   P(unknot) = 1.
/// `mirror` substitutes x -> x^-1 in the result, i.e. evaluates the mirror
/// image. Split unions multiply by delta = -(x + x^-1) y^-1.
struct HomflyOptions {
  bool mirror = false;
  /// Evaluate the top of the skein tree as OpenMP tasks.
  bool parallel = true;
  bool memoize = true;
};

LaurentPoly homfly(const LinkDiagram& d, const HomflyOptions& opts = {});
LaurentPoly homfly_serial(const LinkDiagram& d, bool mirror = false);

/// delta^(c-1), the value on the c-component unlink.
LaurentPoly unlink_homfly(int components);

/// (e_max - e_min)/2 + 1 for the x-span of a HOMFLY polynomial. Throws
/// std::domain_error on odd span or the zero polynomial.
int mfw_bound(const LaurentPoly& homfly_poly);
int mfw_bound(const LinkDiagram& d, bool mirror = false);

/// Alexander polynomial of a knot read off its HOMFLY polynomial
/// (x = i, y = -i z, z^2 = t - 2 + t^-1), unit-normalized. Throws
/// std::invalid_argument if some y-exponent is odd.
LaurentPoly alexander_from_homfly(const LaurentPoly& homfly_poly);

}  // namespace knotfiber
