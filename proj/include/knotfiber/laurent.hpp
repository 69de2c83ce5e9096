#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotfiber {

using Integer = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial with integer coefficients in one or two
/// variables. Terms are kept sorted by exponent vector (lexicographic) and no
/// stored coefficient is zero. For one-variable polynomials the second
/// exponent slot is always 0.
class LaurentPoly {
 public:
  using Exponents = std::array<int, 2>;

  struct Term {
    Exponents exp;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  explicit LaurentPoly(int num_vars = 1);

  static LaurentPoly constant(int num_vars, const Integer& c);
  static LaurentPoly monomial(int num_vars, Exponents e, const Integer& c = 1);
  /// x_index^power
  static LaurentPoly variable(int num_vars, int index, int power = 1);
  /// Merges repeated exponents and drops zero coefficients.
  static LaurentPoly from_terms(int num_vars, std::vector<Term> terms);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Integer coefficient(Exponents e) const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// ±x^a y^b
  bool is_unit() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const = default;

  /// Multiplication by the monomial x^by[0] y^by[1].
  LaurentPoly shifted(Exponents by) const;
  LaurentPoly scaled(const Integer& k) const;
  /// Replaces x_var by x_var^-1.
  LaurentPoly inverted(int var) const;

 private:
  void check_compatible(const LaurentPoly& o) const;

  int num_vars_;
  std::vector<Term> terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

/// a = sign * t^shift * canonical, with canonical having lowest exponent 0 and
/// a positive leading coefficient. The zero polynomial maps to itself with
/// unit +1.
struct UnitNormalization {
  LaurentPoly canonical;
  int sign = 1;
  int shift = 0;
};

UnitNormalization normalize_units(const LaurentPoly& a);

/// Equality up to multiplication by ±t^k (one variable only).
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

/// Minimum and maximum exponent of variable `var`. Throws on zero.
std::pair<int, int> span(const LaurentPoly& a, int var);

/// Default variable names: "t" for one variable, "x","y" for two.
std::vector<std::string> default_names(int num_vars);

/// Renders terms in ascending lexicographic exponent order, e.g.
/// "-x^-2*y + 3".
std::string to_string(const LaurentPoly& p);
std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names);

/// Parses the grammar emitted by to_string. Throws std::invalid_argument.
LaurentPoly parse_laurent(std::string_view text, int num_vars);
LaurentPoly parse_laurent(std::string_view text, int num_vars,
                          const std::vector<std::string>& names);

}  // namespace knotfiber
