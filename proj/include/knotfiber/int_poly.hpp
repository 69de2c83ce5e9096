#pragma once

#include <vector>

#include "knotfiber/laurent.hpp"

namespace knotfiber {

/// Dense polynomial in Z[t], coefficients in ascending degree, no trailing
/// zeros. Working type for determinants and gcds over the Laurent ring.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly constant(const Integer& c);
  /// Converts a one-variable Laurent polynomial; `shift` receives the lowest
  /// exponent so that p = t^shift * result.
  static IntPoly from_laurent(const LaurentPoly& p, int& shift);

  LaurentPoly to_laurent(int shift = 0) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  const Integer& leading() const { return c_.back(); }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly operator-() const;
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  bool operator==(const IntPoly&) const = default;

  IntPoly scaled(const Integer& k) const;
  /// Multiplication by t^k, k >= 0.
  IntPoly shifted(int k) const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
Integer content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);
/// Greatest common divisor in Z[t], normalized to a positive leading
/// coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace knotfiber
