#include "knotfiber/int_poly.hpp"

#include <stdexcept>
#include <utility>

namespace knotfiber {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::from_laurent(const LaurentPoly& p, int& shift) {
  if (p.num_vars() != 1) throw std::invalid_argument("IntPoly requires a one-variable polynomial");
  shift = 0;
  if (p.is_zero()) return {};
  shift = p.terms().front().exp[0];
  std::vector<Integer> c(static_cast<std::size_t>(p.terms().back().exp[0] - shift + 1));
  for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.exp[0] - shift)] = t.coeff;
  return IntPoly(std::move(c));
}

LaurentPoly IntPoly::to_laurent(int shift) const {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) terms.push_back({{static_cast<int>(i) + shift, 0}, c_[i]});
  return LaurentPoly::from_terms(1, std::move(terms));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const Integer& k) const {
  if (k == 0) return {};
  IntPoly r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

IntPoly IntPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("IntPoly::shifted expects k >= 0");
  if (is_zero()) return {};
  std::vector<Integer> c(static_cast<std::size_t>(k), Integer(0));
  c.insert(c.end(), c_.begin(), c_.end());
  return IntPoly(std::move(c));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Integer& lead = b.leading();
  const auto& bc = b.coeffs();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Integer& top = rem[static_cast<std::size_t>(i + b.degree())];
    if (top == 0) continue;
    Integer qi, r;
    boost::multiprecision::divide_qr(top, lead, qi, r);
    if (r != 0) throw std::domain_error("inexact polynomial division");
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= qi * bc[j];
    q[static_cast<std::size_t>(i)] = std::move(qi);
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("inexact polynomial division");
  return IntPoly(std::move(q));
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c = p.coeffs();
  for (auto& x : c) x /= g;
  return IntPoly(std::move(c));
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  const Integer& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const Integer la = a.leading();
    const int shift = a.degree() - db;
    a = a.scaled(lb) - b.shifted(shift).scaled(la);
  }
  return a;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b).scaled(content(b));
  if (b.is_zero()) return primitive_part(a).scaled(content(a));
  const Integer c = boost::multiprecision::gcd(content(a), content(b));
  IntPoly u = primitive_part(a);
  IntPoly v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  return primitive_part(u).scaled(c);
}

}  // namespace knotfiber
