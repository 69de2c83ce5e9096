#include "knotfiber/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace knotfiber {

namespace {

bool exp_less(const LaurentPoly::Term& a, const LaurentPoly::Term& b) { return a.exp < b.exp; }

// Sorts, merges equal exponents and drops zeros.
void canonicalize(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), exp_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    LaurentPoly::Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].exp == acc.exp; ++j) acc.coeff += terms[j].coeff;
    if (acc.coeff != 0) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

}  // namespace

LaurentPoly::LaurentPoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars != 1 && num_vars != 2)
    throw std::invalid_argument("LaurentPoly supports 1 or 2 variables");
}

LaurentPoly LaurentPoly::constant(int num_vars, const Integer& c) {
  return monomial(num_vars, {0, 0}, c);
}

LaurentPoly LaurentPoly::monomial(int num_vars, Exponents e, const Integer& c) {
  LaurentPoly p(num_vars);
  if (num_vars == 1 && e[1] != 0)
    throw std::invalid_argument("second exponent given for a one-variable polynomial");
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int index, int power) {
  if (index < 0 || index >= num_vars) throw std::invalid_argument("variable index out of range");
  Exponents e{0, 0};
  e[index] = power;
  return monomial(num_vars, e, 1);
}

LaurentPoly LaurentPoly::from_terms(int num_vars, std::vector<Term> terms) {
  LaurentPoly p(num_vars);
  for (const auto& t : terms)
    if (num_vars == 1 && t.exp[1] != 0)
      throw std::invalid_argument("second exponent given for a one-variable polynomial");
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

Integer LaurentPoly::coefficient(Exponents e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{e, 0}, exp_less);
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (num_vars_ != o.num_vars_) throw std::invalid_argument("LaurentPoly variable-count mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_compatible(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      merged.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly r(a.num_vars_);
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      prod.push_back({{s.exp[0] + t.exp[0], s.exp[1] + t.exp[1]}, s.coeff * t.coeff});
  canonicalize(prod);
  r.terms_ = std::move(prod);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(Exponents by) const {
  if (num_vars_ == 1 && by[1] != 0)
    throw std::invalid_argument("second exponent given for a one-variable polynomial");
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    t.exp[0] += by[0];
    t.exp[1] += by[1];
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& k) const {
  if (k == 0) return LaurentPoly(num_vars_);
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= k;
  return r;
}

LaurentPoly LaurentPoly::inverted(int var) const {
  if (var < 0 || var >= num_vars_) throw std::invalid_argument("variable index out of range");
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.exp[var] = -t.exp[var];
  return from_terms(num_vars_, std::move(terms));
}

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
  LaurentPoly result = LaurentPoly::constant(base.num_vars(), 1);
  LaurentPoly b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

UnitNormalization normalize_units(const LaurentPoly& a) {
  if (a.num_vars() != 1) throw std::invalid_argument("normalize_units expects one variable");
  if (a.is_zero()) return {a, 1, 0};
  const int low = a.terms().front().exp[0];
  const int sign = a.terms().back().coeff < 0 ? -1 : 1;
  LaurentPoly canonical = a.shifted({-low, 0}).scaled(sign);
  return {std::move(canonical), sign, low};
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  return normalize_units(a).canonical == normalize_units(b).canonical;
}

std::pair<int, int> span(const LaurentPoly& a, int var) {
  if (a.is_zero()) throw std::domain_error("span of the zero polynomial");
  if (var < 0 || var >= a.num_vars()) throw std::invalid_argument("variable index out of range");
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto& t : a.terms()) {
    lo = std::min(lo, t.exp[var]);
    hi = std::max(hi, t.exp[var]);
  }
  return {lo, hi};
}

std::vector<std::string> default_names(int num_vars) {
  if (num_vars == 1) return {"t"};
  return {"x", "y"};
}

std::string to_string(const LaurentPoly& p) { return to_string(p, default_names(p.num_vars())); }

std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) < p.num_vars())
    throw std::invalid_argument("not enough variable names");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : p.terms()) {
    const bool negative = term.coeff < 0;
    const Integer magnitude = negative ? Integer(-term.coeff) : term.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (int v = 0; v < p.num_vars(); ++v) {
      const int e = term.exp[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.str() + "*" + mono;
    }
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text, int num_vars) {
  return parse_laurent(text, num_vars, default_names(num_vars));
}

namespace {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, int num_vars, const std::vector<std::string>& names)
      : text_(text), num_vars_(num_vars), names_(names) {}

  LaurentPoly parse() {
    std::vector<LaurentPoly::Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    terms.push_back(parse_term(negative));
    skip_space();
    while (!at_end()) {
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      terms.push_back(parse_term(op == '-'));
      skip_space();
    }
    return LaurentPoly::from_terms(num_vars_, std::move(terms));
  }

 private:
  LaurentPoly::Term parse_term(bool negative) {
    skip_space();
    LaurentPoly::Term term{{0, 0}, 1};
    bool have_factor = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coeff = parse_unsigned();
      have_factor = true;
    }
    for (;;) {
      skip_space();
      if (have_factor) {
        if (at_end() || peek() != '*') break;
        get();
        skip_space();
      }
      if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
        if (have_factor) fail("expected a variable after '*'");
        fail("expected a coefficient or variable");
      }
      const int var = parse_variable();
      int e = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        get();
        skip_space();
        bool neg = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) neg = get() == '-';
        const Integer mag = parse_unsigned();
        if (mag > 1000000) fail("exponent out of range");
        e = neg ? -static_cast<int>(mag) : static_cast<int>(mag);
      }
      term.exp[var] += e;
      have_factor = true;
    }
    if (negative) term.coeff = -term.coeff;
    return term;
  }

  int parse_variable() {
    std::size_t end = pos_;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      ++end;
    const std::string_view name = text_.substr(pos_, end - pos_);
    for (int v = 0; v < num_vars_; ++v)
      if (names_[v] == name) {
        pos_ = end;
        return v;
      }
    fail("unknown variable '" + std::string(name) + "'");
  }

  Integer parse_unsigned() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                                what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int num_vars_;
  const std::vector<std::string>& names_;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, int num_vars,
                          const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) < num_vars)
    throw std::invalid_argument("not enough variable names");
  return LaurentParser(text, num_vars, names).parse();
}

}  // namespace knotfiber
