#include "knotfiber/braid.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knotfiber {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("a braid needs at least one strand");
  for (int l : letters_)
    if (l == 0 || std::abs(l) >= strands)
      throw std::invalid_argument("braid letter " + std::to_string(l) + " out of range for B" +
                                  std::to_string(strands));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& l : inv) l = -l;
  return BraidWord(strands_, std::move(inv));
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (strands_ != o.strands_) throw std::invalid_argument("braid strand mismatch");
  std::vector<int> w = letters_;
  w.insert(w.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(strands_, std::move(w));
}

namespace {

int parse_int_token(const std::string& s, const std::string& token) {
  if (s.empty()) throw std::invalid_argument("malformed braid token '" + token + "'");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) throw std::invalid_argument("malformed braid token '" + token + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("malformed braid token '" + token + "'");
  if (s.size() - i > 6) throw std::invalid_argument("braid token '" + token + "' out of range");
  return std::stoi(s);
}

}  // namespace

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw std::invalid_argument("a braid needs at least one strand");
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    int generator = 0;
    int power = 1;
    if (token[0] == 's' || token[0] == 'S') {
      const auto caret = token.find('^');
      generator = parse_int_token(token.substr(1, caret == std::string::npos ? std::string::npos
                                                                             : caret - 1),
                                  token);
      if (generator <= 0) throw std::invalid_argument("malformed braid token '" + token + "'");
      if (caret != std::string::npos) power = parse_int_token(token.substr(caret + 1), token);
      if (power == 0) throw std::invalid_argument("zero exponent in braid token '" + token + "'");
    } else {
      generator = parse_int_token(token, token);
      if (generator == 0) throw std::invalid_argument("braid letter 0 in token '" + token + "'");
      if (generator < 0) {
        generator = -generator;
        power = -1;
      }
    }
    if (generator >= strands)
      throw std::invalid_argument("braid token '" + token + "' out of range for B" +
                                  std::to_string(strands));
    const int letter = power > 0 ? generator : -generator;
    for (int k = 0; k < std::abs(power); ++k) letters.push_back(letter);
  }
  return BraidWord(strands, std::move(letters));
}

std::string to_string(const BraidWord& b) {
  std::string out;
  const auto& w = b.letters();
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const int count = static_cast<int>(j - i);
    const int power = w[i] > 0 ? count : -count;
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(std::abs(w[i]));
    if (power != 1) out += '^' + std::to_string(power);
    i = j;
  }
  return out;
}

BraidWord beta_braid(int n) {
  if (n < 0) throw std::invalid_argument("beta family parameter must be >= 0");
  std::vector<int> w{2, -1};
  w.insert(w.end(), static_cast<std::size_t>(2 * n), -2);
  w.insert(w.end(), {-3, 2, -3});
  w.insert(w.end(), static_cast<std::size_t>(2 * n), 2);
  w.insert(w.end(), {-1, -1});
  return BraidWord(4, std::move(w));
}

BraidWord morton_braid(int i) {
  if (i < 0) throw std::invalid_argument("morton family parameter must be >= 0");
  std::vector<int> w{1};
  w.insert(w.end(), static_cast<std::size_t>(2 * i + 1), 2);
  w.push_back(3);
  w.insert(w.end(), static_cast<std::size_t>(2 * i), -2);
  return BraidWord(4, std::move(w));
}

BraidWord family_braid(BraidFamily family, int param) {
  switch (family) {
    case BraidFamily::Beta:
      return beta_braid(param);
    case BraidFamily::Morton:
      return morton_braid(param);
  }
  throw std::invalid_argument("unknown braid family");
}

std::optional<BraidFamily> parse_family(std::string_view name) {
  if (name == "beta") return BraidFamily::Beta;
  if (name == "morton") return BraidFamily::Morton;
  return std::nullopt;
}

std::vector<int> braid_permutation(const BraidWord& b) {
  const int n = b.strands();
  // occupant[p] = strand currently at position p
  std::vector<int> occupant(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) occupant[static_cast<std::size_t>(p)] = p;
  for (int l : b.letters()) {
    const int i = std::abs(l) - 1;
    std::swap(occupant[static_cast<std::size_t>(i)], occupant[static_cast<std::size_t>(i + 1)]);
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) perm[static_cast<std::size_t>(occupant[static_cast<std::size_t>(p)])] = p;
  return perm;
}

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cycle;
    for (std::size_t p = s; !seen[p]; p = static_cast<std::size_t>(perm[p])) {
      seen[p] = true;
      cycle.push_back(static_cast<int>(p));
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> t;
  for (const auto& c : permutation_cycles(perm)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end());
  return t;
}

int closure_components(const BraidWord& b) {
  return static_cast<int>(permutation_cycles(braid_permutation(b)).size());
}

int exponent_sum(const BraidWord& b) {
  int s = 0;
  for (int l : b.letters()) s += l > 0 ? 1 : -1;
  return s;
}

bool is_homogeneous(const BraidWord& b) {
  std::vector<int> sign(static_cast<std::size_t>(b.strands()), 0);
  for (int l : b.letters()) {
    int& s = sign[static_cast<std::size_t>(std::abs(l))];
    const int ls = l > 0 ? 1 : -1;
    if (s == 0) s = ls;
    if (s != ls) return false;
  }
  return true;
}

BraidWord free_reduce(const BraidWord& b) {
  std::vector<int> out;
  for (int l : b.letters()) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(b.strands(), std::move(out));
}

BraidWord conjugate(const BraidWord& a, const BraidWord& g) { return g * a * g.inverse(); }

namespace {

using FreeWord = std::vector<int>;  // signed 1-based free generators

struct BudgetExceeded {};

void append_reduced(FreeWord& out, const FreeWord& w, bool inverted, std::size_t budget) {
  auto push = [&](int l) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  };
  if (!inverted) {
    for (int l : w) push(l);
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) push(-*it);
  }
  if (out.size() > budget) throw BudgetExceeded{};
}

// Images of the free generators x_1..x_n under the automorphism of one braid
// letter.
std::vector<FreeWord> letter_images(int n, int letter) {
  std::vector<FreeWord> img(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = {j + 1};
  const int i = std::abs(letter);  // x_i, x_{i+1} are 1-based i, i+1
  if (letter > 0) {
    img[static_cast<std::size_t>(i - 1)] = {i, i + 1, -i};
    img[static_cast<std::size_t>(i)] = {i};
  } else {
    img[static_cast<std::size_t>(i - 1)] = {i + 1};
    img[static_cast<std::size_t>(i)] = {-(i + 1), i, i + 1};
  }
  return img;
}

// Artin representation: images of each generator under the word, built by
// substituting letters from the right.
std::vector<FreeWord> artin_images(const BraidWord& b, std::size_t budget) {
  const int n = b.strands();
  std::vector<FreeWord> cur(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) cur[static_cast<std::size_t>(j)] = {j + 1};
  const auto& w = b.letters();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const auto img = letter_images(n, *it);
    for (auto& word : cur) {
      FreeWord next;
      for (int l : word) append_reduced(next, img[static_cast<std::size_t>(std::abs(l) - 1)], l < 0, budget);
      word = std::move(next);
    }
  }
  return cur;
}

}  // namespace

BraidEquality braid_equal(const BraidWord& a, const BraidWord& b, std::size_t budget) {
  if (a.strands() != b.strands()) throw std::invalid_argument("braid strand mismatch");
  if (exponent_sum(a) != exponent_sum(b) || braid_permutation(a) != braid_permutation(b))
    return BraidEquality::NotEqualByInvariant;
  try {
    return artin_images(free_reduce(a), budget) == artin_images(free_reduce(b), budget)
               ? BraidEquality::Equal
               : BraidEquality::NotEqual;
  } catch (const BudgetExceeded&) {
    return BraidEquality::BudgetExhausted;
  }
}

namespace {

// Alphabet ordering for enumeration: 1, -1, 2, -2, ...
int alphabet_letter(int index) { return index % 2 == 0 ? index / 2 + 1 : -(index / 2 + 1); }

std::uint64_t count_reduced_words(int alphabet, int len) {
  if (len == 0) return 1;
  std::uint64_t c = static_cast<std::uint64_t>(alphabet);
  for (int k = 1; k < len; ++k) c *= static_cast<std::uint64_t>(alphabet - 1);
  return c;
}

// Decodes the idx-th freely reduced word of length len in shortlex order.
std::vector<int> decode_word(std::uint64_t idx, int alphabet, int len) {
  std::vector<int> digits(static_cast<std::size_t>(len));
  for (int k = len - 1; k >= 1; --k) {
    digits[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::uint64_t>(alphabet - 1));
    idx /= static_cast<std::uint64_t>(alphabet - 1);
  }
  if (len > 0) digits[0] = static_cast<int>(idx);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(len));
  int prev = 0;
  for (int k = 0; k < len; ++k) {
    int d = digits[static_cast<std::size_t>(k)];
    if (k > 0) {
      // skip the inverse of the previous letter
      const int banned = prev % 2 == 0 ? prev + 1 : prev - 1;
      if (d >= banned) ++d;
    }
    prev = d;
    word.push_back(alphabet_letter(d));
  }
  return word;
}

bool conjugates_to(const BraidWord& a, const BraidWord& b, const std::vector<int>& g) {
  const BraidWord gw(a.strands(), g);
  return braid_equal(conjugate(a, gw), b) == BraidEquality::Equal;
}

bool conjugacy_invariants_match(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("braid strand mismatch");
  return exponent_sum(a) == exponent_sum(b) &&
         cycle_type(braid_permutation(a)) == cycle_type(braid_permutation(b));
}

}  // namespace

std::optional<BraidWord> conjugate_search_serial(const BraidWord& a, const BraidWord& b,
                                                 int max_len) {
  if (!conjugacy_invariants_match(a, b)) return std::nullopt;
  const int alphabet = 2 * (a.strands() - 1);
  for (int len = 0; len <= max_len; ++len) {
    if (len > 0 && alphabet == 0) break;
    const std::uint64_t total = count_reduced_words(alphabet, len);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      auto g = decode_word(idx, alphabet, len);
      if (conjugates_to(a, b, g)) return BraidWord(a.strands(), std::move(g));
    }
  }
  return std::nullopt;
}

std::optional<BraidWord> conjugate_search(const BraidWord& a, const BraidWord& b, int max_len) {
  if (!conjugacy_invariants_match(a, b)) return std::nullopt;
  const int alphabet = 2 * (a.strands() - 1);
  for (int len = 0; len <= max_len; ++len) {
    if (len > 0 && alphabet == 0) break;
    const auto total = static_cast<std::int64_t>(count_reduced_words(alphabet, len));
    std::int64_t best = INT64_MAX;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      if (idx >= best) continue;
      if (conjugates_to(a, b, decode_word(static_cast<std::uint64_t>(idx), alphabet, len)))
        best = std::min(best, idx);
    }
    if (best != INT64_MAX)
      return BraidWord(a.strands(), decode_word(static_cast<std::uint64_t>(best), alphabet, len));
  }
  return std::nullopt;
}

}  // namespace knotfiber
