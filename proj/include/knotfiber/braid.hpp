#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knotfiber {

/// A word in the braid group B_n. Letter +i is sigma_i, -i is sigma_i^-1,
/// with 1 <= i < n. Letters are stored as given; free reduction only happens
/// through free_reduce().
class BraidWord {
 public:
  explicit BraidWord(int strands = 1, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& o) const;
  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Tokens "si", "si^k" or signed integers, separated by whitespace.
/// Throws std::invalid_argument naming the offending token.
BraidWord parse_braid(std::string_view text, int strands);
/// "s1^2 s2^-1" form with runs collapsed; the identity renders as "".
std::string to_string(const BraidWord& b);

enum class BraidFamily { Beta, Morton };

/// beta(n)   = s2 s1^-1 s2^-2n s3^-1 s2 s3^-1 s2^2n s1^-2   in B4
/// morton(i) = s1 s2^(2i+1) s3 s2^-2i                        in B4
BraidWord family_braid(BraidFamily family, int param);
BraidWord beta_braid(int n);
BraidWord morton_braid(int i);
std::optional<BraidFamily> parse_family(std::string_view name);

/// perm[p] is the final position (0-based) of the strand starting at
/// position p, applying the transposition of each letter left to right.
std::vector<int> braid_permutation(const BraidWord& b);
/// Cycles of a permutation, each listed starting from its smallest element,
/// ordered by that element.
std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm);
/// Sorted cycle lengths.
std::vector<int> cycle_type(const std::vector<int>& perm);
int closure_components(const BraidWord& b);
int exponent_sum(const BraidWord& b);
bool is_homogeneous(const BraidWord& b);
BraidWord free_reduce(const BraidWord& b);
/// g * a * g^-1
BraidWord conjugate(const BraidWord& a, const BraidWord& g);

/// Outcome of a braid equality test.
enum class BraidEquality { Equal, NotEqualByInvariant, NotEqual, BudgetExhausted };

/// Decides a == b in B_n through Artin's faithful action on the free group
/// F_n. The action images can grow exponentially in the word length; if any
/// intermediate free-group word exceeds `budget` letters the answer is
/// BudgetExhausted.
BraidEquality braid_equal(const BraidWord& a, const BraidWord& b, std::size_t budget = 1u << 16);

/// Searches freely reduced conjugators g with |g| <= max_len such that
/// g a g^-1 = b. Absence is not a proof of non-conjugacy. Throws on strand
/// mismatch. Candidates are enumerated in shortlex order and the first hit in
/// that order is returned, so the parallel and serial searches agree.
std::optional<BraidWord> conjugate_search(const BraidWord& a, const BraidWord& b, int max_len);
std::optional<BraidWord> conjugate_search_serial(const BraidWord& a, const BraidWord& b,
                                                 int max_len);

}  // namespace knotfiber
