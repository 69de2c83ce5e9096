#include "knotfiber/invariants.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "knotfiber/int_poly.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knotfiber {

// ---------------------------------------------------------------- Burau

std::vector<std::vector<LaurentPoly>> reduced_burau(const BraidWord& b) {
  const std::size_t m = static_cast<std::size_t>(b.strands() - 1);
  using Mat = std::vector<std::vector<LaurentPoly>>;
  auto identity = [m] {
    Mat id(m, std::vector<LaurentPoly>(m, LaurentPoly(1)));
    for (std::size_t i = 0; i < m; ++i) id[i][i] = LaurentPoly::constant(1, 1);
    return id;
  };
  auto mul = [m](const Mat& a, const Mat& c) {
    Mat r(m, std::vector<LaurentPoly>(m, LaurentPoly(1)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        if (a[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j)
          if (!c[k][j].is_zero()) r[i][j] += a[i][k] * c[k][j];
      }
    return r;
  };
  const LaurentPoly t = LaurentPoly::variable(1, 0);
  const LaurentPoly ti = LaurentPoly::variable(1, 0, -1);
  const LaurentPoly one = LaurentPoly::constant(1, 1);

  Mat acc = identity();
  for (int letter : b.letters()) {
    const std::size_t i = static_cast<std::size_t>(std::abs(letter) - 1);  // 0-based generator
    Mat g = identity();
    // sigma_i changes column i only: (t, -t, 1) in rows i-1, i, i+1;
    // the inverse has (1, -t^-1, t^-1).
    if (letter > 0) {
      g[i][i] = -t;
      if (i >= 1) g[i - 1][i] = t;
      if (i + 1 < m) g[i + 1][i] = one;
    } else {
      g[i][i] = -ti;
      if (i >= 1) g[i - 1][i] = one;
      if (i + 1 < m) g[i + 1][i] = ti;
    }
    acc = mul(acc, g);
  }
  return acc;
}

LaurentPoly cofactor_determinant(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1, 1);
  if (n == 1) return m[0][0];
  LaurentPoly det(1);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    const LaurentPoly term = m[0][j] * cofactor_determinant(sub);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

LaurentPoly burau_alexander(const BraidWord& b) {
  if (closure_components(b) != 1)
    throw std::invalid_argument("Burau Alexander polynomial needs a braid whose closure is a knot");
  auto m = reduced_burau(b);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= LaurentPoly::constant(1, 1);
  const LaurentPoly det = cofactor_determinant(m);
  int shift = 0;
  const IntPoly p = IntPoly::from_laurent(det, shift);
  const IntPoly divisor(std::vector<Integer>(static_cast<std::size_t>(b.strands()), Integer(1)));
  return normalize_units(divexact(p, divisor).to_laurent()).canonical;
}

// ---------------------------------------------------------------- HOMFLY

namespace {

const LaurentPoly& delta() {
  static const LaurentPoly d = LaurentPoly::from_terms(2, {{{1, -1}, -1}, {{-1, -1}, -1}});
  return d;
}

// Working diagram for the skein tree: crossing signs plus, per component,
// the cyclic sequence of passes. Labels and arc ids are irrelevant here.
struct Skein {
  std::vector<int> sign;
  std::vector<std::vector<Pass>> comps;
};

struct Loc {
  int comp = -1;
  int idx = -1;
};

// Per crossing: location of its over pass and its under pass.
std::vector<std::array<Loc, 2>> locate(const Skein& s) {
  std::vector<std::array<Loc, 2>> loc(s.sign.size());
  for (std::size_t c = 0; c < s.comps.size(); ++c)
    for (std::size_t k = 0; k < s.comps[c].size(); ++k) {
      const Pass& p = s.comps[c][k];
      loc[static_cast<std::size_t>(p.crossing)][p.role == StrandRole::Over ? 0 : 1] = {
          static_cast<int>(c), static_cast<int>(k)};
    }
  return loc;
}

void drop_crossings(Skein& s, const std::vector<bool>& dead) {
  std::vector<int> remap(s.sign.size(), -1);
  std::vector<int> signs;
  for (std::size_t i = 0; i < s.sign.size(); ++i)
    if (!dead[i]) {
      remap[i] = static_cast<int>(signs.size());
      signs.push_back(s.sign[i]);
    }
  s.sign = std::move(signs);
  for (auto& comp : s.comps) {
    std::vector<Pass> kept;
    for (const auto& p : comp)
      if (!dead[static_cast<std::size_t>(p.crossing)]) kept.push_back({remap[static_cast<std::size_t>(p.crossing)], p.role});
    comp = std::move(kept);
  }
}

// Reidemeister I: a crossing whose two passes are cyclically adjacent on a
// component bounds a crossing-free loop and can be removed.
void strip_kinks(Skein& s) {
  bool again = true;
  while (again) {
    again = false;
    std::vector<bool> dead(s.sign.size(), false);
    for (const auto& comp : s.comps) {
      const std::size_t n = comp.size();
      for (std::size_t k = 0; k < n; ++k) {
        const int x = comp[k].crossing;
        if (comp[(k + 1) % n].crossing == x && n >= 2 && !dead[static_cast<std::size_t>(x)]) {
          dead[static_cast<std::size_t>(x)] = true;
          again = true;
          break;  // one per component per round keeps adjacency reasoning local
        }
      }
    }
    if (again) drop_crossings(s, dead);
  }
}

std::vector<Skein> split_pieces(const Skein& s) {
  const std::size_t n = s.comps.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const auto loc = locate(s);
  for (const auto& l : loc)
    parent[find(static_cast<std::size_t>(l[0].comp))] = find(static_cast<std::size_t>(l[1].comp));

  std::vector<std::size_t> piece_of_root(n, n);
  std::vector<Skein> pieces;
  std::vector<std::size_t> piece_of_comp(n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t r = find(c);
    if (piece_of_root[r] == n) {
      piece_of_root[r] = pieces.size();
      pieces.emplace_back();
    }
    piece_of_comp[c] = piece_of_root[r];
  }
  if (pieces.size() == 1) return {s};
  // Renumber crossings inside each piece.
  std::vector<int> new_id(s.sign.size(), -1);
  for (std::size_t c = 0; c < n; ++c) {
    Skein& p = pieces[piece_of_comp[c]];
    std::vector<Pass> seq;
    for (const auto& pass : s.comps[c]) {
      int& id = new_id[static_cast<std::size_t>(pass.crossing)];
      if (id < 0) {
        id = static_cast<int>(p.sign.size());
        p.sign.push_back(s.sign[static_cast<std::size_t>(pass.crossing)]);
      }
      seq.push_back({id, pass.role});
    }
    p.comps.push_back(std::move(seq));
  }
  return pieces;
}

Skein switched(Skein s, int x) {
  s.sign[static_cast<std::size_t>(x)] = -s.sign[static_cast<std::size_t>(x)];
  for (auto& comp : s.comps)
    for (auto& p : comp)
      if (p.crossing == x) p.role = p.role == StrandRole::Over ? StrandRole::Under : StrandRole::Over;
  return s;
}

// Oriented smoothing: incoming over strand continues along the outgoing
// under strand and vice versa.
Skein smoothed(const Skein& s, int x) {
  const auto loc = locate(s)[static_cast<std::size_t>(x)];
  const auto& A = s.comps[static_cast<std::size_t>(loc[0].comp)];
  const auto& B = s.comps[static_cast<std::size_t>(loc[1].comp)];
  const int i = loc[0].idx, j = loc[1].idx;
  auto cyclic = [](const std::vector<Pass>& c, int from, int count) {
    std::vector<Pass> out;
    const int n = static_cast<int>(c.size());
    for (int k = 0; k < count; ++k) out.push_back(c[static_cast<std::size_t>(((from + k) % n + n) % n)]);
    return out;
  };
  Skein out;
  out.sign = s.sign;
  for (std::size_t c = 0; c < s.comps.size(); ++c)
    if (static_cast<int>(c) != loc[0].comp && static_cast<int>(c) != loc[1].comp) out.comps.push_back(s.comps[c]);
  if (loc[0].comp != loc[1].comp) {
    const int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
    std::vector<Pass> merged = cyclic(B, j + 1, nb - 1);
    auto rest = cyclic(A, i + 1, na - 1);
    merged.insert(merged.end(), rest.begin(), rest.end());
    out.comps.push_back(std::move(merged));
  } else {
    const int n = static_cast<int>(A.size());
    const int first = ((i - j - 1) % n + n) % n;   // passes strictly after j, before i
    const int second = ((j - i - 1) % n + n) % n;  // strictly after i, before j
    out.comps.push_back(cyclic(A, j + 1, first));
    out.comps.push_back(cyclic(A, i + 1, second));
  }
  std::vector<bool> dead(out.sign.size(), false);
  dead[static_cast<std::size_t>(x)] = true;
  drop_crossings(out, dead);
  return out;
}

// Lexicographically least traversal code over all starting passes. Two
// connected skein diagrams share a key iff they are the same signed Gauss
// diagram up to relabeling, component order and rotation.
std::vector<int> canonical_key(const Skein& s) {
  const auto loc = locate(s);
  std::vector<int> best;
  std::vector<int> code, relabel(s.sign.size());
  std::vector<char> visited(s.comps.size());
  std::vector<std::pair<int, int>> queue;
  for (std::size_t c0 = 0; c0 < s.comps.size(); ++c0)
    for (std::size_t p0 = 0; p0 < s.comps[c0].size(); ++p0) {
      code.clear();
      std::fill(relabel.begin(), relabel.end(), -1);
      std::fill(visited.begin(), visited.end(), 0);
      queue.assign(1, {static_cast<int>(c0), static_cast<int>(p0)});
      int next = 0;
      // 0: equal to best so far, -1: already smaller, +1: larger (abandon)
      int state = best.empty() ? -1 : 0;
      auto emit = [&](int v) {
        if (state == 0) {
          const int b = best[code.size()];
          if (v > b) state = 1;
          else if (v < b) state = -1;
        }
        code.push_back(v);
      };
      for (std::size_t q = 0; q < queue.size() && state <= 0; ++q) {
        const auto [c, p] = queue[q];
        if (visited[static_cast<std::size_t>(c)]) continue;
        visited[static_cast<std::size_t>(c)] = 1;
        const auto& comp = s.comps[static_cast<std::size_t>(c)];
        emit(-1 - static_cast<int>(comp.size()));
        for (std::size_t k = 0; k < comp.size() && state <= 0; ++k) {
          const Pass& pass = comp[(static_cast<std::size_t>(p) + k) % comp.size()];
          const auto x = static_cast<std::size_t>(pass.crossing);
          if (relabel[x] < 0) {
            relabel[x] = next++;
            const Loc other = loc[x][pass.role == StrandRole::Over ? 1 : 0];
            if (!visited[static_cast<std::size_t>(other.comp)]) queue.push_back({other.comp, other.idx});
          }
          emit(relabel[x] * 4 + (pass.role == StrandRole::Over ? 2 : 0) + (s.sign[x] > 0 ? 1 : 0));
        }
      }
      if (state < 0) best = code;
    }
  return best;
}

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 1099511628211ull;
    return h;
  }
};

// Component order and base points making the fewest crossings "bad" (first
// reached along the under strand). A diagram with no bad crossings is
// descending and represents the unlink.
struct Plan {
  std::vector<int> order;
  std::vector<int> base;
  int bad = 0;
  int first_bad = -1;
};

Plan make_plan(const Skein& s) {
  const std::size_t mu = s.comps.size();
  const auto loc = locate(s);
  Plan plan;
  plan.base.assign(mu, 0);
  int self_bad = 0;
  for (std::size_t c = 0; c < mu; ++c) {
    const auto& comp = s.comps[c];
    int best = -1, best_base = 0;
    for (std::size_t b = 0; b < comp.size(); ++b) {
      int bad = 0;
      for (std::size_t k = 0; k < comp.size(); ++k) {
        const Pass& p = comp[(b + k) % comp.size()];
        const auto& l = loc[static_cast<std::size_t>(p.crossing)];
        if (l[0].comp != l[1].comp) continue;
        // first visit of a self-crossing: the pass whose offset from b is smaller
        const int other_idx = l[p.role == StrandRole::Over ? 1 : 0].idx;
        const std::size_t other_off = (static_cast<std::size_t>(other_idx) + comp.size() - b) % comp.size();
        if (k < other_off && p.role == StrandRole::Under) ++bad;
      }
      if (best < 0 || bad < best) {
        best = bad;
        best_base = static_cast<int>(b);
      }
    }
    plan.base[c] = best_base;
    self_bad += std::max(best, 0);
  }

  std::vector<int> perm(mu);
  std::iota(perm.begin(), perm.end(), 0);
  int best_inter = -1;
  std::vector<int> rank(mu);
  do {
    for (std::size_t r = 0; r < mu; ++r) rank[static_cast<std::size_t>(perm[r])] = static_cast<int>(r);
    int bad = 0;
    for (const auto& l : loc)
      if (l[0].comp != l[1].comp && rank[static_cast<std::size_t>(l[0].comp)] > rank[static_cast<std::size_t>(l[1].comp)]) ++bad;
    if (best_inter < 0 || bad < best_inter) {
      best_inter = bad;
      plan.order = perm;
    }
  } while (mu <= 6 && std::next_permutation(perm.begin(), perm.end()));
  plan.bad = self_bad + std::max(best_inter, 0);
  if (plan.bad == 0) return plan;

  std::vector<char> seen(s.sign.size(), 0);
  for (int c : plan.order) {
    const auto& comp = s.comps[static_cast<std::size_t>(c)];
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const Pass& p = comp[(static_cast<std::size_t>(plan.base[static_cast<std::size_t>(c)]) + k) % comp.size()];
      auto& sn = seen[static_cast<std::size_t>(p.crossing)];
      if (sn) continue;
      sn = 1;
      if (p.role == StrandRole::Under) {
        plan.first_bad = p.crossing;
        return plan;
      }
    }
  }
  throw std::logic_error("skein plan: bad crossing count without a bad crossing");
}

class SkeinEvaluator {
 public:
  SkeinEvaluator(bool parallel, bool memoize) : parallel_(parallel), memoize_(memoize) {}

  LaurentPoly eval(Skein s, int depth) {
    strip_kinks(s);
    auto pieces = split_pieces(s);
    if (pieces.size() == 1) return connected(std::move(pieces.front()), depth);
    LaurentPoly result = pow(delta(), static_cast<unsigned>(pieces.size() - 1));
    for (auto& p : pieces) result *= connected(std::move(p), depth);
    return result;
  }

 private:
  static constexpr int kTaskDepth = 10;
  static constexpr std::size_t kShards = 64;

  struct Shard {
    std::mutex lock;
    std::unordered_map<std::vector<int>, LaurentPoly, KeyHash> table;
  };

  LaurentPoly connected(Skein s, int depth) {
    if (s.sign.empty()) return LaurentPoly::constant(2, 1);
    std::vector<int> key;
    Shard* shard = nullptr;
    if (memoize_) {
      key = canonical_key(s);
      shard = &shards_[KeyHash{}(key) % kShards];
      std::lock_guard<std::mutex> g(shard->lock);
      auto it = shard->table.find(key);
      if (it != shard->table.end()) return it->second;
    }
    const Plan plan = make_plan(s);
    LaurentPoly value(2);
    if (plan.bad == 0) {
      value = pow(delta(), static_cast<unsigned>(s.comps.size() - 1));
    } else {
      const int x = plan.first_bad;
      const int sgn = s.sign[static_cast<std::size_t>(x)];
      Skein sw = switched(s, x);
      Skein sm = smoothed(s, x);
      LaurentPoly a(2), b(2);
      if (parallel_ && depth < kTaskDepth) {
#pragma omp task shared(a, sw) if (depth < kTaskDepth)
        a = eval(std::move(sw), depth + 1);
        b = eval(std::move(sm), depth + 1);
#pragma omp taskwait
      } else {
        a = eval(std::move(sw), depth + 1);
        b = eval(std::move(sm), depth + 1);
      }
      // P(L+) = -x^-2 P(L-) - x^-1 y P(L0);  P(L-) = -x^2 P(L+) - x y P(L0)
      const int e = sgn > 0 ? -1 : 1;
      value = a.shifted({2 * e, 0}).scaled(-1) - b.shifted({e, 1});
    }
    if (memoize_) {
      std::lock_guard<std::mutex> g(shard->lock);
      shard->table.emplace(std::move(key), value);
    }
    return value;
  }

  bool parallel_;
  bool memoize_;
  std::array<Shard, kShards> shards_;
};

Skein to_skein(const LinkDiagram& d) {
  const PassDiagram pd = d.to_passes();
  return {pd.signs, pd.passes};
}

}  // namespace

LaurentPoly homfly(const LinkDiagram& d, const HomflyOptions& opts) {
  SkeinEvaluator ev(opts.parallel, opts.memoize);
  LaurentPoly p(2);
  if (opts.parallel) {
#pragma omp parallel
#pragma omp single
    p = ev.eval(to_skein(d), 0);
  } else {
    p = ev.eval(to_skein(d), 0);
  }
  return opts.mirror ? p.inverted(0) : p;
}

LaurentPoly homfly_serial(const LinkDiagram& d, bool mirror) {
  return homfly(d, {mirror, false, true});
}

LaurentPoly unlink_homfly(int components) {
  if (components < 1) throw std::invalid_argument("an unlink has at least one component");
  return pow(delta(), static_cast<unsigned>(components - 1));
}

int mfw_bound(const LaurentPoly& p) {
  const auto [lo, hi] = span(p, 0);
  if ((hi - lo) % 2 != 0) throw std::domain_error("odd x-span in a HOMFLY polynomial");
  return (hi - lo) / 2 + 1;
}

int mfw_bound(const LinkDiagram& d, bool mirror) { return mfw_bound(homfly(d, {mirror, true, true})); }

LaurentPoly alexander_from_homfly(const LaurentPoly& p) {
  if (p.num_vars() != 2) throw std::invalid_argument("expected a two-variable polynomial");
  const LaurentPoly z2 = parse_laurent("t^-1 - 2 + t", 1);
  LaurentPoly result(1);
  for (const auto& term : p.terms()) {
    const int a = term.exp[0], b = term.exp[1];
    if (b % 2 != 0 || a % 2 != 0 || b < 0)
      throw std::invalid_argument("Alexander specialization needs even exponents (a knot)");
    const bool negate = (((a + b) / 2) % 2 + 2) % 2 == 1;
    result += pow(z2, static_cast<unsigned>(b / 2)).scaled(negate ? -term.coeff : term.coeff);
  }
  return normalize_units(result).canonical;
}

}  // namespace knotfiber
