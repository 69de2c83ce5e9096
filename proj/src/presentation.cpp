#include "knotfiber/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "knotfiber/int_poly.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knotfiber {

using Matrix = std::vector<std::vector<LaurentPoly>>;

int WirtingerData::generator_weight(std::size_t g) const {
  return weights.at(component_labels.at(generator_component.at(g)));
}

namespace {

struct UnionFind {
  std::unordered_map<int, int> parent;
  int find(int a) {
    auto it = parent.find(a);
    if (it == parent.end()) return parent[a] = a;
    if (it->second == a) return a;
    return it->second = find(it->second);
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

WirtingerData wirtinger(const LinkDiagram& d) {
  const PassDiagram passes = d.to_passes();
  for (std::size_t c = 0; c < passes.passes.size(); ++c)
    if (passes.passes[c].empty())
      throw DiagramError("component '" + passes.labels[c] +
                         "' has no crossings; Wirtinger presentation needs at least one");

  UnionFind uf;
  for (const auto& x : d.crossings()) uf.unite(x.over_in, x.over_out);

  WirtingerData w;
  std::unordered_map<int, int> gen_of_root;
  std::unordered_map<int, int> gen_of_arc;
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    w.component_labels.push_back(d.components()[c].label);
    for (int a : d.components()[c].arcs) {
      const int root = uf.find(a);
      auto [it, fresh] = gen_of_root.emplace(root, static_cast<int>(w.generator_component.size()));
      if (fresh) w.generator_component.push_back(c);
      gen_of_arc[a] = it->second;
    }
  }
  for (const auto& x : d.crossings()) {
    const int u = gen_of_arc.at(x.over_in) + 1;
    const int a = gen_of_arc.at(x.under_in) + 1;
    const int b = gen_of_arc.at(x.under_out) + 1;
    if (x.sign > 0)
      w.relators.push_back({-b, u, a, -u});
    else
      w.relators.push_back({-b, -u, a, u});
  }
  return w;
}

WirtingerData assign_weights(WirtingerData w, const std::map<std::string, int>& weights) {
  std::map<std::string, int> chosen;
  for (const auto& label : w.component_labels) {
    auto it = weights.find(label);
    if (it == weights.end()) throw std::invalid_argument("no weight for component '" + label + "'");
    chosen[label] = it->second;
  }
  for (const auto& [label, _] : weights)
    if (!chosen.count(label)) throw std::invalid_argument("weight for unknown component '" + label + "'");
  w.weights = std::move(chosen);
  return w;
}

WirtingerData all_ones(WirtingerData w) {
  std::map<std::string, int> ones;
  for (const auto& l : w.component_labels) ones[l] = 1;
  return assign_weights(std::move(w), ones);
}

int relator_weight_sum(const WirtingerData& w, std::size_t relator) {
  int sum = 0;
  for (int l : w.relators.at(relator)) {
    const int wt = w.generator_weight(static_cast<std::size_t>(std::abs(l) - 1));
    sum += l > 0 ? wt : -wt;
  }
  return sum;
}

Matrix fox_matrix(const WirtingerData& w) {
  if (!w.weighted()) throw std::invalid_argument("presentation has no weights assigned");
  Matrix m(w.relators.size(), std::vector<LaurentPoly>(w.num_generators(), LaurentPoly(1)));
  for (std::size_t r = 0; r < w.relators.size(); ++r) {
    int prefix = 0;
    for (int l : w.relators[r]) {
      const std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
      const int wt = w.generator_weight(g);
      if (l > 0) {
        m[r][g] += LaurentPoly::monomial(1, {prefix, 0}, 1);
        prefix += wt;
      } else {
        prefix -= wt;
        m[r][g] += LaurentPoly::monomial(1, {prefix, 0}, -1);
      }
    }
  }
  return m;
}

LaurentPoly bareiss_determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1, 1);
  // Shift each row into Z[t]; the determinant picks up t^(sum of shifts).
  int total_shift = 0;
  std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    int low = 0;
    bool any = false;
    for (const auto& e : m[i])
      if (!e.is_zero()) {
        low = any ? std::min(low, span(e, 0).first) : span(e, 0).first;
        any = true;
      }
    if (!any) return LaurentPoly(1);  // zero row
    total_shift += low;
    for (std::size_t j = 0; j < n; ++j) {
      int s = 0;
      const IntPoly p = IntPoly::from_laurent(m[i][j], s);
      a[i][j] = p.shifted(p.is_zero() ? 0 : s - low);
    }
  }
  int sign = 1;
  IntPoly prev = IntPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return LaurentPoly(1);  // singular
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = IntPoly();
    }
    prev = a[k][k];
  }
  return a[n - 1][n - 1].to_laurent(total_shift).scaled(sign);
}

namespace {

// Removes pivots of the form ±t^k: clears the pivot column with row
// operations, then drops the pivot row and column. The ideal of maximal
// minors is unchanged.
void eliminate_unit_pivots(Matrix& m) {
  bool progress = true;
  while (progress && !m.empty() && !m[0].empty()) {
    progress = false;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t j = 0; j < cols && !progress; ++j) {
      for (std::size_t i = 0; i < rows && !progress; ++i) {
        if (!m[i][j].is_unit()) continue;
        const auto& term = m[i][j].terms().front();
        // inverse of the unit: sign * t^-k
        const LaurentPoly inv = LaurentPoly::monomial(1, {-term.exp[0], 0}, term.coeff);
        for (std::size_t r = 0; r < rows; ++r) {
          if (r == i || m[r][j].is_zero()) continue;
          const LaurentPoly f = m[r][j] * inv;
          for (std::size_t c = 0; c < cols; ++c)
            if (!m[i][c].is_zero()) m[r][c] -= f * m[i][c];
        }
        m.erase(m.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(j));
        progress = true;
      }
    }
  }
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

IntPoly stripped(const LaurentPoly& p) {
  int s = 0;
  return IntPoly::from_laurent(p, s);
}

int pick_column(const WirtingerData& w, int requested) {
  if (requested >= 0) {
    if (static_cast<std::size_t>(requested) >= w.num_generators())
      throw std::invalid_argument("deleted column out of range");
    return requested;
  }
  for (std::size_t g = 0; g < w.num_generators(); ++g)
    if (w.generator_weight(g) != 0) return static_cast<int>(g);
  throw std::invalid_argument("every weight is zero");
}

LaurentPoly alexander_impl(const WirtingerData& w, const AlexanderOptions& opts) {
  if (!w.weighted()) throw std::invalid_argument("presentation has no weights assigned");
  if (std::all_of(w.weights.begin(), w.weights.end(), [](const auto& kv) { return kv.second == 0; }))
    throw std::invalid_argument("every weight is zero");
  if (w.relators.empty()) throw std::invalid_argument("empty presentation");
  const int column = pick_column(w, opts.deleted_column);

  Matrix m = fox_matrix(w);
  for (auto& row : m) row.erase(row.begin() + column);
  if (opts.reduce_unit_pivots) eliminate_unit_pivots(m);

  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  if (rows < cols) return LaurentPoly(1);  // zero
  if (cols == 0) return LaurentPoly::constant(1, 1);

  const auto choices = subsets(rows, cols);
  std::vector<IntPoly> minors(choices.size());
  auto minor = [&](std::size_t c) {
    Matrix sub;
    sub.reserve(cols);
    for (std::size_t r : choices[c]) sub.push_back(m[r]);
    return stripped(bareiss_determinant(std::move(sub)));
  };
  if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t c = 0; c < choices.size(); ++c) minors[c] = minor(c);
  } else {
    for (std::size_t c = 0; c < choices.size(); ++c) minors[c] = minor(c);
  }
  // Fixed fold order keeps the result independent of the schedule.
  IntPoly g;
  for (const auto& p : minors) g = gcd(g, p);
  return normalize_units(g.to_laurent()).canonical;
}

}  // namespace

LaurentPoly alexander_poly(const WirtingerData& w, const AlexanderOptions& opts) {
  return alexander_impl(w, opts);
}

LaurentPoly alexander_poly_serial(const WirtingerData& w, int deleted_column) {
  return alexander_impl(w, {deleted_column, false, false});
}

LaurentPoly alexander_of(const LinkDiagram& d) { return alexander_poly(all_ones(wirtinger(d))); }

bool is_monic(const LaurentPoly& canonical) {
  if (canonical.is_zero()) return false;
  const auto& t = canonical.terms();
  return abs(t.front().coeff) == 1 && abs(t.back().coeff) == 1;
}

std::string format_presentation(const WirtingerData& w) {
  std::ostringstream out;
  out << "wirtinger v1\n";
  for (std::size_t g = 0; g < w.num_generators(); ++g)
    out << "generator g" << g + 1 << ' ' << w.component_labels[w.generator_component[g]] << '\n';
  for (std::size_t r = 0; r < w.relators.size(); ++r) {
    out << "relator r" << r + 1;
    for (int l : w.relators[r]) out << " g" << std::abs(l) << (l < 0 ? "^-1" : "");
    out << '\n';
  }
  for (const auto& [label, wt] : w.weights) out << "weight " << label << ' ' << wt << '\n';
  return out.str();
}

}  // namespace knotfiber
