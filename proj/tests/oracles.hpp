#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "schur/ideals.hpp"
#include "schur/points.hpp"
#include "schur/schur_space.hpp"

namespace oracle {

using namespace schur;
using Dense = std::vector<std::vector<Rational>>;

// Plain Gauss-Jordan over Q.
inline std::size_t dense_rank(Dense m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline Dense to_dense(const RationalMatrix& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) d[i][j] = v;
  return d;
}

inline Rational det(const Dense& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    Rational term = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline bool proportional(const SparseVector& a, const SparseVector& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  if (a.size() != b.size()) return false;
  Rational r = b.front().second / a.front().second;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || a[i].second * r != b[i].second) return false;
  return true;
}

inline bool proportional(const AmbientElement& a, const AmbientElement& b) {
  return proportional(to_vector(a), to_vector(b));
}

// Brute force count of semistandard fillings, cell by cell in row-major order.
inline std::uint64_t count_sstd(const SkewShape& s, int n) {
  auto cells = s.cells();
  std::map<Cell, int> fill;
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      ++count;
      return;
    }
    Cell c = cells[i];
    for (int v = 1; v <= n; ++v) {
      auto left = fill.find({c.row, c.col - 1});
      auto up = fill.find({c.row - 1, c.col});
      if (left != fill.end() && left->second > v) continue;
      if (up != fill.end() && up->second >= v) continue;
      fill[c] = v;
      self(self, i + 1);
      fill.erase(c);
    }
  };
  rec(rec, 0);
  return count;
}

// Hook length product, |lambda|! / f^lambda.
inline Integer hook_product(const Partition& l) {
  Partition c = conjugate(l);
  Integer p = 1;
  for (int i = 1; i <= l.length(); ++i)
    for (int j = 1; j <= l.row(i); ++j) p *= (l.row(i) - j) + (c.row(j) - i) + 1;
  return p;
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Hook content formula.
inline Integer hook_content_dim(const Partition& l, int n) {
  Rational num = 1;
  for (int i = 1; i <= l.length(); ++i)
    for (int j = 1; j <= l.row(i); ++j) num *= n + j - i;
  Rational d = num / Rational(hook_product(l));
  return d.get_num();
}

inline Matrix random_invertible(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    Matrix g(n, std::vector<Rational>(n));
    for (auto& r : g)
      for (auto& x : r) x = d(rng);
    if (det(g) != 0) return g;
  }
}

inline AmbientElement random_element(const Partition& l, int n, bool dual,
                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  AmbientElement out{l, n, dual, {}};
  for (const auto& b : schur_basis(l, n, dual)) out = out + Rational(d(rng)) * b;
  return out;
}

inline std::vector<Rational> random_vector(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Rational> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// T0 positions: columns left to right, each top to bottom.
inline std::map<Cell, int> positions(const SkewShape& s) {
  std::map<Cell, int> m;
  int p = 0;
  for (int j = 1; j <= s.outer().row(1); ++j)
    for (int i = 1; i <= s.outer().length(); ++i)
      if (s.contains({i, j})) m[{i, j}] = p++;
  return m;
}

// Multiplication by brute force: place a_lambda(g) and a_mu(h) in the cells of
// nu through sigma_T, then apply the Young symmetrizer of nu.
inline AmbientElement multiplication(const Partition& l, const Partition& mu,
                                     const Partition& nu, const Tableau& t,
                                     const AmbientElement& g, const AmbientElement& h) {
  auto G = a_lambda(l, ambient_to_word(g));
  auto H = a_lambda(mu, ambient_to_word(h));
  auto pl = positions(SkewShape(l)), pm = positions(SkewShape(mu)),
       pn = positions(SkewShape(nu));
  auto sig = sigma_map(t);
  WordTensor w{nu.size(), g.n, {}};
  for (const auto& [wg, cg] : G.terms)
    for (const auto& [wh, ch] : H.terms) {
      Key k(nu.size());
      for (const auto& [c, p] : pl) k[pn[c]] = wg[p];
      for (const auto& [c, d] : sig) k[pn[c]] = wh[pm[d]];
      add_term(w.terms, k, cg * ch);
    }
  return word_to_ambient(nu, young_symmetrizer(nu, w), g.dual);
}

}  // namespace oracle
