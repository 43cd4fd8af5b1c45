#include "schur/schur_space.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "schur/error.hpp"

namespace schur {

void add_term(Terms& terms, const Key& key, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
}

void add_scaled(Terms& acc, const Terms& x, const Rational& a) {
  if (is_zero(a)) return;
  for (const auto& [k, c] : x) add_term(acc, k, a * c);
}

std::vector<int> AmbientElement::column_lengths() const {
  return conjugate(lambda).parts();
}

std::vector<int> SkewAmbientElement::column_lengths() const {
  return shape.column_lengths();
}

namespace {

std::vector<int> nonzero(const std::vector<int>& lengths) {
  std::vector<int> out;
  for (int l : lengths)
    if (l > 0) out.push_back(l);
  return out;
}

int total(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

void check_same_space(const AmbientElement& a, const AmbientElement& b) {
  if (a.lambda != b.lambda || a.n != b.n || a.dual != b.dual)
    throw PreconditionError("ambient elements live in different spaces");
}

int parity(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

// Sorts every block in place; returns the sign, or 0 on a repeated index.
int sort_blocks(Key& key, const std::vector<int>& blocks) {
  int sign = 1;
  std::size_t start = 0;
  for (int len : blocks) {
    auto b = key.begin() + start, e = b + len;
    for (auto i = b; i != e; ++i)
      for (auto j = i + 1; j != e; ++j) {
        if (*i == *j) return 0;
        if (*i > *j) sign = -sign;
      }
    std::sort(b, e);
    start += len;
  }
  return sign;
}

struct Layout {
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols;
  std::vector<int> blocks;
  int size = 0;
};

Layout layout(const SkewShape& shape) {
  Layout out;
  Tableau t0 = column_filling(shape);
  out.size = shape.size();
  for (int i = 1; i <= shape.outer().length(); ++i) {
    std::vector<int> r;
    for (int j = shape.inner().row(i) + 1; j <= shape.outer().row(i); ++j)
      r.push_back(t0.at(i, j) - 1);
    if (!r.empty()) out.rows.push_back(r);
  }
  const auto lengths = shape.column_lengths();
  for (int c = 1; c <= static_cast<int>(lengths.size()); ++c) {
    std::vector<int> col;
    for (int i = 1; i <= shape.outer().length(); ++i)
      if (shape.contains({i, c})) col.push_back(t0.at(i, c) - 1);
    if (!col.empty()) {
      out.cols.push_back(col);
      out.blocks.push_back(static_cast<int>(col.size()));
    }
  }
  return out;
}

WordTensor apply_groups(const WordTensor& w,
                        const std::vector<std::vector<int>>& groups,
                        bool signed_sum) {
  WordTensor cur = w;
  for (const auto& pos : groups) {
    if (pos.size() < 2) continue;
    Terms next;
    std::vector<int> perm(pos.size());
    for (const auto& [word, c] : cur.terms) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        Key out = word;
        for (std::size_t i = 0; i < pos.size(); ++i) out[pos[i]] = word[pos[perm[i]]];
        add_term(next, out, signed_sum ? Rational(parity(perm)) * c : c);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    cur.terms = std::move(next);
  }
  return cur;
}

void check_word_size(const WordTensor& w, int size) {
  if (w.d != size) throw PreconditionError("word tensor degree does not match shape");
  for (const auto& [k, c] : w.terms)
    if (static_cast<int>(k.size()) != size)
      throw PreconditionError("word length does not match degree");
}

Rational factorial(int k) {
  Integer r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return Rational(r);
}

Terms blocks_to_ambient(const WordTensor& w, const std::vector<int>& blocks) {
  Terms out;
  std::map<Key, std::size_t> hits;
  std::size_t orbit = 1;
  for (int len : blocks)
    for (int i = 2; i <= len; ++i) orbit *= i;
  for (const auto& [word, c] : w.terms) {
    Key sorted = word;
    int sign = sort_blocks(sorted, blocks);
    if (sign == 0)
      throw PreconditionError("column block with a repeated index has a nonzero coefficient");
    auto it = w.terms.find(sorted);
    Rational rep = it == w.terms.end() ? Rational(0) : it->second;
    if (rep * sign != c)
      throw PreconditionError("word tensor is not antisymmetric in its column blocks");
    ++hits[sorted];
    if (sorted == word) out.emplace(word, c);
  }
  for (const auto& [k, h] : hits)
    if (h != orbit)
      throw PreconditionError("word tensor is not antisymmetric in its column blocks");
  return out;
}

WordTensor ambient_to_blocks(const Terms& terms, const std::vector<int>& blocks,
                             int n) {
  WordTensor w{total(blocks), n, {}};
  for (const auto& [key, c] : terms) {
    std::vector<std::pair<Key, int>> partial{{Key(), 1}};
    std::size_t start = 0;
    for (int len : blocks) {
      std::vector<std::pair<Key, int>> next;
      std::vector<int> perm(len);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        int s = parity(perm);
        for (const auto& [k, sg] : partial) {
          Key e = k;
          for (int i = 0; i < len; ++i) e.push_back(key[start + perm[i]]);
          next.emplace_back(std::move(e), sg * s);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      partial = std::move(next);
      start += len;
    }
    for (const auto& [k, s] : partial) add_term(w.terms, k, Rational(s) * c);
  }
  return w;
}

}  // namespace

AmbientElement operator+(const AmbientElement& a, const AmbientElement& b) {
  check_same_space(a, b);
  AmbientElement out = a;
  add_scaled(out.terms, b.terms, 1);
  return out;
}

AmbientElement operator-(const AmbientElement& a, const AmbientElement& b) {
  check_same_space(a, b);
  AmbientElement out = a;
  add_scaled(out.terms, b.terms, -1);
  return out;
}

AmbientElement operator*(const Rational& s, const AmbientElement& a) {
  AmbientElement out = a;
  out.terms.clear();
  add_scaled(out.terms, a.terms, s);
  return out;
}

SkewAmbientElement operator+(const SkewAmbientElement& a,
                             const SkewAmbientElement& b) {
  if (a.shape != b.shape || a.n != b.n)
    throw PreconditionError("skew elements live in different spaces");
  SkewAmbientElement out = a;
  add_scaled(out.terms, b.terms, 1);
  return out;
}

bool operator==(const AmbientElement& a, const AmbientElement& b) {
  return a.lambda == b.lambda && a.n == b.n && a.dual == b.dual &&
         a.terms == b.terms;
}

bool operator==(const SkewAmbientElement& a, const SkewAmbientElement& b) {
  return a.shape == b.shape && a.n == b.n && a.terms == b.terms;
}

AmbientElement monomial(const Partition& lambda, int n,
                        const std::vector<std::vector<int>>& columns,
                        const Rational& c, bool dual) {
  AmbientElement out{lambda, n, dual, {}};
  auto lengths = out.column_lengths();
  if (columns.size() != lengths.size())
    throw PreconditionError("monomial has the wrong number of columns");
  Key key;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (static_cast<int>(columns[i].size()) != lengths[i])
      throw PreconditionError("monomial column has the wrong length");
    for (int x : columns[i]) {
      if (x < 1 || x > n) throw PreconditionError("index out of range");
      key.push_back(static_cast<Index>(x));
    }
  }
  int sign = sort_blocks(key, lengths);
  if (sign != 0) add_term(out.terms, key, Rational(sign) * c);
  return out;
}

std::vector<std::vector<int>> split_key(const Key& key,
                                        const std::vector<int>& lengths) {
  std::vector<std::vector<int>> out;
  std::size_t start = 0;
  for (int len : lengths) {
    out.emplace_back(key.begin() + start, key.begin() + start + len);
    start += len;
  }
  return out;
}

AmbientIndexer::AmbientIndexer(std::vector<int> column_lengths, int n)
    : lengths_(nonzero(column_lengths)), n_(n) {
  radix_.assign(lengths_.size(), 1);
  dimension_ = 1;
  for (std::size_t c = lengths_.size(); c-- > 0;) {
    radix_[c] = dimension_;
    dimension_ *= binomial(n_, lengths_[c]);
  }
}

std::size_t AmbientIndexer::index(const Key& key) const {
  std::size_t idx = 0, start = 0;
  for (std::size_t c = 0; c < lengths_.size(); ++c) {
    const int len = lengths_[c];
    std::size_t r = 0;
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      int a = key.at(start + i);
      for (int v = prev + 1; v < a; ++v) r += binomial(n_ - v, len - i - 1);
      prev = a;
    }
    idx += r * radix_[c];
    start += len;
  }
  return idx;
}

Key AmbientIndexer::key(std::size_t index) const {
  Key out;
  for (std::size_t c = 0; c < lengths_.size(); ++c) {
    std::size_t r = index / radix_[c];
    index %= radix_[c];
    const int len = lengths_[c];
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      int v = prev + 1;
      while (true) {
        std::size_t cnt = binomial(n_ - v, len - i - 1);
        if (r < cnt) break;
        r -= cnt;
        ++v;
      }
      out.push_back(static_cast<Index>(v));
      prev = v;
    }
  }
  return out;
}

AmbientIndexer indexer(const Partition& lambda, int n) {
  return AmbientIndexer(conjugate(lambda).parts(), n);
}
AmbientIndexer indexer(const SkewShape& shape, int n) {
  return AmbientIndexer(shape.column_lengths(), n);
}
AmbientIndexer indexer(const AmbientElement& a) { return indexer(a.lambda, a.n); }
AmbientIndexer indexer(const SkewAmbientElement& a) {
  return indexer(a.shape, a.n);
}

namespace {

SparseVector terms_to_vector(const Terms& terms, const AmbientIndexer& ix) {
  SparseVector v;
  v.reserve(terms.size());
  for (const auto& [k, c] : terms) v.emplace_back(ix.index(k), c);
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Terms vector_to_terms(const SparseVector& v, const AmbientIndexer& ix) {
  Terms out;
  for (const auto& [i, c] : v) out.emplace(ix.key(i), c);
  return out;
}

}  // namespace

SparseVector to_vector(const AmbientElement& a) {
  return terms_to_vector(a.terms, indexer(a));
}
SparseVector to_vector(const SkewAmbientElement& a) {
  return terms_to_vector(a.terms, indexer(a));
}

AmbientElement ambient_from_vector(const Partition& lambda, int n, bool dual,
                                   const SparseVector& v) {
  return AmbientElement{lambda, n, dual, vector_to_terms(v, indexer(lambda, n))};
}

SkewAmbientElement skew_from_vector(const SkewShape& shape, int n,
                                    const SparseVector& v) {
  return SkewAmbientElement{shape, n, vector_to_terms(v, indexer(shape, n))};
}

WordTensor row_symmetrize(const SkewShape& shape, const WordTensor& w) {
  check_word_size(w, shape.size());
  return apply_groups(w, layout(shape).rows, false);
}

WordTensor column_antisymmetrize(const SkewShape& shape, const WordTensor& w) {
  check_word_size(w, shape.size());
  return apply_groups(w, layout(shape).cols, true);
}

WordTensor skew_symmetrizer(const SkewShape& shape, const WordTensor& w) {
  return column_antisymmetrize(shape, row_symmetrize(shape, w));
}

WordTensor a_lambda(const Partition& lambda, const WordTensor& w) {
  return row_symmetrize(SkewShape(lambda), w);
}
WordTensor b_lambda(const Partition& lambda, const WordTensor& w) {
  return column_antisymmetrize(SkewShape(lambda), w);
}
WordTensor young_symmetrizer(const Partition& lambda, const WordTensor& w) {
  return skew_symmetrizer(SkewShape(lambda), w);
}

WordTensor single_word(int n, const std::vector<int>& letters, const Rational& c) {
  WordTensor w{static_cast<int>(letters.size()), n, {}};
  Key k;
  for (int x : letters) {
    if (x < 1 || x > n) throw PreconditionError("letter out of range");
    k.push_back(static_cast<Index>(x));
  }
  add_term(w.terms, k, c);
  return w;
}

AmbientElement word_to_ambient(const Partition& lambda, const WordTensor& w,
                               bool dual) {
  check_word_size(w, lambda.size());
  auto blocks = conjugate(lambda).parts();
  return AmbientElement{lambda, w.n, dual, blocks_to_ambient(w, blocks)};
}

WordTensor ambient_to_word(const AmbientElement& a) {
  return ambient_to_blocks(a.terms, a.column_lengths(), a.n);
}

SkewAmbientElement skew_word_to_ambient(const SkewShape& shape,
                                        const WordTensor& w) {
  check_word_size(w, shape.size());
  return SkewAmbientElement{shape, w.n,
                            blocks_to_ambient(w, nonzero(shape.column_lengths()))};
}

WordTensor skew_ambient_to_word(const SkewAmbientElement& a) {
  return ambient_to_blocks(a.terms, nonzero(a.column_lengths()), a.n);
}

Terms symmetrize_word(const SkewShape& shape, const std::vector<int>& letters) {
  const Layout lay = layout(shape);
  if (static_cast<int>(letters.size()) != lay.size)
    throw PreconditionError("word length does not match shape");
  Terms out;
  Key word(letters.begin(), letters.end());
  Rational mult = 1;
  std::vector<std::vector<int>> row_letters;
  for (const auto& r : lay.rows) {
    std::vector<int> ls;
    for (int p : r) ls.push_back(letters[p]);
    std::sort(ls.begin(), ls.end());
    for (std::size_t i = 0; i < ls.size();) {
      std::size_t j = i;
      while (j < ls.size() && ls[j] == ls[i]) ++j;
      mult *= factorial(static_cast<int>(j - i));
      i = j;
    }
    row_letters.push_back(std::move(ls));
  }
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == lay.rows.size()) {
      Key k = word;
      int sign = sort_blocks(k, lay.blocks);
      if (sign != 0) add_term(out, k, Rational(sign) * mult);
      return;
    }
    auto ls = row_letters[r];
    do {
      for (std::size_t i = 0; i < ls.size(); ++i)
        word[lay.rows[r][i]] = static_cast<Index>(ls[i]);
      rec(r + 1);
    } while (std::next_permutation(ls.begin(), ls.end()));
  };
  rec(0);
  return out;
}

AmbientElement basis_element(const Partition& lambda, const Tableau& s, int n,
                             bool dual) {
  if (s.shape() != SkewShape(lambda) || !s.is_semistandard())
    throw PreconditionError("basis_element needs a semistandard tableau of shape " +
                            lambda.str());
  for (int x : s.column_word())
    if (x > n) throw PreconditionError("tableau entry exceeds n");
  return AmbientElement{lambda, n, dual,
                        symmetrize_word(SkewShape(lambda), s.column_word())};
}

std::vector<AmbientElement> schur_basis(const Partition& lambda, int n, bool dual) {
  std::vector<AmbientElement> out;
  for (const auto& s : enumerate_sstd(SkewShape(lambda), n))
    out.push_back(basis_element(lambda, s, n, dual));
  return out;
}

namespace {

std::mutex module_mutex;
std::map<std::pair<SkewShape, int>, std::unique_ptr<Subspace>> module_cache;

const Subspace& cached_module(const SkewShape& shape, int n,
                              const std::function<Subspace()>& build) {
  {
    std::lock_guard<std::mutex> lock(module_mutex);
    auto it = module_cache.find({shape, n});
    if (it != module_cache.end()) return *it->second;
  }
  auto built = std::make_unique<Subspace>(build());
  std::lock_guard<std::mutex> lock(module_mutex);
  auto [it, inserted] = module_cache.try_emplace({shape, n}, std::move(built));
  return *it->second;
}

}  // namespace

const Subspace& schur_module(const Partition& lambda, int n) {
  return cached_module(SkewShape(lambda), n, [&] {
    Subspace s(indexer(lambda, n).dimension());
    for (const auto& b : schur_basis(lambda, n)) s.insert(to_vector(b));
    return s;
  });
}

const Subspace& skew_module(const SkewShape& shape, int n) {
  if (shape.is_straight()) return schur_module(shape.outer(), n);
  return cached_module(shape, n, [&] {
    const Layout lay = layout(shape);
    const AmbientIndexer ix = indexer(shape, n);
    Subspace s(ix.dimension());
    std::vector<int> letters(lay.size, 0);
    // Row-sorted fillings suffice: the row symmetrization forgets row order.
    std::function<void(std::size_t, std::size_t, int)> rec =
        [&](std::size_t r, std::size_t i, int lo) {
          if (r == lay.rows.size()) {
            s.insert(terms_to_vector(symmetrize_word(shape, letters), ix));
            return;
          }
          if (i == lay.rows[r].size()) {
            rec(r + 1, 0, 1);
            return;
          }
          for (int v = lo; v <= n; ++v) {
            letters[lay.rows[r][i]] = v;
            rec(r, i + 1, v);
          }
        };
    rec(0, 0, 1);
    return s;
  });
}

bool membership(const AmbientElement& a) {
  return schur_module(a.lambda, a.n).contains(to_vector(a));
}

bool skew_membership(const SkewAmbientElement& a) {
  return skew_module(a.shape, a.n).contains(to_vector(a));
}

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix inverse(const Matrix& g) {
  const std::size_t n = g.size();
  Matrix a = g, inv = identity_matrix(static_cast<int>(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) throw PreconditionError("matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a[i][c])) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Matrix transpose(const Matrix& g) {
  Matrix t(g.empty() ? 0 : g[0].size(), std::vector<Rational>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j) t[j][i] = g[i][j];
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c(a.size(), std::vector<Rational>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Terms wedge(const std::vector<std::vector<Rational>>& vectors) {
  Terms cur{{Key(), Rational(1)}};
  for (const auto& u : vectors) {
    Terms next;
    for (const auto& [k, c] : cur)
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (is_zero(u[j])) continue;
        const Index x = static_cast<Index>(j + 1);
        if (std::find(k.begin(), k.end(), x) != k.end()) continue;
        auto pos = std::upper_bound(k.begin(), k.end(), x);
        int greater = static_cast<int>(k.end() - pos);
        Key nk = k;
        nk.insert(nk.begin() + (pos - k.begin()), x);
        add_term(next, nk, (greater % 2 ? -c : c) * u[j]);
      }
    cur = std::move(next);
  }
  return cur;
}

Terms act(const Matrix& g, const Terms& terms, const std::vector<int>& lengths) {
  const auto blocks = nonzero(lengths);
  const std::size_t n = g.size();
  std::map<Key, Terms> memo;
  auto image = [&](const Key& block) -> const Terms& {
    auto it = memo.find(block);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<Rational>> vs;
    for (Index i : block) {
      std::vector<Rational> col(n);
      for (std::size_t r = 0; r < n; ++r) col[r] = g[r][i - 1];
      vs.push_back(std::move(col));
    }
    return memo.emplace(block, wedge(vs)).first->second;
  };
  Terms out;
  for (const auto& [key, c] : terms) {
    Terms partial{{Key(), c}};
    std::size_t start = 0;
    for (int len : blocks) {
      const Terms& img = image(Key(key.begin() + start, key.begin() + start + len));
      Terms next;
      for (const auto& [pk, pc] : partial)
        for (const auto& [ik, ic] : img) {
          Key nk = pk;
          nk.insert(nk.end(), ik.begin(), ik.end());
          add_term(next, nk, pc * ic);
        }
      partial = std::move(next);
      start += len;
    }
    add_scaled(out, partial, 1);
  }
  return out;
}

AmbientElement act(const Matrix& g, const AmbientElement& a) {
  return AmbientElement{a.lambda, a.n, a.dual, act(g, a.terms, a.column_lengths())};
}

SkewAmbientElement act(const Matrix& g, const SkewAmbientElement& a) {
  return SkewAmbientElement{a.shape, a.n, act(g, a.terms, a.column_lengths())};
}

}  // namespace schur
