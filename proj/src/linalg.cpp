#include "schur/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "schur/error.hpp"

namespace schur {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (is_zero(a) || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto i = y.begin();
  auto j = x.begin();
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == y.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Rational s = i->second + a * j->second;
      if (!is_zero(s)) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseVector scaled(const SparseVector& x, const Rational& a) {
  if (is_zero(a)) return {};
  SparseVector out = x;
  for (auto& [i, v] : out) v *= a;
  return out;
}

Rational entry(const SparseVector& x, std::size_t index) {
  auto it = std::lower_bound(
      x.begin(), x.end(), index,
      [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != x.end() && it->first == index) return it->second;
  return 0;
}

SparseVector from_dense(const std::vector<Rational>& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.emplace_back(i, v[i]);
  return out;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t dim) {
  std::vector<Rational> out(dim);
  for (const auto& [i, x] : v) {
    if (i >= dim) throw std::out_of_range("sparse index beyond dimension");
    out[i] = x;
  }
  return out;
}

SparseVector primitive(const SparseVector& x) {
  if (x.empty()) return x;
  Integer l = 1, g = 0;
  for (const auto& [i, v] : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  for (const auto& [i, v] : x) {
    Integer n = v.get_num() * (l / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational s(l, g);
  if (sgn(x.front().second) < 0) s = -s;
  return scaled(x, s);
}

Labels make_labels(std::vector<std::string> labels) {
  return std::make_shared<const std::vector<std::string>>(std::move(labels));
}

Labels index_labels(std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::to_string(i));
  return make_labels(std::move(out));
}

Rational LabeledVector::at(const std::string& label) const {
  if (!basis_labels) throw std::out_of_range("vector has no labels");
  const auto& ls = *basis_labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) throw std::out_of_range("unknown label " + label);
  return entry(entries, static_cast<std::size_t>(it - ls.begin()));
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {}

RationalMatrix::RationalMatrix(Labels row_labels, Labels col_labels)
    : rows_(row_labels->size()), cols_(col_labels->size()),
      row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {}

RationalMatrix RationalMatrix::from_columns(
    std::size_t rows, const std::vector<SparseVector>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [i, v] : columns[j]) {
      if (i >= rows) throw std::out_of_range("column entry beyond row count");
      m.rows_[i].emplace_back(j, v);
    }
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::size_t cols,
                                         const std::vector<SparseVector>& rows) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

void RationalMatrix::set_row(std::size_t i, SparseVector r) {
  if (!r.empty() && r.back().first >= cols_)
    throw std::out_of_range("row entry beyond column count");
  rows_.at(i) = std::move(r);
}

Rational RationalMatrix::get(std::size_t i, std::size_t j) const {
  return entry(rows_.at(i), j);
}

void RationalMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
  if (j >= cols_) throw std::out_of_range("column index");
  auto& r = rows_.at(i);
  auto it = std::lower_bound(
      r.begin(), r.end(), j,
      [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != r.end() && it->first == j) {
    if (is_zero(v))
      r.erase(it);
    else
      it->second = v;
  } else if (!is_zero(v)) {
    r.insert(it, {j, v});
  }
}

std::vector<SparseVector> RationalMatrix::columns() const {
  std::vector<SparseVector> out(cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, v] : rows_[i]) out[j].emplace_back(i, v);
  return out;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void RationalMatrix::set_labels(Labels rows, Labels cols) {
  if (rows->size() != rows_.size() || cols->size() != cols_)
    throw std::invalid_argument("label count does not match matrix size");
  row_labels_ = std::move(rows);
  col_labels_ = std::move(cols);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t = from_rows(rows_.size(), columns());
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

SparseVector RationalMatrix::apply(const SparseVector& x) const {
  SparseVector out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational s = 0;
    auto a = rows_[i].begin();
    auto b = x.begin();
    while (a != rows_[i].end() && b != x.end()) {
      if (a->first < b->first)
        ++a;
      else if (b->first < a->first)
        ++b;
      else {
        s += a->second * b->second;
        ++a;
        ++b;
      }
    }
    if (!is_zero(s)) out.emplace_back(i, s);
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> a;
  a.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto& r = m.row(i);
    if (r.empty()) continue;
    Integer l = 1;
    for (const auto& [j, v] : r)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> row(m.cols());
    for (const auto& [j, v] : r) row[j] = v.get_num() * (l / v.get_den());
    a.push_back(std::move(row));
  }
  const std::size_t rows = a.size(), cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      if (p == rows || mpz_cmpabs(a[i][c].get_mpz_t(), a[p][c].get_mpz_t()) < 0) p = i;
    }
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = piv * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

std::vector<SparseVector> kernel_vectors(const RationalMatrix& m) {
  Subspace rowspace(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rowspace.insert(m.row(i));
  auto pivots = rowspace.pivots();
  auto basis = rowspace.basis();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVector v;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      Rational x = entry(basis[r], f);
      if (!is_zero(x)) v.emplace_back(pivots[r], -x);
    }
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<LabeledVector> kernel_basis(const RationalMatrix& m) {
  std::vector<LabeledVector> out;
  Labels labels = m.col_labels() ? m.col_labels() : index_labels(m.cols());
  for (auto& v : kernel_vectors(m))
    out.push_back(LabeledVector{labels, std::move(v)});
  return out;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  SparseVector out = v;
  for (const auto& [i, x] : v) {
    auto it = rows_.find(i);
    if (it != rows_.end()) axpy(out, -x, it->second);
  }
  return out;
}

bool Subspace::insert(const SparseVector& v) {
  if (!v.empty() && v.back().first >= ambient_dim_)
    throw std::out_of_range("vector beyond subspace ambient dimension");
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  std::size_t p = r.front().first;
  Rational inv = 1 / r.front().second;
  r = scaled(r, inv);
  for (auto& [q, row] : rows_) {
    Rational x = entry(row, p);
    if (!is_zero(x)) axpy(row, -x, r);
  }
  rows_.emplace(p, std::move(r));
  return true;
}

bool Subspace::contains(const SparseVector& v) const {
  return reduce(v).empty();
}

std::vector<SparseVector> Subspace::basis() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(r);
  return out;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

std::vector<Rational> Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) throw PreconditionError("vector is not in the subspace");
  std::vector<Rational> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(entry(v, p));
  return out;
}

Subspace span(std::size_t ambient_dim, const std::vector<SparseVector>& vs) {
  Subspace s(ambient_dim);
  for (const auto& v : vs) s.insert(v);
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersecting subspaces of different spaces");
  auto ba = a.basis();
  auto bb = b.basis();
  const std::size_t p = ba.size();
  // Kernel of [A | -B]: rows are ambient coordinates.
  std::map<std::size_t, SparseVector> rows;
  for (std::size_t i = 0; i < ba.size(); ++i)
    for (const auto& [k, v] : ba[i]) rows[k].emplace_back(i, v);
  for (std::size_t i = 0; i < bb.size(); ++i)
    for (const auto& [k, v] : bb[i]) rows[k].emplace_back(p + i, -v);
  RationalMatrix m(rows.size(), p + bb.size());
  std::size_t r = 0;
  for (auto& [k, row] : rows) m.set_row(r++, std::move(row));
  Subspace out(a.ambient_dim());
  for (const auto& kv : kernel_vectors(m)) {
    SparseVector x;
    for (const auto& [i, c] : kv)
      if (i < p) axpy(x, c, ba[i]);
    out.insert(x);
  }
  return out;
}

Subspace intersect(const std::vector<Subspace>& spaces) {
  if (spaces.empty()) throw std::invalid_argument("empty intersection");
  Subspace acc = spaces.front();
  for (std::size_t i = 1; i < spaces.size(); ++i) acc = intersect(acc, spaces[i]);
  return acc;
}

bool is_subspace(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("comparing subspaces of different spaces");
  for (const auto& v : a.basis())
    if (!b.contains(v)) return false;
  return true;
}

bool same_subspace(const Subspace& a, const Subspace& b) {
  return a.dim() == b.dim() && is_subspace(a, b);
}

std::optional<std::vector<Rational>> solve(
    std::size_t ambient_dim, const std::vector<SparseVector>& columns,
    const SparseVector& b) {
  std::vector<SparseVector> cols = columns;
  cols.push_back(b);
  RationalMatrix m = RationalMatrix::from_columns(ambient_dim, cols);
  const std::size_t last = columns.size();
  for (const auto& v : kernel_vectors(m)) {
    Rational t = entry(v, last);
    if (is_zero(t)) continue;
    std::vector<Rational> x(columns.size());
    for (const auto& [i, c] : v)
      if (i < last) x[i] = -c / t;
    return x;
  }
  return std::nullopt;
}

}  // namespace schur
