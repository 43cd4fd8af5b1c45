#include "schur/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "schur/error.hpp"
#include "schur/rational.hpp"

namespace schur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw PreconditionError("partition parts must weakly decrease");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::row(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i)
    if (other.row(i) > row(i)) return false;
  return true;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  for (int c = 1; c <= lambda.row(1); ++c) {
    int h = 0;
    while (lambda.row(h + 1) >= c) ++h;
    out.push_back(h);
  }
  return Partition(out);
}

Partition rectangle(int width, int height) {
  if (width < 0 || height < 0) throw PreconditionError("negative rectangle");
  if (width == 0) return Partition();
  return Partition(std::vector<int>(height, width));
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw PreconditionError("inner shape " + inner_.str() +
                            " does not fit in " + outer_.str());
}

bool SkewShape::contains(const Cell& c) const {
  return c.row >= 1 && c.col > inner_.row(c.row) && c.col <= outer_.row(c.row);
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.row(i) + 1; j <= outer_.row(i); ++j) out.push_back({i, j});
  return out;
}

std::vector<int> SkewShape::column_lengths() const {
  Partition oc = conjugate(outer_), ic = conjugate(inner_);
  std::vector<int> out;
  for (int c = 1; c <= outer_.row(1); ++c) out.push_back(oc.row(c) - ic.row(c));
  return out;
}

std::string SkewShape::str() const {
  return inner_.empty() ? outer_.str() : outer_.str() + "/" + inner_.str();
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const auto& o = shape_.outer();
  const auto& in = shape_.inner();
  if (static_cast<int>(rows_.size()) != o.length())
    throw PreconditionError("tableau row count does not match its shape");
  for (int i = 1; i <= o.length(); ++i) {
    if (static_cast<int>(rows_[i - 1].size()) != o.row(i) - in.row(i))
      throw PreconditionError("tableau row length does not match its shape");
    for (int x : rows_[i - 1])
      if (x < 1) throw PreconditionError("tableau entries must be positive");
  }
}

int Tableau::at(int row, int col) const {
  if (!shape_.contains({row, col}))
    throw std::out_of_range("cell outside tableau shape");
  return rows_[row - 1][col - shape_.inner().row(row) - 1];
}

bool Tableau::is_semistandard() const {
  for (const auto& c : shape_.cells()) {
    if (shape_.contains({c.row, c.col - 1}) && at(c.row, c.col - 1) > at(c))
      return false;
    if (shape_.contains({c.row - 1, c.col}) && at(c.row - 1, c.col) >= at(c))
      return false;
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  std::vector<bool> seen(shape_.size() + 1, false);
  for (const auto& c : shape_.cells()) {
    int x = at(c);
    if (x > shape_.size() || seen[x]) return false;
    if (shape_.contains({c.row, c.col - 1}) && at(c.row, c.col - 1) == x)
      return false;
    seen[x] = true;
  }
  return true;
}

Word Tableau::column_word() const {
  Word w;
  const auto lengths = shape_.column_lengths();
  for (int c = 1; c <= static_cast<int>(lengths.size()); ++c)
    for (int r = 1; r <= shape_.outer().length(); ++r)
      if (shape_.contains({r, c})) w.push_back(at(r, c));
  return w;
}

std::vector<int> Tableau::content() const {
  std::vector<int> out;
  for (const auto& row : rows_)
    for (int x : row) {
      if (x > static_cast<int>(out.size())) out.resize(x, 0);
      ++out[x - 1];
    }
  return out;
}

std::string Tableau::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += "/";
    for (int k = 0; k < shape_.inner().row(static_cast<int>(i) + 1); ++k) s += ".";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j || shape_.inner().row(static_cast<int>(i) + 1)) s += ",";
      s += std::to_string(rows_[i][j]);
    }
  }
  return s;
}

namespace {

std::vector<Cell> column_major_cells(const SkewShape& shape) {
  std::vector<Cell> cells = shape.cells();
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  return cells;
}

std::vector<std::vector<int>> empty_rows(const SkewShape& shape) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= shape.outer().length(); ++i)
    rows.emplace_back(shape.outer().row(i) - shape.inner().row(i), 0);
  return rows;
}

// Fills cells in column-major order with ascending values, so results come
// out in canonical order. `content_cap` bounds how often each value is used.
std::vector<Tableau> fill_sstd(const SkewShape& shape, int max_entry,
                               const std::vector<int>* content_cap) {
  std::vector<Tableau> out;
  if (max_entry < 1 && shape.size() > 0) return out;
  const auto cells = column_major_cells(shape);
  auto rows = empty_rows(shape);
  std::vector<int> used(std::max(max_entry, 0) + 1, 0);
  auto slot = [&](const Cell& c) -> int& {
    return rows[c.row - 1][c.col - shape.inner().row(c.row) - 1];
  };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.emplace_back(shape, rows);
      return;
    }
    const Cell c = cells[k];
    int lo = 1;
    if (shape.contains({c.row, c.col - 1})) lo = std::max(lo, slot({c.row, c.col - 1}));
    if (shape.contains({c.row - 1, c.col}))
      lo = std::max(lo, slot({c.row - 1, c.col}) + 1);
    int below = 0;
    while (shape.contains({c.row + below + 1, c.col})) ++below;
    int hi = max_entry - below;
    for (int v = lo; v <= hi; ++v) {
      if (content_cap && used[v] >= (*content_cap)[v - 1]) continue;
      ++used[v];
      slot(c) = v;
      rec(k + 1);
      --used[v];
    }
    slot(c) = 0;
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<Tableau> enumerate_sstd(const SkewShape& shape, int max_entry) {
  return fill_sstd(shape, max_entry, nullptr);
}

std::vector<Tableau> enumerate_std(const Partition& shape) {
  std::vector<Tableau> out;
  const int n = shape.size();
  std::vector<int> filled(shape.length(), 0);
  SkewShape sk(shape);
  auto rows = empty_rows(sk);
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.emplace_back(sk, rows);
      return;
    }
    for (int i = 0; i < shape.length(); ++i) {
      if (filled[i] == shape.row(i + 1)) continue;
      if (i > 0 && filled[i - 1] <= filled[i]) continue;
      rows[i][filled[i]++] = next;
      rec(next + 1);
      --filled[i];
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return a.column_word() < b.column_word();
  });
  return out;
}

Tableau column_filling(const SkewShape& shape) {
  auto rows = empty_rows(shape);
  int k = 0;
  for (const auto& c : column_major_cells(shape))
    rows[c.row - 1][c.col - shape.inner().row(c.row) - 1] = ++k;
  return Tableau(shape, rows);
}

Tableau transpose(const Tableau& t) {
  if (!t.shape().is_straight())
    throw PreconditionError("transpose needs a straight shape");
  Partition conj = conjugate(t.shape().outer());
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= conj.length(); ++i) {
    rows.emplace_back();
    for (int j = 1; j <= conj.row(i); ++j) rows.back().push_back(t.at(j, i));
  }
  return Tableau(SkewShape(conj), rows);
}

Word word_of(const Tableau& t) {
  Word w;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

bool is_yamanouchi(const Word& w) {
  std::vector<int> count;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int x = *it;
    if (x < 1) return false;
    if (x > static_cast<int>(count.size())) count.resize(x, 0);
    ++count[x - 1];
    if (x > 1 && count[x - 1] > count[x - 2]) return false;
  }
  return true;
}

Word alpha(const Tableau& t) {
  if (!t.shape().is_straight() || !t.is_standard())
    throw PreconditionError("alpha needs a standard tableau of straight shape");
  Word a(t.shape().size());
  for (const auto& c : t.shape().cells()) a[t.at(c) - 1] = c.row;
  std::reverse(a.begin(), a.end());
  return a;
}

Tableau beta(const Word& w) {
  if (!is_yamanouchi(w)) throw PreconditionError("beta needs a Yamanouchi word");
  Word a(w.rbegin(), w.rend());
  std::vector<std::vector<int>> rows;
  for (std::size_t l = 0; l < a.size(); ++l) {
    if (a[l] > static_cast<int>(rows.size())) rows.resize(a[l]);
    rows[a[l] - 1].push_back(static_cast<int>(l) + 1);
  }
  std::vector<int> shape;
  for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
  return Tableau(SkewShape(Partition(shape)), rows);
}

std::vector<Tableau> lr_tableaux(const SkewShape& shape, const Partition& mu) {
  if (mu.size() != shape.size()) return {};
  auto candidates = fill_sstd(shape, mu.length(), &mu.parts());
  std::vector<Tableau> out;
  for (auto& t : candidates)
    if (is_yamanouchi(word_of(t))) out.push_back(std::move(t));
  return out;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu) {
  if (!nu.contains(lambda) || nu.size() != lambda.size() + mu.size()) return 0;
  return static_cast<std::int64_t>(lr_tableaux(SkewShape(nu, lambda), mu).size());
}

bool is_lr_tableau(const Tableau& t) {
  if (!t.is_semistandard() || !is_yamanouchi(word_of(t))) return false;
  auto content = t.content();
  for (int x : content)
    if (x == 0) return false;
  return true;
}

Tableau tprime(const Tableau& t) {
  if (!is_lr_tableau(t)) throw PreconditionError("tprime needs an LR tableau");
  Word a_prime = alpha(transpose(beta(word_of(t))));
  const auto& shape = t.shape();
  auto rows = empty_rows(shape);
  std::size_t k = 0;
  for (int i = shape.outer().length(); i >= 1; --i)
    for (auto& x : rows[i - 1]) x = a_prime[k++];
  return Tableau(shape, rows);
}

std::map<Cell, Cell> sigma_map(const Tableau& t) {
  Tableau tp = tprime(t);
  Partition mu(t.content());
  std::map<Cell, Cell> out;
  std::set<Cell> image;
  for (const auto& c : t.shape().cells()) {
    Cell target{t.at(c), tp.at(c)};
    if (!SkewShape(mu).contains(target) || !image.insert(target).second)
      throw PreconditionError("sigma map is not a bijection onto the content shape");
    out[c] = target;
  }
  return out;
}

ColumnStructure column_structure(const Partition& lambda) {
  ColumnStructure cs;
  Partition conj = conjugate(lambda);
  for (auto it = conj.parts().rbegin(); it != conj.parts().rend(); ++it) {
    if (!cs.heights.empty() && cs.heights.back() == *it)
      ++cs.multiplicities.back();
    else {
      cs.heights.push_back(*it);
      cs.multiplicities.push_back(1);
    }
  }
  return cs;
}

Partition from_column_structure(const ColumnStructure& cs) {
  if (cs.heights.size() != cs.multiplicities.size())
    throw PreconditionError("column structure size mismatch");
  std::vector<int> cols;
  for (std::size_t i = cs.heights.size(); i-- > 0;)
    cols.insert(cols.end(), cs.multiplicities[i], cs.heights[i]);
  return conjugate(Partition(cols));
}

Partition mu_e(const Partition& lambda, int e) {
  auto cs = column_structure(lambda);
  if (cs.heights.empty() || e < 1 || e > cs.multiplicities.back())
    throw PreconditionError("mu_e: e out of range");
  auto cols = conjugate(lambda).parts();
  cols.erase(cols.begin(), cols.begin() + e);
  return conjugate(Partition(cols));
}

std::uint64_t schur_dimension(const Partition& lambda, int n) {
  Partition conj = conjugate(lambda);
  Integer num = 1, den = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) {
      int content = n + j - i;
      if (content <= 0) return 0;
      num *= content;
      den *= lambda.row(i) - j + conj.row(j) - i + 1;
    }
  Integer q = num / den;
  return q.get_ui();
}

std::uint64_t skew_dimension(const SkewShape& shape, int n) {
  return enumerate_sstd(shape, n).size();
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r.get_ui();
}

std::vector<Partition> partitions_of(int size, int max_length) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(size, size);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i > lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    int cap = std::min(lambda.row(i), i > 1 ? cur[i - 2] : lambda.row(i));
    for (int p = 0; p <= cap; ++p) {
      cur.push_back(p);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.parts() > b.parts();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace schur
