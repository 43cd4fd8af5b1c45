#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace schur {

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; anything else non-decreasing is rejected.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  // 1-based row length, 0 beyond the last row.
  int row(int i) const;
  bool contains(const Partition& other) const;
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);
// (width^height)
Partition rectangle(int width, int height);

struct Cell {
  int row;
  int col;
  auto operator<=>(const Cell&) const = default;
};

class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool is_straight() const { return inner_.empty(); }
  int size() const { return outer_.size() - inner_.size(); }
  bool contains(const Cell& c) const;
  // Row-major order.
  std::vector<Cell> cells() const;
  // Skew cell count of every column 1..outer_1.
  std::vector<int> column_lengths() const;
  std::string str() const;

  auto operator<=>(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

using Word = std::vector<int>;

class Tableau {
 public:
  Tableau() = default;
  // rows[i] lists the entries of the skew cells of row i+1, left to right.
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(int row, int col) const;
  int at(const Cell& c) const { return at(c.row, c.col); }

  bool is_semistandard() const;
  bool is_standard() const;
  // Columns left to right, each read top to bottom.
  Word column_word() const;
  std::vector<int> content() const;
  std::string str() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

// Canonical order: lexicographic on column_word().
std::vector<Tableau> enumerate_sstd(const SkewShape& shape, int max_entry);
std::vector<Tableau> enumerate_std(const Partition& shape);
// The standard filling numbering cells column by column, top to bottom.
Tableau column_filling(const SkewShape& shape);
Tableau transpose(const Tableau& t);

// Rows from the bottom up, each left to right.
Word word_of(const Tableau& t);
bool is_yamanouchi(const Word& w);
Word alpha(const Tableau& t);
Tableau beta(const Word& w);

std::vector<Tableau> lr_tableaux(const SkewShape& shape, const Partition& mu);
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu);
bool is_lr_tableau(const Tableau& t);
Tableau tprime(const Tableau& t);
std::map<Cell, Cell> sigma_map(const Tableau& t);

struct ColumnStructure {
  std::vector<int> heights;
  std::vector<int> multiplicities;
};

ColumnStructure column_structure(const Partition& lambda);
Partition from_column_structure(const ColumnStructure& cs);
Partition mu_e(const Partition& lambda, int e);

std::uint64_t schur_dimension(const Partition& lambda, int n);
std::uint64_t skew_dimension(const SkewShape& shape, int n);
std::uint64_t binomial(int n, int k);

std::vector<Partition> partitions_of(int size, int max_length = 1 << 20);
// All partitions contained in lambda, the empty one included.
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace schur
