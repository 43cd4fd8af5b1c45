#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schur/rational.hpp"

namespace schur {

// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// y += a * x
void axpy(SparseVector& y, const Rational& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Rational& a);
Rational entry(const SparseVector& x, std::size_t index);
SparseVector from_dense(const std::vector<Rational>& v);
std::vector<Rational> to_dense(const SparseVector& v, std::size_t dim);
// Rescales to coprime integers with a positive leading entry.
SparseVector primitive(const SparseVector& x);

using Labels = std::shared_ptr<const std::vector<std::string>>;

Labels make_labels(std::vector<std::string> labels);
Labels index_labels(std::size_t count);

struct LabeledVector {
  Labels basis_labels;
  SparseVector entries;

  Rational at(const std::string& label) const;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(Labels row_labels, Labels col_labels);

  static RationalMatrix from_columns(std::size_t rows,
                                     const std::vector<SparseVector>& columns);
  static RationalMatrix from_rows(std::size_t cols,
                                  const std::vector<SparseVector>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const SparseVector& row(std::size_t i) const { return rows_[i]; }
  void set_row(std::size_t i, SparseVector r);
  Rational get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& v);
  std::vector<SparseVector> columns() const;
  std::size_t nonzeros() const;

  // Null unless set explicitly.
  const Labels& row_labels() const { return row_labels_; }
  const Labels& col_labels() const { return col_labels_; }
  void set_labels(Labels rows, Labels cols);

  RationalMatrix transpose() const;
  SparseVector apply(const SparseVector& x) const;

 private:
  std::vector<SparseVector> rows_;
  std::size_t cols_ = 0;
  Labels row_labels_;
  Labels col_labels_;
};

// Fraction-free elimination; pivots on the smallest nonzero magnitude.
std::size_t rank(const RationalMatrix& m);

std::vector<SparseVector> kernel_vectors(const RationalMatrix& m);
std::vector<LabeledVector> kernel_basis(const RationalMatrix& m);

// Incrementally maintained reduced row echelon basis of a subspace of Q^dim.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  // Returns true iff the dimension grew.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  SparseVector reduce(const SparseVector& v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::vector<SparseVector> basis() const;
  std::vector<std::size_t> pivots() const;
  // Coordinates of a contained vector with respect to basis().
  std::vector<Rational> coordinates(const SparseVector& v) const;

 private:
  std::size_t ambient_dim_;
  std::map<std::size_t, SparseVector> rows_;
};

Subspace span(std::size_t ambient_dim, const std::vector<SparseVector>& vs);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace intersect(const std::vector<Subspace>& spaces);
bool is_subspace(const Subspace& a, const Subspace& b);
bool same_subspace(const Subspace& a, const Subspace& b);

// Some x with sum_i x_i columns[i] = b, if one exists.
std::optional<std::vector<Rational>> solve(
    std::size_t ambient_dim, const std::vector<SparseVector>& columns,
    const SparseVector& b);

}  // namespace schur
