#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "schur/combinatorics.hpp"
#include "schur/linalg.hpp"
#include "schur/rational.hpp"

namespace schur {

using Index = std::uint8_t;
// Concatenated column blocks; within a block indices strictly increase.
using Key = std::vector<Index>;
using Terms = std::map<Key, Rational>;

void add_term(Terms& terms, const Key& key, const Rational& c);
void add_scaled(Terms& acc, const Terms& x, const Rational& a);

// An element of the wedge tensor space of lambda' (of V*, when dual).
struct AmbientElement {
  Partition lambda;
  int n = 0;
  bool dual = false;
  Terms terms;

  std::vector<int> column_lengths() const;
  bool is_zero() const { return terms.empty(); }
};

struct SkewAmbientElement {
  SkewShape shape;
  int n = 0;
  Terms terms;

  // One entry per column of the outer shape, zeros included.
  std::vector<int> column_lengths() const;
  bool is_zero() const { return terms.empty(); }
};

struct WordTensor {
  int d = 0;
  int n = 0;
  Terms terms;
};

AmbientElement operator+(const AmbientElement& a, const AmbientElement& b);
AmbientElement operator-(const AmbientElement& a, const AmbientElement& b);
AmbientElement operator*(const Rational& s, const AmbientElement& a);
SkewAmbientElement operator+(const SkewAmbientElement& a,
                             const SkewAmbientElement& b);
bool operator==(const AmbientElement& a, const AmbientElement& b);
bool operator==(const SkewAmbientElement& a, const SkewAmbientElement& b);

// Builds a single product of wedge monomials; columns need not be sorted.
AmbientElement monomial(const Partition& lambda, int n,
                        const std::vector<std::vector<int>>& columns,
                        const Rational& c = 1, bool dual = false);
std::vector<std::vector<int>> split_key(const Key& key,
                                        const std::vector<int>& lengths);

// Ranks keys of a fixed column layout lexicographically.
class AmbientIndexer {
 public:
  AmbientIndexer(std::vector<int> column_lengths, int n);

  std::size_t dimension() const { return dimension_; }
  std::size_t index(const Key& key) const;
  Key key(std::size_t index) const;

 private:
  std::vector<int> lengths_;
  int n_;
  std::vector<std::size_t> radix_;
  std::size_t dimension_;
};

AmbientIndexer indexer(const AmbientElement& a);
AmbientIndexer indexer(const SkewAmbientElement& a);
AmbientIndexer indexer(const Partition& lambda, int n);
AmbientIndexer indexer(const SkewShape& shape, int n);
SparseVector to_vector(const AmbientElement& a);
SparseVector to_vector(const SkewAmbientElement& a);
AmbientElement ambient_from_vector(const Partition& lambda, int n, bool dual,
                                   const SparseVector& v);
SkewAmbientElement skew_from_vector(const SkewShape& shape, int n,
                                    const SparseVector& v);

// Symmetrizers act on word positions labelled by column_filling(shape).
WordTensor a_lambda(const Partition& lambda, const WordTensor& w);
WordTensor b_lambda(const Partition& lambda, const WordTensor& w);
WordTensor young_symmetrizer(const Partition& lambda, const WordTensor& w);
WordTensor row_symmetrize(const SkewShape& shape, const WordTensor& w);
WordTensor column_antisymmetrize(const SkewShape& shape, const WordTensor& w);
WordTensor skew_symmetrizer(const SkewShape& shape, const WordTensor& w);

WordTensor single_word(int n, const std::vector<int>& letters,
                       const Rational& c = 1);

AmbientElement word_to_ambient(const Partition& lambda, const WordTensor& w,
                               bool dual = false);
WordTensor ambient_to_word(const AmbientElement& a);
SkewAmbientElement skew_word_to_ambient(const SkewShape& shape,
                                        const WordTensor& w);
WordTensor skew_ambient_to_word(const SkewAmbientElement& a);

// Ambient coordinates of c_shape(v_word) for a single word, computed without
// expanding the column antisymmetrization.
Terms symmetrize_word(const SkewShape& shape, const std::vector<int>& letters);

AmbientElement basis_element(const Partition& lambda, const Tableau& s, int n,
                             bool dual = false);
std::vector<AmbientElement> schur_basis(const Partition& lambda, int n,
                                        bool dual = false);

// Reduced row echelon span of the Schur basis in ambient coordinates; cached.
const Subspace& schur_module(const Partition& lambda, int n);
// Span of c_shape(v_w) over all words w; cached.
const Subspace& skew_module(const SkewShape& shape, int n);

bool membership(const AmbientElement& a);
bool skew_membership(const SkewAmbientElement& a);

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(int n);
Matrix inverse(const Matrix& g);
Matrix transpose(const Matrix& g);
Matrix multiply(const Matrix& a, const Matrix& b);

// Wedge of the given vectors (each of length n), in sorted-key form.
Terms wedge(const std::vector<std::vector<Rational>>& vectors);
// Acts by the matrix on every wedge leg; a dual element wants (g^-1)^T.
Terms act(const Matrix& g, const Terms& terms, const std::vector<int>& lengths);
AmbientElement act(const Matrix& g, const AmbientElement& a);
SkewAmbientElement act(const Matrix& g, const SkewAmbientElement& a);

}  // namespace schur
