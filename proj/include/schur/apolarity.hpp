#pragma once

#include <optional>
#include <vector>

#include "schur/schur_space.hpp"

namespace schur {

// Contraction of a k-vector with a dual h-vector; single-block terms.
Terms skew_apolarity(const Terms& t, int k, const Terms& s, int h);

SkewAmbientElement schur_apolarity(const AmbientElement& f,
                                   const AmbientElement& g);

struct CatalecticantMatrix {
  Partition f_shape;
  Partition mu;
  int n = 0;
  // Column j is the image of the dual basis element of column_tableaux[j].
  std::vector<Tableau> column_tableaux;
  // Rows index the full wedge tensor space of the skew shape f_shape/mu.
  RationalMatrix matrix;

  SkewShape codomain() const { return SkewShape(f_shape, mu); }
};

CatalecticantMatrix catalecticant(const AmbientElement& f, const Partition& mu);
std::size_t catalecticant_rank(const AmbientElement& f, const Partition& mu);
// The same map with rows in coordinates of a basis of the skew Schur module.
// Throws if some column leaves the module.
RationalMatrix module_matrix(const CatalecticantMatrix& c);

struct ApolarPiece {
  Partition mu;
  int n = 0;
  std::vector<Tableau> labels;
  // Kernel vectors in coordinates of the dual basis indexed by labels.
  std::vector<SparseVector> kernel;

  // The dual element sum_S v_S c_mu(x_S).
  AmbientElement element(const SparseVector& v) const;
  std::vector<AmbientElement> elements() const;
  Subspace label_space() const;
};

ApolarPiece apolar_piece(const AmbientElement& f, const Partition& mu);
bool apolar_contains(const AmbientElement& f, const AmbientElement& g);

// Primitive integer generator of the image of a rank one catalecticant.
SkewAmbientElement image_generator(const AmbientElement& f, const Partition& mu);
// Identifies lambda/(e^l), l = length(lambda), with the straight shape mu_e.
std::optional<AmbientElement> as_straight(const SkewAmbientElement& a);

std::string key_label(const Key& key, const std::vector<int>& lengths);

}  // namespace schur
