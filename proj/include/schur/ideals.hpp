#pragma once

#include <vector>

#include "schur/apolarity.hpp"
#include "schur/points.hpp"

namespace schur {

// An element of Sym_shape: keys are words (column_filling positions) whose
// rows are sorted, each standing for the sum over all row permutations, so
// that multiplying keys row by row is multiplication of polynomials.
struct SymTensor {
  SkewShape shape;
  int n = 0;
  Terms terms;
};

// The stages of the multiplication map.
SymTensor to_sym(const AmbientElement& g);
SymTensor rearrange(const Tableau& t, const SymTensor& h);
SymTensor multiply_rows(const SymTensor& g, const SymTensor& h_skew);
AmbientElement antisymmetrize(const SymTensor& s, bool dual = true);

AmbientElement multiplication_map(const Partition& lambda, const Partition& mu,
                                  const Partition& nu, const Tableau& t,
                                  const AmbientElement& g,
                                  const AmbientElement& h);

// Symmetric product of dual vectors as an element of S_(m)V*.
AmbientElement symmetric_product(const std::vector<std::vector<Rational>>& xs,
                                 int n);

struct Generator {
  int degree;
  Matrix perp;  // basis of the annihilator W_i^perp
};

std::vector<Generator> ideal_generators(const FlagPoint& f);

struct IdealPiece {
  std::vector<FlagPoint> points;
  Partition nu;
  int n = 0;
  std::vector<AmbientElement> basis;

  Subspace subspace() const;
};

IdealPiece ideal_piece(const FlagPoint& f, const Partition& nu,
                       bool iterate = true);
IdealPiece ideal_intersection(const std::vector<FlagPoint>& points,
                              const Partition& nu, bool iterate = true);
bool verify_top_degree(const FlagPoint& f);

}  // namespace schur
