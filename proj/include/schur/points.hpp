#pragma once

#include <cstdint>
#include <vector>

#include "schur/schur_space.hpp"

namespace schur {

struct FlagPoint {
  int n = 0;
  Partition lambda;
  // Generator rows of W_1 ⊂ W_2 ⊂ ..., smallest first.
  std::vector<Matrix> subspaces;
};

// Throws PreconditionError unless the subspaces are nested with the
// dimensions prescribed by column_structure(lambda).
void validate(const FlagPoint& f);

// Basis u_1, u_2, ... with W_i = <u_1, ..., u_{dim W_i}>.
std::vector<std::vector<Rational>> adapted_basis(const FlagPoint& f);
AmbientElement flag_tensor(const FlagPoint& f);

FlagPoint coordinate_flag(const Partition& lambda, int n);
AmbientElement highest_weight_vector(const Partition& lambda, int n);

// Dual bases of W_i^perp, in the order of f.subspaces.
std::vector<Matrix> annihilator_chain(const FlagPoint& f);

FlagPoint random_flag_point(const Partition& lambda, int n, std::uint64_t seed);
FlagPoint act(const Matrix& g, const FlagPoint& f);

}  // namespace schur
