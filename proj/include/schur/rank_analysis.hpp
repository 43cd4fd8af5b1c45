#pragma once

#include <optional>
#include <vector>

#include "schur/points.hpp"

namespace schur {

// Top-degree apolarity criterion: the apolar pieces of the points in degree
// lambda intersect inside the apolar piece of f.
bool decomposition_membership(const AmbientElement& f,
                              const std::vector<FlagPoint>& points);

// Coefficients with respect to flag_tensor(points[i]).
std::optional<std::vector<Rational>> solve_coefficients(
    const AmbientElement& f, const std::vector<FlagPoint>& points);

struct LowerBound {
  int bound = 0;
  std::vector<std::size_t> stage_ranks;
  std::vector<Partition> stage_mu;
};

LowerBound lambda_rank_lower_bound(const AmbientElement& f);

bool grassmann_rank1_test(const AmbientElement& f);

// Families (1), (2), (3) spanning the cone over the tangent space at the
// highest weight vector of S_(2,1^(k-1)).
std::vector<AmbientElement> tangent_space_basis(int k, int n);

enum class BorderClass { rank1, border2, border_ge_3 };

struct OrbitData {
  int h = 0;
  bool lines_equal = false;
};

struct Sigma2Verdict {
  BorderClass border_rank_class = BorderClass::rank1;
  std::optional<int> rank;
  std::optional<OrbitData> orbit;
  std::size_t r1 = 0, r2 = 0, r3 = 0;
  // Set when the triple exceeds what any element of sigma_2 can attain.
  bool caveat = false;
};

Partition hook_shape(int k);
Sigma2Verdict classify_sigma2(const AmbientElement& t, int k, int n);

const char* to_string(BorderClass c);

}  // namespace schur
