#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "schur/json_io.hpp"

namespace schur {

struct Reproduction {
  std::string id;
  std::string title;
  std::function<Json(std::uint64_t seed)> run;
};

// Each run returns an object with at least "id", "pass" and "seed".
const std::vector<Reproduction>& reproductions();
Json reproduce(const std::string& id, std::uint64_t seed = 0);

// e_1 .. e_n coordinates, 1-based.
std::vector<Rational> unit_vector(int n, int i);
std::vector<Rational> vec(int n, const std::vector<std::pair<int, int>>& coords);

// v_1..v_k (x) v_i + v_1..v_h v_{k+1}..v_{2k-h} (x) v_j with the two lines
// taken equal (v_1) or in general position inside V and W.
AmbientElement secant_representative(int k, int n, int h, bool lines_equal);
// a family (2) element plus a family (3) element.
AmbientElement tangent_sum(int k, int n, int j, int h);

}  // namespace schur
