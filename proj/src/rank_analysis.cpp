#include "schur/rank_analysis.hpp"

#include <future>

#include "schur/apolarity.hpp"
#include "schur/error.hpp"

namespace schur {

namespace {

void check_points(const AmbientElement& f, const std::vector<FlagPoint>& points) {
  if (f.dual) throw PreconditionError("expected a primal tensor");
  for (const auto& p : points) {
    if (p.lambda != f.lambda || p.n != f.n)
      throw PreconditionError("point " + p.lambda.str() +
                              " does not match tensor shape " + f.lambda.str());
    validate(p);
  }
}

}  // namespace

bool decomposition_membership(const AmbientElement& f,
                              const std::vector<FlagPoint>& points) {
  check_points(f, points);
  if (!membership(f)) throw PreconditionError("tensor is not in the Schur module");
  if (f.is_zero()) return true;
  if (points.empty()) return false;
  std::vector<Subspace> pieces;
  for (const auto& p : points)
    pieces.push_back(apolar_piece(flag_tensor(p), f.lambda).label_space());
  return is_subspace(intersect(pieces), apolar_piece(f, f.lambda).label_space());
}

std::optional<std::vector<Rational>> solve_coefficients(
    const AmbientElement& f, const std::vector<FlagPoint>& points) {
  check_points(f, points);
  std::vector<SparseVector> columns;
  for (const auto& p : points) columns.push_back(to_vector(flag_tensor(p)));
  return solve(indexer(f).dimension(), columns, to_vector(f));
}

LowerBound lambda_rank_lower_bound(const AmbientElement& f) {
  if (f.is_zero()) throw PreconditionError("lower bound of the zero tensor");
  if (f.dual) throw PreconditionError("expected a primal tensor");
  LowerBound out;
  AmbientElement t = f;
  while (!t.lambda.empty()) {
    ColumnStructure cs = column_structure(t.lambda);
    const int height = cs.heights.back();
    const int d = cs.multiplicities.back();
    Partition half = rectangle((d + 1) / 2, height);
    std::size_t r = catalecticant_rank(t, half);
    out.stage_ranks.push_back(r);
    out.stage_mu.push_back(half);
    if (r != 1) {
      out.bound = static_cast<int>(r);
      return out;
    }
    auto next = as_straight(image_generator(t, rectangle(d, height)));
    t = *next;
  }
  out.bound = 1;
  return out;
}

bool grassmann_rank1_test(const AmbientElement& f) {
  const auto& parts = f.lambda.parts();
  if (parts.empty() || parts.front() != parts.back())
    throw PreconditionError("rectangular shape expected, got " + f.lambda.str());
  if (f.is_zero()) return false;
  const int d = parts.front();
  return catalecticant_rank(f, rectangle((d + 1) / 2, f.lambda.length())) == 1;
}

Partition hook_shape(int k) {
  std::vector<int> parts(k, 1);
  parts[0] = 2;
  return Partition(parts);
}

std::vector<AmbientElement> tangent_space_basis(int k, int n) {
  if (k < 2 || k >= n) throw PreconditionError("need 1 < k < n");
  const Partition lambda = hook_shape(k);
  std::vector<int> big;
  for (int i = 1; i <= k; ++i) big.push_back(i);

  std::vector<AmbientElement> out;
  out.push_back(monomial(lambda, n, {big, {1}}));
  for (int i = 2; i <= k; ++i)
    for (int h = k + 1; h <= n; ++h) {
      auto cols = big;
      cols[i - 1] = h;
      out.push_back(monomial(lambda, n, {cols, {1}}));
    }
  for (int h = 2; h <= n; ++h) {
    auto swapped = big;
    swapped[0] = h;
    out.push_back(monomial(lambda, n, {big, {h}}) +
                  monomial(lambda, n, {swapped, {1}}));
  }
  return out;
}

Sigma2Verdict classify_sigma2(const AmbientElement& t, int k, int n) {
  if (k < 2) throw PreconditionError("classifier needs k >= 2");
  if (t.lambda != hook_shape(k) || t.n != n)
    throw PreconditionError("expected an element of S_" + hook_shape(k).str() +
                            " in dimension " + std::to_string(n));
  if (t.is_zero()) throw PreconditionError("classifier got the zero tensor");

  auto rk = [&t](Partition mu) { return catalecticant_rank(t, mu); };
  auto f1 = std::async(std::launch::async, rk, Partition(std::vector<int>(k, 1)));
  auto f2 = std::async(std::launch::async, rk, Partition{1});
  auto f3 = std::async(std::launch::async, rk, Partition{2});

  Sigma2Verdict v;
  v.r1 = f1.get();
  v.r2 = f2.get();
  v.r3 = f3.get();
  const std::size_t K = k;

  if (v.r1 == 1 && v.r2 == K && v.r3 == K) {
    v.border_rank_class = BorderClass::rank1;
    v.rank = 1;
    return v;
  }
  if (v.r1 >= 3) {
    v.border_rank_class = BorderClass::border_ge_3;
    return v;
  }
  v.border_rank_class = BorderClass::border2;
  v.caveat = v.r2 > 2 * K || v.r3 > 2 * K;
  const bool equal = v.r1 == 1;
  const int h = 2 * k - static_cast<int>(v.r2);
  if (!equal && v.r2 == K + 2 && v.r3 == 2 * K + 1) {
    v.rank = 3;
  } else if (!equal && v.r2 == K + 1 && v.r3 == 2 * K - 1) {
    v.rank = 2;
    v.orbit = OrbitData{k - 1, false};
  } else if (!equal && v.r3 == 2 * K && v.r2 >= K + 2 && v.r2 <= 2 * K) {
    v.rank = 2;
    v.orbit = OrbitData{h, false};
  } else if (v.r3 == v.r2 && v.r2 >= K + 1 && v.r2 <= 2 * K) {
    v.rank = 2;
    v.orbit = OrbitData{h, equal};
  } else {
    throw PreconditionError("unclassified: triple (" + std::to_string(v.r1) +
                            "," + std::to_string(v.r2) + "," +
                            std::to_string(v.r3) + ") matches no orbit");
  }
  return v;
}

const char* to_string(BorderClass c) {
  switch (c) {
    case BorderClass::rank1: return "rank1";
    case BorderClass::border2: return "border2";
    case BorderClass::border_ge_3: return "border_ge_3";
  }
  return "";
}

}  // namespace schur
