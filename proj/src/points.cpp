#include "schur/points.hpp"

#include <random>

#include "schur/error.hpp"

namespace schur {

namespace {

Subspace row_space(const Matrix& rows, int n) {
  Subspace s(n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw PreconditionError("subspace generator has the wrong length");
    s.insert(from_dense(r));
  }
  return s;
}

}  // namespace

void validate(const FlagPoint& f) {
  if (f.n < 1) throw PreconditionError("flag point needs n >= 1");
  const auto cs = column_structure(f.lambda);
  if (f.subspaces.size() != cs.heights.size())
    throw PreconditionError("flag point needs one subspace per column height of " +
                            f.lambda.str());
  Subspace prev(f.n);
  for (std::size_t i = 0; i < f.subspaces.size(); ++i) {
    Subspace s = row_space(f.subspaces[i], f.n);
    if (static_cast<int>(s.dim()) != cs.heights[i])
      throw PreconditionError("subspace " + std::to_string(i + 1) +
                              " has dimension " + std::to_string(s.dim()) +
                              ", expected " + std::to_string(cs.heights[i]));
    if (!is_subspace(prev, s))
      throw PreconditionError("flag subspaces are not nested");
    prev = s;
  }
}

std::vector<std::vector<Rational>> adapted_basis(const FlagPoint& f) {
  validate(f);
  std::vector<std::vector<Rational>> basis;
  Subspace span_so_far(f.n);
  for (const auto& w : f.subspaces)
    for (const auto& r : w)
      if (span_so_far.insert(from_dense(r))) basis.push_back(r);
  return basis;
}

AmbientElement flag_tensor(const FlagPoint& f) {
  const auto basis = adapted_basis(f);
  AmbientElement out{f.lambda, f.n, false, {{Key(), Rational(1)}}};
  std::map<int, Terms> wedges;
  for (int len : out.column_lengths()) {
    auto it = wedges.find(len);
    if (it == wedges.end()) {
      std::vector<std::vector<Rational>> vs(basis.begin(), basis.begin() + len);
      it = wedges.emplace(len, wedge(vs)).first;
    }
    Terms next;
    for (const auto& [pk, pc] : out.terms)
      for (const auto& [wk, wc] : it->second) {
        Key k = pk;
        k.insert(k.end(), wk.begin(), wk.end());
        add_term(next, k, pc * wc);
      }
    out.terms = std::move(next);
  }
  return out;
}

FlagPoint coordinate_flag(const Partition& lambda, int n) {
  if (lambda.length() >= n)
    throw PreconditionError("coordinate flag needs length(lambda) < n");
  FlagPoint f{n, lambda, {}};
  const Matrix id = identity_matrix(n);
  for (int h : column_structure(lambda).heights)
    f.subspaces.emplace_back(id.begin(), id.begin() + h);
  return f;
}

AmbientElement highest_weight_vector(const Partition& lambda, int n) {
  return flag_tensor(coordinate_flag(lambda, n));
}

std::vector<Matrix> annihilator_chain(const FlagPoint& f) {
  validate(f);
  std::vector<Matrix> out;
  for (const auto& w : f.subspaces) {
    RationalMatrix m(w.size(), f.n);
    for (std::size_t i = 0; i < w.size(); ++i) m.set_row(i, from_dense(w[i]));
    Matrix perp;
    for (const auto& v : kernel_vectors(m)) perp.push_back(to_dense(v, f.n));
    out.push_back(std::move(perp));
  }
  return out;
}

FlagPoint random_flag_point(const Partition& lambda, int n, std::uint64_t seed) {
  if (lambda.length() >= n)
    throw PreconditionError("random flag needs length(lambda) < n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  const auto heights = column_structure(lambda).heights;
  const int top = heights.empty() ? 0 : heights.back();
  while (true) {
    Matrix rows(top, std::vector<Rational>(n));
    for (auto& r : rows)
      for (auto& x : r) x = dist(rng);
    if (static_cast<int>(row_space(rows, n).dim()) != top) continue;
    FlagPoint f{n, lambda, {}};
    for (int h : heights) f.subspaces.emplace_back(rows.begin(), rows.begin() + h);
    return f;
  }
}

FlagPoint act(const Matrix& g, const FlagPoint& f) {
  FlagPoint out{f.n, f.lambda, {}};
  for (const auto& w : f.subspaces) {
    Matrix img;
    for (const auto& r : w) {
      std::vector<Rational> v(f.n);
      for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j) v[i] += g[i][j] * r[j];
      img.push_back(std::move(v));
    }
    out.subspaces.push_back(std::move(img));
  }
  return out;
}

}  // namespace schur
