#include <doctest.h>

#include "oracles.hpp"
#include "schur/linalg.hpp"

using namespace schur;

namespace {

RationalMatrix from_dense_rows(const oracle::Dense& d) {
  std::vector<SparseVector> rows;
  for (const auto& r : d) rows.push_back(from_dense(r));
  return RationalMatrix::from_rows(d.empty() ? 0 : d[0].size(), rows);
}

oracle::Dense random_low_rank(std::size_t rows, std::size_t cols, int r,
                              std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  oracle::Dense m(rows, std::vector<Rational>(cols));
  for (int t = 0; t < r; ++t) {
    std::vector<int> a(rows), b(cols);
    for (auto& x : a) x = d(rng);
    for (auto& x : b) x = d(rng);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m[i][j] += a[i] * b[j];
  }
  return m;
}

}  // namespace

TEST_CASE("rationals print as p/q in lowest terms") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(RationalMatrix(3, 4)) == 0);
  RationalMatrix id(6, 6);
  for (std::size_t i = 0; i < 6; ++i) id.set(i, i, 1);
  CHECK(rank(id) == 6);
  CHECK(kernel_vectors(id).empty());
  CHECK(kernel_vectors(RationalMatrix(2, 3)).size() == 3);
}

TEST_CASE("rank agrees with dense elimination") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int r = static_cast<int>(rng() % 5);
    auto d = random_low_rank(3 + rng() % 5, 3 + rng() % 5, r, rng);
    auto m = from_dense_rows(d);
    const std::size_t expected = oracle::dense_rank(d);
    CHECK(rank(m) == expected);
    CHECK(rank(m.transpose()) == expected);
    CHECK(expected <= static_cast<std::size_t>(r));
  }
}

TEST_CASE("kernel vectors are annihilated and complete") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto d = random_low_rank(4, 6, 1 + rng() % 3, rng);
    auto m = from_dense_rows(d);
    auto ker = kernel_vectors(m);
    CHECK(ker.size() + rank(m) == m.cols());
    for (const auto& v : ker) CHECK(m.apply(v).empty());
    CHECK(span(m.cols(), ker).dim() == ker.size());
    auto labeled = kernel_basis(m);
    CHECK(labeled.size() == ker.size());
  }
}

TEST_CASE("rank is invariant under invertible changes of basis") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto d = random_low_rank(4, 4, 2, rng);
    auto g = oracle::random_invertible(4, rng);
    oracle::Dense prod(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) prod[i][j] += g[i][k] * d[k][j];
    CHECK(rank(from_dense_rows(prod)) == rank(from_dense_rows(d)));
  }
}

TEST_CASE("subspace insert, contains and coordinates") {
  Subspace s(4);
  CHECK(s.insert(from_dense({1, 2, 0, 0})));
  CHECK(s.insert(from_dense({0, 1, 1, 0})));
  CHECK_FALSE(s.insert(from_dense({1, 3, 1, 0})));
  CHECK(s.dim() == 2);
  SparseVector v = from_dense({2, 5, 1, 0});
  REQUIRE(s.contains(v));
  auto c = s.coordinates(v);
  auto b = s.basis();
  SparseVector back;
  for (std::size_t i = 0; i < b.size(); ++i) axpy(back, c[i], b[i]);
  CHECK(back == v);
  CHECK_FALSE(s.contains(from_dense({0, 0, 0, 1})));
}

TEST_CASE("intersections of hyperplanes") {
  auto h1 = span(4, {from_dense({1, 0, 0, 0}), from_dense({0, 1, 0, 0}), from_dense({0, 0, 1, 0})});
  auto h2 = span(4, {from_dense({0, 1, 0, 0}), from_dense({0, 0, 1, 0}), from_dense({0, 0, 0, 1})});
  auto i = intersect(h1, h2);
  CHECK(i.dim() == 2);
  CHECK(is_subspace(i, h1));
  CHECK(is_subspace(i, h2));
  CHECK(same_subspace(intersect(h1, h1), h1));
  CHECK(intersect(std::vector<Subspace>{h1, h2, span(4, {from_dense({0, 1, 0, 0})})}).dim() == 1);
}

TEST_CASE("solve finds a preimage or reports none") {
  std::vector<SparseVector> cols{from_dense({1, 0, 1}), from_dense({0, 1, 1})};
  auto x = solve(3, cols, from_dense({2, 3, 5}));
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK_FALSE(solve(3, cols, from_dense({0, 0, 1})));
}

TEST_CASE("primitive rescales to coprime integers") {
  auto p = primitive(from_dense({0, Rational(-2, 3), Rational(4, 9)}));
  CHECK(p == from_dense({0, 3, -2}));
}
