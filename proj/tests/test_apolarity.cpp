#include <doctest.h>

#include <array>

#include "classical.hpp"
#include "schur/apolarity.hpp"
#include "schur/error.hpp"

using namespace schur;

namespace {

using namespace oracle;

Subspace span_elements(const std::vector<AmbientElement>& xs, std::size_t dim) {
  Subspace s(dim);
  for (const auto& x : xs) s.insert(to_vector(x));
  return s;
}

}  // namespace

TEST_CASE("wedge contraction matches the determinant expansion") {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= n; ++k)
      for (int h = 1; h <= k; ++h) {
        std::vector<Vec> v, alpha;
        for (int i = 0; i < k; ++i) v.push_back(oracle::random_vector(n, rng));
        for (int i = 0; i < h; ++i) alpha.push_back(oracle::random_vector(n, rng));
        Terms expected = contraction_by_determinants(v, alpha);
        CHECK(skew_apolarity(wedge(v), k, wedge(alpha), h) == expected);
        const Partition lk(std::vector<int>(k, 1)), lh(std::vector<int>(h, 1));
        AmbientElement f{lk, n, false, wedge(v)}, g{lh, n, true, wedge(alpha)};
        CHECK(schur_apolarity(f, g).terms == expected);
      }
  CHECK_THROWS_AS(skew_apolarity(Terms{{Key{1}, 1}}, 1, Terms{{Key{1, 2}, 1}}, 2), PreconditionError);
}

TEST_CASE("symmetric powers recover classical apolarity") {
  std::mt19937_64 rng(37);
  for (int d = 1; d <= 4; ++d)
    for (int e = 1; e <= d; ++e) {
      std::optional<Rational> ratio;
      for (int trial = 0; trial < 4; ++trial) {
        Poly f = random_form(d, rng), g = random_form(e, rng);
        AmbientElement F = tensor_of(f, d, false), G = tensor_of(g, e, true);
        REQUIRE(membership(F));
        SkewAmbientElement phi = schur_apolarity(F, G);
        Poly h = differentiate(g, f);
        AmbientElement H = tensor_of(h, d - e, false);
        if (h.empty()) {
          CHECK(phi.is_zero());
          continue;
        }
        SparseVector a = to_vector(phi), b = to_vector(H);
        REQUIRE(oracle::proportional(a, b));
        Rational r = b.front().second / a.front().second;
        if (ratio) CHECK(r == *ratio);
        ratio = r;
      }
      if (ratio) CHECK(*ratio == Rational(oracle::factorial(d)) / Rational(oracle::factorial(d - e)));
    }
}

TEST_CASE("symmetric catalecticant kernels equal classical kernels") {
  std::mt19937_64 rng(41);
  for (int d = 2; d <= 4; ++d)
    for (int e = 1; e < d; ++e)
      for (int trial = 0; trial < 3; ++trial) {
        Poly f = random_form(d, rng);
        AmbientElement F = tensor_of(f, d, false);
        // Classical kernel: columns are x^a, rows the coefficients of x^a(d) f.
        auto ms = monomials(e), out = monomials(d - e);
        RationalMatrix m(out.size(), ms.size());
        for (std::size_t j = 0; j < ms.size(); ++j) {
          Poly h = differentiate(Poly{{ms[j], 1}}, f);
          for (std::size_t i = 0; i < out.size(); ++i)
            if (h.count(out[i])) m.set(i, j, h[out[i]]);
        }
        std::vector<AmbientElement> classical;
        for (const auto& v : kernel_vectors(m)) {
          Poly g;
          for (const auto& [j, c] : v) g[ms[j]] = c;
          classical.push_back(tensor_of(g, e, true));
        }
        ApolarPiece piece = apolar_piece(F, Partition{e});
        const std::size_t dim = indexer(Partition{e}, 3).dimension();
        CHECK(piece.kernel.size() == classical.size());
        CHECK(same_subspace(span_elements(piece.elements(), dim), span_elements(classical, dim)));
        CHECK(catalecticant_rank(F, Partition{e}) == oracle::dense_rank(oracle::to_dense(m)));
      }
}

TEST_CASE("Schur apolarity on the worked examples") {
  AmbientElement t = monomial(Partition{2, 2}, 4, {{1, 2}, {1, 3}}) +
                     monomial(Partition{2, 2}, 4, {{1, 3}, {1, 2}});
  auto r = schur_apolarity(t, monomial(Partition{1, 1}, 4, {{1, 2}}, 1, true));
  CHECK(r.terms == Terms{{Key{1, 3}, 1}});
  CHECK(r.shape == SkewShape(Partition{2, 2}, Partition{1, 1}));
  auto z = schur_apolarity(monomial(Partition{2}, 3, {{1}, {1}}), monomial(Partition{1, 1}, 3, {{1, 2}}, 1, true));
  CHECK(z.is_zero());
  CHECK_THROWS_AS(schur_apolarity(t, t), PreconditionError);
}

TEST_CASE("images of the apolarity action lie in the skew module") {
  std::mt19937_64 rng(43);
  struct Case { Partition l, mu; };
  for (const auto& c : {Case{{2, 1}, {1}}, Case{{2, 2}, {1, 1}}, Case{{2, 2}, {2}}, Case{{3, 2, 1}, {2, 1}},
                        Case{{3, 2, 1}, {2}}, Case{{3, 1}, {1, 1}}})
    for (int trial = 0; trial < 4; ++trial) {
      AmbientElement f = oracle::random_element(c.l, 3, false, rng);
      AmbientElement g = oracle::random_element(c.mu, 3, true, rng);
      CHECK(skew_membership(schur_apolarity(f, g)));
    }
}

TEST_CASE("the apolarity action is equivariant") {
  std::mt19937_64 rng(47);
  struct Case { Partition l, mu; };
  for (const auto& c : {Case{{2, 1}, {1}}, Case{{2, 2}, {1, 1}}, Case{{3, 2, 1}, {2}}})
    for (int trial = 0; trial < 5; ++trial) {
      Matrix g = oracle::random_invertible(3, rng);
      AmbientElement f = oracle::random_element(c.l, 3, false, rng);
      AmbientElement x = oracle::random_element(c.mu, 3, true, rng);
      CHECK(act(g, schur_apolarity(f, x)) == schur_apolarity(act(g, f), act(transpose(inverse(g)), x)));
    }
}

TEST_CASE("catalecticant columns are images of the dual basis") {
  std::mt19937_64 rng(53);
  AmbientElement f = oracle::random_element(Partition{3, 2, 1}, 3, false, rng);
  for (const Partition& mu : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}}) {
    auto c = catalecticant(f, mu);
    auto cols = c.matrix.columns();
    REQUIRE(cols.size() == c.column_tableaux.size());
    CHECK(cols.size() == schur_dimension(mu, 3));
    for (std::size_t j = 0; j < cols.size(); ++j)
      CHECK(cols[j] == to_vector(schur_apolarity(f, basis_element(mu, c.column_tableaux[j], 3, true))));
    CHECK(rank(c.matrix) == oracle::dense_rank(oracle::to_dense(c.matrix)));
    auto m = module_matrix(c);
    CHECK(m.rows() == skew_dimension(c.codomain(), 3));
    CHECK(rank(m) == rank(c.matrix));
  }
}

TEST_CASE("catalecticant shapes and ranks at a rank one point of S_(2,2)C^4") {
  AmbientElement t = flag_tensor(random_flag_point(Partition{2, 2}, 4, 5));
  struct Row { Partition mu; std::size_t rank, rows, cols; };
  for (const auto& r : {Row{{1}, 2, 20, 4}, Row{{2}, 3, 10, 10}, Row{{1, 1}, 1, 6, 6}}) {
    auto c = catalecticant(t, r.mu);
    auto m = module_matrix(c);
    CHECK(rank(c.matrix) == r.rank);
    CHECK(m.rows() == r.rows);
    CHECK(m.cols() == r.cols);
  }
}

TEST_CASE("catalecticant rank is subadditive") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    AmbientElement a = oracle::random_element(Partition{2, 2}, 4, false, rng);
    AmbientElement b = flag_tensor(random_flag_point(Partition{2, 2}, 4, trial));
    if (a.is_zero() || (a + b).is_zero()) continue;
    for (const Partition& mu : {Partition{1}, Partition{2}, Partition{1, 1}})
      CHECK(catalecticant_rank(a + b, mu) <= catalecticant_rank(a, mu) + catalecticant_rank(b, mu));
  }
}

TEST_CASE("apolar pieces are killed and complementary to the rank") {
  AmbientElement f = flag_tensor(random_flag_point(Partition{3, 2, 1}, 4, 2)) + flag_tensor(random_flag_point(Partition{3, 2, 1}, 4, 3));
  for (const Partition& mu : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}, Partition{3, 2, 1}}) {
    ApolarPiece p = apolar_piece(f, mu);
    CHECK(p.kernel.size() + catalecticant_rank(f, mu) == schur_dimension(mu, 4));
    for (const auto& g : p.elements()) {
      CHECK(schur_apolarity(f, g).is_zero());
      CHECK(apolar_contains(f, g));
    }
  }
  ApolarPiece top = apolar_piece(f, f.lambda);
  CHECK(top.kernel.size() + 1 == schur_dimension(f.lambda, 4));
}

TEST_CASE("apolar piece of v1^v2 (x) v1 in degree (1)") {
  const Partition l{2, 1};
  AmbientElement p = monomial(l, 3, {{1, 2}, {1}});
  ApolarPiece a = apolar_piece(p, Partition{1});
  REQUIRE(a.kernel.size() == 1);
  CHECK(oracle::proportional(a.elements().front(), monomial(Partition{1}, 3, {{3}}, 1, true)));
}

TEST_CASE("catalecticant preconditions") {
  AmbientElement zero{Partition{2, 1}, 3, false, {}};
  CHECK_THROWS_AS(catalecticant(zero, Partition{1}), PreconditionError);
  AmbientElement p = monomial(Partition{2, 1}, 3, {{1, 2}, {1}});
  CHECK_THROWS_AS(catalecticant(p, Partition{3}), PreconditionError);
  CHECK_THROWS_AS(image_generator(p + monomial(Partition{2, 1}, 3, {{1, 3}, {3}}), Partition{1}),
                  PreconditionError);
}

TEST_CASE("image generators of rank one maps") {
  AmbientElement t = monomial(Partition{3, 2, 1}, 4, {{1, 2, 3}, {1, 2}, {1}}) +
                     monomial(Partition{3, 2, 1}, 4, {{1, 2, 3}, {2, 3}, {3}});
  CHECK(catalecticant_rank(t, Partition{1, 1, 1}) == 1);
  auto gen = as_straight(image_generator(t, Partition{1, 1, 1}));
  REQUIRE(gen);
  AmbientElement expected = monomial(Partition{2, 1}, 4, {{1, 2}, {1}}) + monomial(Partition{2, 1}, 4, {{2, 3}, {3}});
  CHECK(oracle::proportional(*gen, expected));
}
