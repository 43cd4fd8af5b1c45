#include <doctest.h>

#include "oracles.hpp"
#include "schur/error.hpp"

using namespace schur;

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Product over the columns of the wedge of the first (column height) vectors.
AmbientElement product_of_wedges(const Partition& l, int n,
                                 const std::vector<std::vector<Rational>>& u) {
  Terms acc{{Key{}, 1}};
  const Partition conj = conjugate(l);
  for (int h : conj.parts()) {
    Terms w = wedge({u.begin(), u.begin() + h});
    Terms next;
    for (const auto& [k1, c1] : acc)
      for (const auto& [k2, c2] : w) {
        Key k = k1;
        k.insert(k.end(), k2.begin(), k2.end());
        add_term(next, k, c1 * c2);
      }
    acc = std::move(next);
  }
  return AmbientElement{l, n, false, acc};
}

// Same flag, other generators: each subspace gets an invertible recombination.
FlagPoint regenerate(const FlagPoint& f, std::mt19937_64& rng) {
  FlagPoint g = f;
  for (auto& m : g.subspaces) {
    Matrix mix = oracle::random_invertible(static_cast<int>(m.size()), rng);
    m = multiply(mix, m);
  }
  return g;
}

}  // namespace

TEST_CASE("coordinate flags give highest weight vectors") {
  const Partition l{2, 1};
  CHECK(flag_tensor(coordinate_flag(l, 3)) == monomial(l, 3, {{1, 2}, {1}}));
  CHECK(highest_weight_vector(l, 3) == monomial(l, 3, {{1, 2}, {1}}));
  CHECK(highest_weight_vector(Partition{3, 2, 1}, 4) ==
        monomial(Partition{3, 2, 1}, 4, {{1, 2, 3}, {1, 2}, {1}}));
}

TEST_CASE("flag tensors are products of wedges of an adapted basis") {
  for (const Partition& l : {Partition{2, 1}, Partition{2, 2}, Partition{3, 2, 1}, Partition{4, 2}}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      FlagPoint f = random_flag_point(l, 4, seed);
      validate(f);
      auto u = adapted_basis(f);
      CHECK(flag_tensor(f) == product_of_wedges(l, 4, u));
      CHECK(membership(flag_tensor(f)));
    }
  }
}

TEST_CASE("flag tensors do not depend on the chosen generators") {
  std::mt19937_64 rng(21);
  for (const Partition& l : {Partition{2, 1}, Partition{2, 2}, Partition{3, 2, 1}}) {
    FlagPoint f = random_flag_point(l, 4, 7);
    FlagPoint g = regenerate(f, rng);
    CHECK(oracle::proportional(flag_tensor(f), flag_tensor(g)));
  }
}

TEST_CASE("random flags are reproducible from the seed") {
  const Partition l{2, 1};
  CHECK(flag_tensor(random_flag_point(l, 4, 3)) == flag_tensor(random_flag_point(l, 4, 3)));
  CHECK_FALSE(oracle::proportional(flag_tensor(random_flag_point(l, 4, 3)),
                                   flag_tensor(random_flag_point(l, 4, 4))));
}

TEST_CASE("generic flags are linearly independent up to the dimension") {
  const Partition l{2, 1};
  const std::size_t dim = indexer(l, 4).dimension();
  Subspace s(dim);
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    CHECK(s.insert(to_vector(flag_tensor(random_flag_point(l, 4, seed)))));
}

TEST_CASE("annihilators kill their subspaces") {
  for (const Partition& l : {Partition{2, 1}, Partition{3, 2, 1}, Partition{2, 2}}) {
    FlagPoint f = random_flag_point(l, 4, 11);
    auto chain = annihilator_chain(f);
    REQUIRE(chain.size() == f.subspaces.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
      CHECK(chain[i].size() + f.subspaces[i].size() == 4);
      for (const auto& x : chain[i])
        for (const auto& w : f.subspaces[i]) CHECK(dot(x, w) == 0);
    }
  }
}

TEST_CASE("the group acts compatibly on flags and tensors") {
  std::mt19937_64 rng(23);
  for (const Partition& l : {Partition{2, 1}, Partition{2, 2}, Partition{3, 2, 1}}) {
    for (int trial = 0; trial < 3; ++trial) {
      FlagPoint f = random_flag_point(l, 4, 100 + trial);
      Matrix g = oracle::random_invertible(4, rng);
      CHECK(oracle::proportional(flag_tensor(act(g, f)), act(g, flag_tensor(f))));
    }
  }
}

TEST_CASE("malformed flags are rejected") {
  const Partition l{2, 1};
  FlagPoint f{3, l, {{{1, 0, 0}}, {{0, 1, 0}, {0, 0, 1}}}};
  CHECK_THROWS_AS(validate(f), PreconditionError);
  FlagPoint g{3, l, {{{1, 0, 0}, {0, 1, 0}}, {{1, 0, 0}, {0, 1, 0}}}};
  CHECK_THROWS_AS(validate(g), PreconditionError);
  FlagPoint h{3, l, {{{1, 0, 0}}, {{1, 0, 0}, {2, 0, 0}}}};
  CHECK_THROWS_AS(validate(h), PreconditionError);
}
