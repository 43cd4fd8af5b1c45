#include <doctest.h>

#include <set>

#include "classical.hpp"
#include "schur/combinatorics.hpp"
#include "schur/error.hpp"

using namespace schur;

namespace {

using namespace oracle;

}  // namespace

TEST_CASE("partitions reject increasing parts and drop zeros") {
  CHECK(Partition({3, 1, 0}).parts() == std::vector<int>{3, 1});
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, -1}));
  CHECK(Partition{2, 2}.size() == 4);
  CHECK(Partition{3, 1}.contains(Partition{2, 1}));
  CHECK_FALSE(Partition{3, 1}.contains(Partition{1, 1, 1}));
}

TEST_CASE("conjugate on hand computed cases") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{5, 4, 2, 2}) == Partition{4, 4, 2, 2, 1});
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
  CHECK(conjugate(Partition{}) == Partition{});
  for (const auto& p : all_partitions_up_to(8)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("partition counts") {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int s = 0; s <= 8; ++s) CHECK(partitions_of(s).size() == p[s]);
  CHECK(subpartitions(Partition{2, 1}).size() == 5);
}

TEST_CASE("semistandard enumeration matches brute force") {
  CHECK(enumerate_sstd(SkewShape(Partition{2, 1}), 3).size() == 8);
  CHECK(enumerate_sstd(SkewShape(Partition{2, 2}), 4).size() == 20);
  CHECK(enumerate_sstd(SkewShape(Partition{1, 1}), 1).empty());
  for (const auto& outer : all_partitions_up_to(5))
    for (const auto& inner : subpartitions(outer))
      for (int n = 1; n <= 3; ++n) {
        SkewShape s(outer, inner);
        auto ts = enumerate_sstd(s, n);
        CHECK(ts.size() == oracle::count_sstd(s, n));
        for (std::size_t i = 0; i < ts.size(); ++i) {
          CHECK(ts[i].is_semistandard());
          if (i > 0) CHECK(ts[i - 1].column_word() < ts[i].column_word());
        }
      }
}

TEST_CASE("standard tableaux counted by the hook length formula") {
  for (const auto& l : all_partitions_up_to(7)) {
    auto ts = enumerate_std(l);
    CHECK(Integer(ts.size()) == oracle::factorial(l.size()) / oracle::hook_product(l));
    for (const auto& t : ts) CHECK(t.is_standard());
  }
}

TEST_CASE("reading words and the Yamanouchi test") {
  SkewShape shape(Partition{3, 2, 1}, Partition{2});
  Word w1 = word_of(Tableau(shape, {{1}, {1, 2}, {3}}));
  Word w2 = word_of(Tableau(shape, {{1}, {1, 3}, {2}}));
  CHECK(w1 == Word{3, 1, 2, 1});
  CHECK(is_yamanouchi(w1));
  CHECK(w2 == Word{2, 1, 3, 1});
  CHECK_FALSE(is_yamanouchi(w2));
  CHECK(is_yamanouchi(Word{}));
  CHECK_FALSE(is_yamanouchi(Word{1, 2}));
  CHECK(is_yamanouchi(Word{2, 1}));
}

TEST_CASE("alpha and beta are inverse bijections") {
  Tableau t(SkewShape(Partition{3, 1}), {{1, 2, 4}, {3}});
  CHECK(alpha(t) == Word{1, 2, 1, 1});
  CHECK(beta(alpha(t)) == t);
  for (const auto& l : all_partitions_up_to(6)) {
    std::set<Word> images;
    for (const auto& s : enumerate_std(l)) {
      Word a = alpha(s);
      CHECK(lattice_suffixes(a));
      CHECK(beta(a) == s);
      images.insert(a);
    }
    CHECK(images == yamanouchi_words(l));
  }
  CHECK_THROWS_AS(beta(Word{1, 2}), PreconditionError);
}

TEST_CASE("Littlewood-Richardson tableaux on small cases") {
  auto ts = lr_tableaux(SkewShape(Partition{3, 2}, Partition{2, 1}), Partition{1, 1});
  REQUIRE(ts.size() == 1);
  CHECK(ts.front().rows() == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == 1);
  CHECK(lr_coefficient(Partition{2}, Partition{2}, Partition{2, 1, 1}) == 0);
  for (const auto& t : lr_tableaux(SkewShape(Partition{3, 2, 1}, Partition{2, 1}), Partition{2, 1})) {
    CHECK(is_lr_tableau(t));
    CHECK(is_yamanouchi(word_of(t)));
    CHECK(t.content() == std::vector<int>{2, 1});
  }
}

TEST_CASE("LR symmetry and dimension identities") {
  for (const auto& l : all_partitions_up_to(6))
    for (const auto& m : all_partitions_up_to(6 - l.size())) {
      const int d = l.size() + m.size();
      for (const auto& nu : partitions_of(d)) {
        CHECK(lr_coefficient(l, m, nu) == lr_coefficient(m, l, nu));
      }
      for (int n = 1; n <= 4; ++n) {
        std::uint64_t sum = 0;
        for (const auto& nu : partitions_of(d))
          sum += lr_coefficient(l, m, nu) * schur_dimension(nu, n);
        CHECK(sum == schur_dimension(l, n) * schur_dimension(m, n));
      }
    }
}

TEST_CASE("skew dimensions decompose with LR multiplicities") {
  for (const auto& nu : all_partitions_up_to(6))
    for (const auto& l : subpartitions(nu))
      for (int n = 1; n <= 4; ++n) {
        SkewShape s(nu, l);
        std::uint64_t sum = 0;
        for (const auto& m : partitions_of(nu.size() - l.size()))
          sum += lr_coefficient(l, m, nu) * schur_dimension(m, n);
        CHECK(sum == oracle::count_sstd(s, n));
        CHECK(skew_dimension(s, n) == sum);
      }
}

TEST_CASE("tprime and sigma on the worked tableaux") {
  Tableau t(SkewShape(Partition{3, 2}, Partition{1}), {{1, 1}, {1, 2}});
  CHECK(tprime(t).rows() == std::vector<std::vector<int>>{{2, 1}, {3, 1}});
  Tableau s(SkewShape(Partition{3, 2}, Partition{2, 1}), {{1}, {2}});
  CHECK(sigma_map(s) == std::map<Cell, Cell>{{{1, 3}, {1, 1}}, {{2, 2}, {2, 1}}});
}

TEST_CASE("sigma maps the skew cells bijectively onto mu") {
  for (const auto& nu : all_partitions_up_to(6))
    for (const auto& l : subpartitions(nu))
      for (const auto& m : partitions_of(nu.size() - l.size()))
        for (const auto& t : lr_tableaux(SkewShape(nu, l), m)) {
          auto sig = sigma_map(t);
          std::set<Cell> keys, values;
          for (const auto& [a, b] : sig) {
            keys.insert(a);
            values.insert(b);
          }
          auto skew = SkewShape(nu, l).cells();
          auto straight = SkewShape(m).cells();
          CHECK(keys == std::set<Cell>(skew.begin(), skew.end()));
          CHECK(values == std::set<Cell>(straight.begin(), straight.end()));
        }
}

TEST_CASE("column structure and mu_e") {
  auto cs = column_structure(Partition{5, 4, 2, 2});
  CHECK(cs.heights == std::vector<int>{1, 2, 4});
  CHECK(cs.multiplicities == std::vector<int>{1, 2, 2});
  for (const auto& p : all_partitions_up_to(7)) CHECK(from_column_structure(column_structure(p)) == p);
  CHECK(mu_e(rectangle(4, 3), 1) == rectangle(3, 3));
  CHECK(mu_e(Partition{5, 4, 2, 2}, 2) == Partition{3, 2});
  CHECK(mu_e(Partition{3, 2, 1}, 1) == Partition{2, 1});
  CHECK_THROWS_AS(mu_e(Partition{5, 4, 2, 2}, 3), PreconditionError);
}

TEST_CASE("Schur module dimensions") {
  CHECK(schur_dimension(Partition{2, 2}, 4) == 20);
  CHECK(schur_dimension(Partition{1, 1, 1}, 2) == 0);
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(schur_dimension(Partition(std::vector<int>(k, 1)), n) == binomial(n, k));
  for (const auto& l : all_partitions_up_to(6))
    for (int n = 1; n <= 5; ++n) {
      CHECK(Integer(static_cast<unsigned long>(schur_dimension(l, n))) == oracle::hook_content_dim(l, n));
      CHECK(schur_dimension(l, n) == oracle::count_sstd(SkewShape(l), n));
    }
}
