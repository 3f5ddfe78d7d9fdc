#include <doctest.h>

#include <set>

#include "ctab/errors.hpp"
#include "ctab/polynomials.hpp"
#include "test_util.hpp"

using namespace ctab;
using ctab::test::F;

namespace {

Polynomial poly(int n, std::initializer_list<std::pair<Exponents, long long>> terms) {
  Polynomial p(n);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

// All fillings of the shape with entries <= n, filtered by the SSYT rules.
std::size_t brute_force_ssyt_count(const std::vector<int>& shape, int n) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r) {
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  }
  std::vector<int> vals(cells.size(), 1);
  std::size_t count = 0;
  for (;;) {
    std::vector<std::vector<int>> g;
    for (int len : shape) g.emplace_back(len, 0);
    for (std::size_t i = 0; i < cells.size(); ++i) g[cells[i].first][cells[i].second] = vals[i];
    if (find_violations(TableauKind::ssyt, Filling(g)).empty()) ++count;
    std::size_t i = 0;
    while (i < vals.size() && ++vals[i] > n) vals[i++] = 1;
    if (i == vals.size()) return count;
  }
}

}  // namespace

TEST_CASE("enumerate_ssyt") {
  auto s21 = enumerate_ssyt(PartitionShape({2, 1}), 3);
  CHECK(s21.size() == 8);
  std::set<std::vector<Filling::Row>> got;
  for (const auto& t : s21) got.insert(t.filling().rows());
  std::set<std::vector<Filling::Row>> listed{
      {{1, 1}, {2}}, {{1, 1}, {3}}, {{2, 2}, {3}}, {{1, 2}, {2}},
      {{1, 3}, {3}}, {{2, 3}, {3}}, {{1, 2}, {3}}, {{1, 3}, {2}},
  };
  CHECK(got == listed);
  // lexicographic by reading word
  CHECK(s21.front().filling() == F({{1, 1}, {2}}));
  CHECK(s21.back().filling() == F({{2, 3}, {3}}));

  CHECK(enumerate_ssyt(PartitionShape({1}), 1).size() == 1);
  auto s22 = enumerate_ssyt(PartitionShape({2, 2}), 2);
  REQUIRE(s22.size() == 1);
  CHECK(s22.front().filling() == F({{1, 1}, {2, 2}}));
}

TEST_CASE("enumerate_ssyt matches brute force") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      CHECK(enumerate_ssyt(lambda, 3).size() == brute_force_ssyt_count(lambda.parts, 3));
    }
  }
}

TEST_CASE("enumerate_rssyt and enumerate_ct") {
  CHECK(enumerate_rssyt(PartitionShape({2, 1}), 3).size() == 8);
  std::size_t cts = enumerate_ct(CompositionShape({2, 1}), 3).size() +
                    enumerate_ct(CompositionShape({1, 2}), 3).size();
  CHECK(cts == 8);
  CHECK(enumerate_ct(CompositionShape({1}), 1).size() == 1);
  for (const auto& u : enumerate_ct(CompositionShape({1, 3, 2}), 4)) {
    CHECK(find_violations(TableauKind::ct, u.filling()).empty());
  }
}

TEST_CASE("partitions and compositions") {
  CHECK(partitions_of(5).size() == 7);
  CHECK(compositions_of(5).size() == 16);
  CHECK(partitions_of(3).front().parts == std::vector<int>{1, 1, 1});
  CHECK(rearrangements(PartitionShape({2, 1, 1})).size() == 3);
}

TEST_CASE("schur_expand") {
  auto s21 = schur_expand(PartitionShape({2, 1}), 3);
  auto expected = poly(3, {{{2, 1, 0}, 1}, {{2, 0, 1}, 1}, {{0, 2, 1}, 1}, {{1, 2, 0}, 1},
                           {{1, 0, 2}, 1}, {{0, 1, 2}, 1}, {{1, 1, 1}, 2}});
  CHECK(s21 == expected);
  CHECK(schur_expand(PartitionShape({1}), 2) == poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(schur_expand(PartitionShape({2, 1}), 2) == poly(2, {{{2, 1}, 1}, {{1, 2}, 1}}));
}

TEST_CASE("monomial symmetric and quasisymmetric expansions") {
  auto m21 = monomial_sym_expand(PartitionShape({2, 1}), 3);
  CHECK(m21.terms().size() == 6);
  CHECK(monomial_sym_expand(PartitionShape({1}), 1) == poly(1, {{{1}, 1}}));
  CHECK(monomial_sym_expand(PartitionShape({1, 1}), 3) ==
        poly(3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}}));
  CHECK(monomial_sym_expand(PartitionShape({1, 1, 1}), 2).is_zero());

  CHECK(monomial_qsym_expand(CompositionShape({2, 1}), 3) ==
        poly(3, {{{2, 1, 0}, 1}, {{2, 0, 1}, 1}, {{0, 2, 1}, 1}}));
  CHECK(monomial_qsym_expand(CompositionShape({3}), 2) == poly(2, {{{3, 0}, 1}, {{0, 3}, 1}}));
  CHECK(monomial_qsym_expand(CompositionShape({1, 2}), 2) == poly(2, {{{1, 2}, 1}}));
}

TEST_CASE("expansion identities in three variables") {
  const int n = 3;
  auto s21 = schur_expand(PartitionShape({2, 1}), n);
  auto m21 = monomial_sym_expand(PartitionShape({2, 1}), n);
  auto m111 = monomial_sym_expand(PartitionShape({1, 1, 1}), n);
  auto M21 = monomial_qsym_expand(CompositionShape({2, 1}), n);
  auto M12 = monomial_qsym_expand(CompositionShape({1, 2}), n);
  auto M111 = monomial_qsym_expand(CompositionShape({1, 1, 1}), n);
  CHECK(s21 == m21 + 2 * m111);
  CHECK(s21 == M21 + M12 + 2 * M111);
  CHECK(m21 == M21 + M12);
}

TEST_CASE("quasisymmetry and symmetry predicates") {
  auto f = poly(3, {{{2, 1, 0}, 1}, {{2, 0, 1}, 1}, {{0, 2, 1}, 1}});
  CHECK(is_quasisymmetric(f));
  CHECK_FALSE(is_symmetric(f));
  auto g = poly(3, {{{2, 1, 3}, 1}});
  CHECK(is_quasisymmetric(g));
  CHECK(is_quasisymmetric(g + poly(3, {{{1, 3, 2}, 1}})));
  CHECK_FALSE(is_quasisymmetric(poly(3, {{{1, 2, 0}, 1}, {{1, 0, 2}, 1}})));
  CHECK_FALSE(is_quasisymmetric(poly(2, {{{2, 0}, 1}})));
  CHECK(is_quasisymmetric(Polynomial(2)));
  CHECK(is_symmetric(monomial_sym_expand(PartitionShape({2, 1}), 4)));
}

TEST_CASE("Schur polynomials are symmetric and equal the CT and RSSYT sums") {
  for (int cells = 1; cells <= 6; ++cells) {
    for (const auto& lambda : partitions_of(cells)) {
      for (int n = 1; n <= 4; ++n) {
        auto s = schur_expand(lambda, n);
        REQUIRE(is_symmetric(s));
        REQUIRE(is_quasisymmetric(s));
        REQUIRE(rssyt_generating_sum(lambda, n) == s);
        REQUIRE(ct_generating_sum(lambda, n) == s);
      }
    }
  }
}

TEST_CASE("polynomial text format") {
  auto s21 = schur_expand(PartitionShape({2, 1}), 3);
  std::string text = render_polynomial(s21);
  CHECK(text ==
        "1: 2,1,0\n1: 2,0,1\n1: 1,2,0\n2: 1,1,1\n1: 1,0,2\n1: 0,2,1\n1: 0,1,2\n");
  CHECK(parse_polynomial(text) == s21);
  CHECK(parse_polynomial("1: 1,0\n-1: 1,0\n") .is_zero());
  CHECK_THROWS_AS(parse_polynomial("1 1,0"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1: 1,0\n1: 1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1: 1,-1"), ParseError);
}

TEST_CASE("polynomial arithmetic rejects mismatched variables") {
  Polynomial p(2);
  CHECK_THROWS_AS(p.add_term({1}, 1), ArgumentError);
  CHECK_THROWS_AS(p += Polynomial(3), ArgumentError);
  CHECK_THROWS_AS(monomial_of(F({{3}}), 2), ArgumentError);
  CHECK((0 * schur_expand(PartitionShape({1}), 2)).is_zero());
}
