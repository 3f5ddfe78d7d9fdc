#include <doctest.h>

#include "ctab/bijection.hpp"
#include "ctab/errors.hpp"
#include "ctab/polynomials.hpp"
#include "ctab/verify.hpp"
#include "test_util.hpp"

using namespace ctab;
using ctab::test::F;

namespace {
const Filling kU = F({{2, 2, 2, 2, 1}, {3, 1}, {4, 4, 4, 3}, {6, 5, 5, 1}, {7, 7, 3}});
const Filling kT = F({{7, 7, 5, 3, 1}, {6, 5, 4, 2}, {4, 4, 3, 1}, {3, 2, 2}, {2, 1}});
}  // namespace

TEST_CASE("rho on the worked example") {
  CHECK(rho(CompositionTableau(kU)).filling() == kT);
  CHECK(rho(CompositionTableau(F({{1}, {2}}))).filling() == F({{2}, {1}}));
  CHECK(rho(CompositionTableau(F({{2, 2}, {3, 1}}))).filling() == F({{3, 2}, {2, 1}}));
}

TEST_CASE("rho_inv on the worked example") {
  CHECK(rho_inv(ReverseSSYT(kT)).filling() == kU);
  CHECK(rho_inv(ReverseSSYT(F({{5}}))).filling() == F({{5}}));
  CHECK(rho_inv(ReverseSSYT(F({{3, 2}, {2, 1}}))).filling() == F({{2, 2}, {3, 1}}));
  CHECK(rho_inv(ReverseSSYT(Filling())).empty());
}

TEST_CASE("rho and rho_inv are mutually inverse and preserve columns") {
  for (const auto& t : all_rssyt(6, 5)) {
    auto u = rho_inv(t);
    REQUIRE(rho(u) == t);
    REQUIRE(weight_of(u.filling()) == weight_of(t.filling()));
    for (int c = 1; c <= t.filling().width(); ++c) {
      auto a = t.filling().column(c);
      auto b = u.filling().column(c);
      std::sort(b.begin(), b.end(), std::greater<>());
      REQUIRE(a == b);
    }
  }
  for (const auto& u : all_ct(6, 5)) REQUIRE(rho_inv(rho(u)) == u);
}

TEST_CASE("rho_inv is a bijection onto CTs of rearranged shape") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      std::size_t cts = 0;
      for (const auto& alpha : rearrangements(lambda)) cts += enumerate_ct(alpha, 4).size();
      CHECK(cts == enumerate_rssyt(lambda, 4).size());
    }
  }
}
