#include <doctest.h>

#include <algorithm>
#include <functional>

#include "ctab/polynomials.hpp"
#include "ctab/validate.hpp"
#include "test_util.hpp"

using namespace ctab;
using ctab::test::F;

namespace {

// Independent reading of the two RSSYT rules on a plain grid.
bool brute_force_rssyt(const std::vector<std::vector<int>>& g) {
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (g[r].empty()) return false;
    if (r > 0 && g[r].size() > g[r - 1].size()) return false;
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (g[r][c] < 1) return false;
      if (c > 0 && g[r][c - 1] < g[r][c]) return false;
      if (r > 0 && g[r - 1][c] <= g[r][c]) return false;
    }
  }
  return true;
}

// All grids of the given row lengths with entries in 1..max_entry.
void for_each_grid(const std::vector<int>& lengths, int max_entry,
                   const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  std::vector<std::vector<int>> g;
  for (int len : lengths) g.emplace_back(len, 1);
  for (;;) {
    fn(g);
    std::size_t r = g.size();
    bool carried = true;
    while (carried && r-- > 0) {
      for (std::size_t c = g[r].size(); c-- > 0;) {
        if (++g[r][c] <= max_entry) {
          carried = false;
          break;
        }
        g[r][c] = 1;
      }
    }
    if (carried) return;
  }
}

}  // namespace

TEST_CASE("composition tableau from the rectification example is valid") {
  auto u = F({{2, 2, 2, 2, 1}, {3, 1}, {4, 4, 4, 3}, {6, 5, 5, 1}, {7, 7, 3}});
  CHECK(find_violations(TableauKind::ct, u).empty());
  CHECK_NOTHROW(CompositionTableau{u});
}

TEST_CASE("the misprinted row order breaks the triple rule") {
  auto printed = F({{2, 1}, {3, 2, 2, 2, 1}, {4, 4, 4, 3}, {6, 5, 5, 1}, {7, 7, 3}});
  CHECK_FALSE(find_violations(TableauKind::ct, printed).empty());
}

TEST_CASE("triple rule violation is reported at b") {
  auto v = find_violations(TableauKind::ct, F({{2, 1}, {3, 2}}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].rule == "triple");
  CHECK(v[0].cell == Cell{2, 2});
}

TEST_CASE("empty a-slot forces b to exceed c") {
  // a = (1,2) is absent: b = 1 at (2,2) must exceed c = 3.
  auto v = find_violations(TableauKind::ct, F({{3}, {4, 1}}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].rule == "triple");
  CHECK(find_violations(TableauKind::ct, F({{3}, {4, 4}})).empty());
}

TEST_CASE("composition tableau rules collect every violation") {
  auto v = find_violations(TableauKind::ct, F({{3, 4}, {2, 1}}));
  // row 1 increases, first column decreases, b=1 <= c=3 with a=4 > b is fine
  REQUIRE(v.size() == 2);
  CHECK(v[0].rule == "row");
  CHECK(v[1].rule == "first-column");
}

TEST_CASE("RSSYT from the bijection example is valid") {
  auto t = F({{7, 7, 5, 3, 1}, {6, 5, 4, 2}, {4, 4, 3, 1}, {3, 2, 2}, {2, 1}});
  CHECK(find_violations(TableauKind::rssyt, t).empty());
  CHECK(find_violations(TableauKind::rssyt,
                        F({{9, 8, 6, 4, 2}, {7, 7, 5, 1, 1}, {5, 4, 2}, {3, 2, 1}, {1}}))
            .empty());
}

TEST_CASE("SSYT and SYT examples") {
  CHECK(find_violations(TableauKind::ssyt, F({{2, 2, 4, 5}, {4, 5, 7}, {5, 6, 8}, {7}})).empty());
  CHECK(find_violations(TableauKind::syt, F({{1, 3, 6, 10}, {2, 5, 8}, {4, 7, 11}, {9}})).empty());
  CHECK(find_violations(TableauKind::syt, F({{1, 3}, {2, 5}})).front().rule == "standard");
  CHECK(find_violations(TableauKind::syt, F({{1, 3, 6}, {2, 5}, {4}})).empty());
  CHECK(find_violations(TableauKind::syt, F({{1, 1}, {2}})).size() >= 1);
  CHECK_FALSE(find_violations(TableauKind::ssyt, F({{1}, {1, 2}})).empty());
}

TEST_CASE("holes and empty rows never validate") {
  for (auto kind : {TableauKind::ssyt, TableauKind::rssyt, TableauKind::syt, TableauKind::ct}) {
    auto v = find_violations(kind, F({{1, kHole}}));
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].rule == "hole");
    CHECK(find_violations(kind, F({{1}, {}})).front().rule == "empty-row");
    CHECK(find_violations(kind, Filling()).empty());
  }
}

TEST_CASE("validate<K> returns either a tableau or violations") {
  auto ok = validate<TableauKind::rssyt>(F({{2, 1}, {1}}));
  CHECK(std::holds_alternative<ReverseSSYT>(ok));
  auto bad = validate<TableauKind::rssyt>(F({{1, 2}}));
  REQUIRE(std::holds_alternative<std::vector<Violation>>(bad));
  CHECK(std::get<std::vector<Violation>>(bad).front().rule == "row");
  CHECK_THROWS_AS(ReverseSSYT(F({{1, 2}})), ValidationError);
}

TEST_CASE("RSSYT validator agrees with a brute-force rule check") {
  int accepted = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      for_each_grid(alpha.parts, 4, [&](const std::vector<std::vector<int>>& g) {
        bool expected = brute_force_rssyt(g);
        bool got = find_violations(TableauKind::rssyt, Filling(g)).empty();
        REQUIRE(got == expected);
        accepted += got;
      });
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("valid composition tableaux never repeat an entry in a column") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      for (const auto& u : enumerate_ct(alpha, 5)) {
        for (int c = 1; c <= u.filling().width(); ++c) {
          auto col = u.filling().column(c);
          std::sort(col.begin(), col.end());
          REQUIRE(std::adjacent_find(col.begin(), col.end()) == col.end());
        }
      }
    }
  }
}
