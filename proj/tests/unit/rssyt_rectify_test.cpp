#include <doctest.h>

#include "ctab/errors.hpp"
#include "ctab/polynomials.hpp"
#include "ctab/rssyt_rectify.hpp"
#include "ctab/verify.hpp"
#include "test_util.hpp"

using namespace ctab;
using ctab::test::F;

namespace {
const Filling kT = F({{7, 7, 5, 3, 1}, {6, 5, 4, 2}, {4, 4, 3, 1}, {3, 2, 2}, {2, 1}});
constexpr auto kUp = SlideDirection::up;
constexpr auto kLeft = SlideDirection::left;
}  // namespace

TEST_CASE("rectify_once on the worked example") {
  auto [out, trace] = rectify_once(ReverseSSYT(kT));
  CHECK(out.filling() == F({{7, 5, 5, 3, 1}, {6, 4, 4, 2}, {4, 3, 2, 1}, {3, 2}, {2, 1}}));
  CHECK(trace.removed_entry == 7);
  CHECK(trace.vacated == Cell{4, 3});
  std::vector<SlideStep> expected{
      {{1, 2}, {1, 1}, 7, kLeft}, {{2, 2}, {1, 2}, 5, kUp}, {{3, 2}, {2, 2}, 4, kUp},
      {{3, 3}, {3, 2}, 3, kLeft}, {{4, 3}, {3, 3}, 2, kUp},
  };
  CHECK(trace.steps == expected);
  std::vector<SlideTrace> traces{trace};
  CHECK(shifting_entries(traces).columns == std::map<int, std::vector<Entry>>{{2, {7}}, {3, {3}}});
}

TEST_CASE("rectify_once small cases") {
  auto [empty, t1] = rectify_once(ReverseSSYT(F({{1}})));
  CHECK(empty.empty());
  CHECK(t1.removed_entry == 1);
  CHECK(t1.steps.empty());
  CHECK(shifting_entries(std::vector<SlideTrace>{t1}).empty());

  auto [out, trace] = rectify_once(ReverseSSYT(F({{3, 2}, {2, 1}})));
  CHECK(out.filling() == F({{2, 2}, {1}}));
  CHECK(trace.removed_entry == 3);
  std::vector<SlideStep> expected{{{2, 1}, {1, 1}, 2, kUp}, {{2, 2}, {2, 1}, 1, kLeft}};
  CHECK(trace.steps == expected);

  // tie: equal neighbours, the lower one slides
  auto [tie, tie_trace] = rectify_once(ReverseSSYT(F({{3, 2}, {2}})));
  CHECK(tie.filling() == F({{2, 2}}));
  CHECK(tie_trace.steps.front().direction == kUp);

  CHECK_THROWS_AS(rectify_once(ReverseSSYT(Filling())), ArgumentError);
}

TEST_CASE("rectify_k") {
  auto column = rectify_k(ReverseSSYT(F({{3}, {2}, {1}})), 3);
  CHECK(column.tableau.empty());
  CHECK(column.traces.size() == 3);

  auto once = rectify_once(ReverseSSYT(kT));
  auto k1 = rectify_k(ReverseSSYT(kT), 1);
  CHECK(k1.tableau == once.first);
  CHECK(k1.traces.front() == once.second);

  auto two = rectify_k(ReverseSSYT(F({{3, 2}, {2, 1}})), 2);
  CHECK(two.tableau.filling() == F({{2}, {1}}));
  // slides run from cell 2 up to cell 1
  REQUIRE(two.traces.size() == 2);
  CHECK(two.traces[0].start_row == 2);
  CHECK(two.traces[0].removed_entry == 2);
  CHECK(two.traces[1].start_row == 1);
  CHECK(two.traces[1].removed_entry == 3);
  CHECK(shifting_entries(two.traces).columns == std::map<int, std::vector<Entry>>{{2, {2, 1}}});

  CHECK_THROWS_AS(rectify_k(ReverseSSYT(kT), 0), ArgumentError);
  CHECK_THROWS_AS(rectify_k(ReverseSSYT(kT), 6), ArgumentError);
}

TEST_CASE("rectify_k empties the top k cells as a skew shape") {
  // Successive top-left removals would discard the 2 that slid into (1,1);
  // the skew slide discards the original column-1 entries 2 and 1.
  auto run = rectify_k(ReverseSSYT(F({{2, 2}, {1}})), 2);
  CHECK(run.tableau.filling() == F({{2}}));
}

TEST_CASE("rectify_frames replays the slide") {
  auto frames = rectify_frames(ReverseSSYT(F({{3, 2}, {2, 1}})), 1);
  REQUIRE(frames.size() == 4);
  CHECK(frames[0] == F({{kHole, 2}, {2, 1}}));
  CHECK(frames[1] == F({{2, 2}, {kHole, 1}}));
  CHECK(frames[2] == F({{2, 2}, {1, kHole}}));
  CHECK(frames[3] == F({{2, 2}, {1}}));
}

TEST_CASE("rectification invariants over small tableaux") {
  for (const auto& t : all_rssyt(6, 5)) {
    for (int k = 1; k <= t.num_rows(); ++k) {
      auto run = rectify_k(t, k);
      // multiset conservation
      auto before = weight_of(t.filling()).counts;
      for (const auto& tr : run.traces) --before[tr.removed_entry - 1];
      while (!before.empty() && before.back() == 0) before.pop_back();
      REQUIRE(before == weight_of(run.tableau.filling()).counts);
      // one corner per slide, partition shape kept (ReverseSSYT validated it)
      REQUIRE(run.tableau.cell_count() + k == t.cell_count());
      for (const auto& tr : run.traces) {
        // steps form a connected path starting at the emptied cell
        Cell hole{tr.start_row, 1};
        for (const auto& step : tr.steps) {
          REQUIRE(step.to == hole);
          bool adjacent = step.direction == kUp ? step.from == Cell{hole.row + 1, hole.col}
                                                : step.from == Cell{hole.row, hole.col + 1};
          REQUIRE(adjacent);
          hole = step.from;
        }
        REQUIRE(tr.vacated == hole);
      }
    }
  }
}

TEST_CASE("diagonal dominance") {
  ReverseSSYT t(kT);
  CHECK(is_diagonally_dominant(t, 1, 2));
  CHECK_FALSE(is_diagonally_dominant(t, 1, 3));
  CHECK(is_diagonally_dominant(t, 5, 2));
  CHECK_THROWS_AS(is_diagonally_dominant(t, 1, 1), ArgumentError);
  CHECK_THROWS_AS(is_diagonally_dominant(t, 5, 3), ArgumentError);
}

TEST_CASE("dominant_path") {
  std::vector<PathEntry> expected{{{1, 2}, 7}, {{3, 3}, 3}};
  CHECK(dominant_path(ReverseSSYT(kT)) == expected);
  CHECK(dominant_path(ReverseSSYT(F({{2, 1}}))) == std::vector<PathEntry>{{{1, 2}, 1}});
  CHECK(dominant_path(ReverseSSYT(F({{2}, {1}}))).empty());
  CHECK(dominant_path(ReverseSSYT(Filling())).empty());
}

TEST_CASE("evacuation") {
  ReverseSSYT example(F({{5, 5, 4}, {3, 2}, {1}}));
  auto out = evacuate(example);
  CHECK(out == F({{5, 3, 1}, {4, 1}, {2}}));
  CHECK(find_violations(TableauKind::rssyt, out).empty());

  CHECK(evacuate(ReverseSSYT(F({{1}}))) == F({{0}}));
  CHECK(evacuate(ReverseSSYT(F({{2}, {1}}))) == F({{1}, {0}}));
  CHECK_THROWS_AS(evacuate(ReverseSSYT(F({{5}}))), ArgumentError);
}

TEST_CASE("evacuation keeps the shape") {
  for (const auto& t : all_rssyt(5, 5)) {
    if (static_cast<std::size_t>(t.filling().column(1).front()) > t.cell_count()) continue;
    auto out = evacuate(t);
    REQUIRE(shape_of(out) == shape_of(t.filling()));
    REQUIRE_FALSE(out.has_holes());
  }
}
