#include "ctab/rssyt_rectify.hpp"

#include <algorithm>

#include "ctab/errors.hpp"

namespace ctab {

namespace {

class Slider {
 public:
  Slider(const Filling& f, std::vector<Filling>* frames) : rows_(f.rows()), frames_(frames) {}

  Entry value(int r, int c) const {
    if (r < 1 || r > static_cast<int>(rows_.size())) return 0;
    const auto& row = rows_[r - 1];
    if (c < 1 || c > static_cast<int>(row.size())) return 0;
    return row[c - 1] == kHole ? 0 : row[c - 1];
  }

  Entry empty_cell(int r) {
    Entry removed = rows_[r - 1][0];
    rows_[r - 1][0] = kHole;
    return removed;
  }

  void snapshot() {
    if (frames_ != nullptr) frames_->emplace_back(rows_);
  }

  SlideTrace slide(int start_row, Entry removed) {
    SlideTrace trace;
    trace.start_row = start_row;
    trace.removed_entry = removed;
    int r = start_row;
    int c = 1;
    for (;;) {
      Entry below = value(r + 1, c);
      Entry right = value(r, c + 1);
      if (below == 0 && right == 0) break;
      SlideStep step;
      step.to = {r, c};
      if (below >= right) {
        step.from = {r + 1, c};
        step.entry = below;
        step.direction = SlideDirection::up;
      } else {
        step.from = {r, c + 1};
        step.entry = right;
        step.direction = SlideDirection::left;
      }
      rows_[r - 1][c - 1] = step.entry;
      rows_[step.from.row - 1][step.from.col - 1] = kHole;
      r = step.from.row;
      c = step.from.col;
      trace.steps.push_back(step);
      snapshot();
    }
    auto& row = rows_[r - 1];
    if (static_cast<int>(row.size()) != c) {
      throw InvariantError("slide ended at " + to_string(Cell{r, c}) + " which is not an outer corner");
    }
    row.pop_back();
    if (row.empty()) rows_.erase(rows_.begin() + (r - 1));
    trace.vacated = {r, c};
    snapshot();
    return trace;
  }

  Filling result() const { return Filling(rows_); }

 private:
  std::vector<Filling::Row> rows_;
  std::vector<Filling>* frames_;
};

RectifyResult run_rectify(const ReverseSSYT& t, int k, std::vector<Filling>* frames) {
  if (k < 1 || k > t.num_rows()) {
    throw ArgumentError("cell count " + std::to_string(k) + " outside 1.." +
                        std::to_string(t.num_rows()));
  }
  Slider slider(t.filling(), frames);
  std::vector<Entry> removed;
  for (int r = 1; r <= k; ++r) removed.push_back(slider.empty_cell(r));
  slider.snapshot();

  std::vector<SlideTrace> traces;
  for (int r = k; r >= 1; --r) traces.push_back(slider.slide(r, removed[r - 1]));
  try {
    return {ReverseSSYT(slider.result()), std::move(traces)};
  } catch (const ValidationError& e) {
    throw InvariantError(std::string("rectification produced an invalid RSSYT: ") + e.what());
  }
}

}  // namespace

std::pair<ReverseSSYT, SlideTrace> rectify_once(const ReverseSSYT& t) {
  if (t.empty()) throw ArgumentError("cannot rectify an empty tableau");
  auto result = run_rectify(t, 1, nullptr);
  return {std::move(result.tableau), std::move(result.traces.front())};
}

RectifyResult rectify_k(const ReverseSSYT& t, int k) { return run_rectify(t, k, nullptr); }

std::vector<Filling> rectify_frames(const ReverseSSYT& t, int k) {
  std::vector<Filling> frames;
  run_rectify(t, k, &frames);
  return frames;
}

ShiftReport shifting_entries(std::span<const SlideTrace> traces) {
  std::map<int, std::vector<std::pair<int, Entry>>> by_column;
  for (const auto& trace : traces) {
    for (const auto& step : trace.steps) {
      if (step.direction == SlideDirection::left) {
        by_column[step.from.col].emplace_back(trace.start_row, step.entry);
      }
    }
  }
  ShiftReport report;
  for (auto& [col, items] : by_column) {
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    auto& list = report.columns[col];
    for (const auto& item : items) list.push_back(item.second);
  }
  return report;
}

bool is_diagonally_dominant(const Filling& f, int row, int col) {
  if (col < 2) throw ArgumentError("diagonal dominance needs column >= 2");
  if (!f.is_filled(row, col)) {
    throw ArgumentError("no entry at " + to_string(Cell{row, col}));
  }
  return f.value(row, col) > f.value(row + 1, col - 1);
}

bool is_diagonally_dominant(const ReverseSSYT& t, int row, int col) {
  return is_diagonally_dominant(t.filling(), row, col);
}

std::vector<PathEntry> find_dominant_path(const ReverseSSYT& t) {
  const Filling& f = t.filling();
  std::vector<PathEntry> path;
  int min_row = 1;
  for (int c = 2; c <= f.width(); ++c) {
    // Columns decrease downward, so the first dominant entry is the largest.
    bool found = false;
    for (int r = min_row; r <= f.num_rows(); ++r) {
      if (f.is_filled(r, c) && is_diagonally_dominant(f, r, c)) {
        path.push_back({{r, c}, f.value(r, c)});
        min_row = r;
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return path;
}

std::vector<PathEntry> dominant_path(const ReverseSSYT& t) {
  auto path = find_dominant_path(t);
  if (t.empty()) return path;
  auto [rectified, trace] = rectify_once(t);
  std::vector<PathEntry> shifts;
  for (const auto& step : trace.steps) {
    if (step.direction == SlideDirection::left) shifts.push_back({step.from, step.entry});
  }
  if (shifts != path) {
    throw InvariantError("dominant path disagrees with the shifting entries of the slide");
  }
  return path;
}

Filling evacuate(const ReverseSSYT& t) {
  const auto n = static_cast<Entry>(t.cell_count());
  std::vector<Filling::Row> out;
  for (const auto& row : t.filling().rows()) {
    if (std::any_of(row.begin(), row.end(), [n](Entry e) { return e > n; })) {
      throw ArgumentError("evacuation needs every entry <= cell count " + std::to_string(n));
    }
    out.emplace_back(row.size(), kHole);
  }
  ReverseSSYT current = t;
  while (!current.empty()) {
    auto [next, trace] = rectify_once(current);
    out[trace.vacated.row - 1][trace.vacated.col - 1] = n - trace.removed_entry;
    current = std::move(next);
  }
  return Filling(std::move(out));
}

}  // namespace ctab
