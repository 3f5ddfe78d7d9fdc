#include "ctab/ct_rectify.hpp"

#include <algorithm>

#include "ctab/bijection.hpp"
#include "ctab/errors.hpp"

namespace ctab {

namespace {

// Working grid for phi. Rows may carry holes (removed boxes) while the
// algorithm runs.
class PhiState {
 public:
  PhiState(const Filling& f, PhiRun& run) : rows_(f.rows()), run_(run) {}

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int length(int r) const { return static_cast<int>(rows_[r - 1].size()); }

  Entry value(int r, int c) const {
    if (r < 1 || r > num_rows() || c < 1 || c > length(r)) return 0;
    Entry e = rows_[r - 1][c - 1];
    return e == kHole ? 0 : e;
  }
  bool filled(int r, int c) const { return value(r, c) > 0; }

  void snapshot() { run_.frames.emplace_back(rows_); }
  void record(PhiEvent event) { run_.log.push_back(event); }

  // Steps 1-3: returns the rows (after reordering) that own a removed box in
  // column 2.
  std::vector<int> remove_swap_reorder(int k) {
    const int first = num_rows() - k + 1;
    for (int r = first; r <= num_rows(); ++r) {
      record({PhiEvent::Kind::remove, rows_[r - 1][0], {r, 1}, {r, 1}, 0});
      rows_[r - 1][0] = kHole;
    }
    snapshot();

    std::vector<bool> affected(rows_.size(), false);
    for (int r = first; r <= num_rows(); ++r) {
      affected[r - 1] = true;
      auto& row = rows_[r - 1];
      if (row.size() > 1) {
        record({PhiEvent::Kind::swap, row[1], {r, 2}, {r, 1}, 0});
        row[0] = row[1];
        row[1] = kHole;
      }
    }
    snapshot();

    struct Keyed {
      Filling::Row row;
      bool has_box;
    };
    std::vector<Keyed> keyed;
    for (int r = 1; r <= num_rows(); ++r) {
      auto& row = rows_[r - 1];
      if (row.size() == 1 && row[0] == kHole) {
        record({PhiEvent::Kind::drop_row, 0, {r, 1}, {r, 1}, 0});
        continue;
      }
      keyed.push_back({std::move(row), affected[r - 1]});
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const Keyed& x, const Keyed& y) { return x.row[0] < y.row[0]; });
    rows_.clear();
    std::vector<int> boxes;
    for (auto& item : keyed) {
      if (!rows_.empty() && rows_.back()[0] == item.row[0]) {
        throw InvariantError("phi: first column repeats " + std::to_string(item.row[0]));
      }
      rows_.push_back(std::move(item.row));
      if (item.has_box) boxes.push_back(num_rows());
    }
    record({PhiEvent::Kind::reorder, 0, {}, {}, 0});
    snapshot();
    return boxes;
  }

  // Inserts e into column `col`, cascading displaced entries downward.
  void insert(Entry e, int col, Cell from) {
    int start = 1;
    for (;;) {
      int target = 0;
      for (int r = start; r <= num_rows(); ++r) {
        if (length(r) < col - 1 || !filled(r, col - 1) || value(r, col - 1) < e) continue;
        if (value(r, col + 1) > e) continue;
        Entry occupant = value(r, col);
        if (occupant == 0 || occupant < e) {
          target = r;
          break;
        }
      }
      if (target == 0) {
        throw InvariantError("phi: no admissible cell in column " + std::to_string(col) +
                             " for entry " + std::to_string(e));
      }
      auto& row = rows_[target - 1];
      if (length(target) == col - 1) row.push_back(kHole);
      Entry occupant = row[col - 1];
      row[col - 1] = e;
      if (occupant == kHole) {
        record({PhiEvent::Kind::insert, e, from, {target, col}, 0});
        return;
      }
      record({PhiEvent::Kind::bump, e, from, {target, col}, occupant});
      from = {target, col};
      e = occupant;
      start = target + 1;
    }
  }

  // Step 4 onwards. `boxes` holds the rows of the removed boxes in column 2.
  void shift_columns(std::vector<int> boxes) {
    for (int col = 2; !boxes.empty(); ++col) {
      std::vector<std::pair<Entry, int>> candidates;
      for (int r : boxes) {
        if (filled(r, col + 1)) candidates.emplace_back(value(r, col + 1), r);
      }
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const auto& x, const auto& y) { return x.first > y.first; });
      std::vector<int> next;
      for (auto [e, r] : candidates) {
        rows_[r - 1][col] = kHole;
        next.push_back(r);
        insert(e, col, {r, col + 1});
        snapshot();
      }
      std::sort(next.begin(), next.end());
      boxes = std::move(next);
    }
  }

  Filling finish() {
    for (int r = 1; r <= num_rows(); ++r) {
      auto& row = rows_[r - 1];
      while (!row.empty() && row.back() == kHole) row.pop_back();
      if (std::find(row.begin(), row.end(), kHole) != row.end()) {
        throw InvariantError("phi: row " + std::to_string(r) + " keeps an inner hole");
      }
    }
    return Filling(rows_);
  }

 private:
  std::vector<Filling::Row> rows_;
  PhiRun& run_;
};

}  // namespace

std::string describe(const PhiEvent& event) {
  switch (event.kind) {
    case PhiEvent::Kind::remove:
      return "remove " + std::to_string(event.entry) + " at " + to_string(event.from);
    case PhiEvent::Kind::swap:
      return "move " + std::to_string(event.entry) + " from " + to_string(event.from) + " to " +
             to_string(event.to);
    case PhiEvent::Kind::drop_row:
      return "drop empty row " + std::to_string(event.from.row);
    case PhiEvent::Kind::reorder:
      return "reorder rows by first column";
    case PhiEvent::Kind::insert:
      return "insert " + std::to_string(event.entry) + " from " + to_string(event.from) +
             " at " + to_string(event.to);
    case PhiEvent::Kind::bump:
      return "insert " + std::to_string(event.entry) + " from " + to_string(event.from) +
             " at " + to_string(event.to) + ", bumping " + std::to_string(event.displaced);
  }
  return {};
}

PhiRun phi_traced(const CompositionTableau& u, int k, PhiOptions options) {
  if (k < 1 || k > u.num_rows()) {
    throw ArgumentError("cell count " + std::to_string(k) + " outside 1.." +
                        std::to_string(u.num_rows()));
  }
  PhiRun run{CompositionTableau(Filling()), {}, {}};
  PhiState state(u.filling(), run);
  state.shift_columns(state.remove_swap_reorder(k));
  Filling out = state.finish();
  try {
    run.result = CompositionTableau(out);
  } catch (const ValidationError& e) {
    throw InvariantError(std::string("phi produced an invalid CT: ") + e.what());
  }
  if (run.frames.empty() || run.frames.back() != out) run.frames.push_back(out);

  if (options.check_against_oracle) {
    auto expected = rho_inv(rectify_k(rho(u), k).tableau);
    if (expected != run.result) {
      throw InvariantError("phi disagrees with rho_inv(rectify_k(rho(u), k)):\n" +
                           render_filling(run.result.filling()) + "\nexpected\n" +
                           render_filling(expected.filling()));
    }
  }
  return run;
}

CompositionTableau phi(const CompositionTableau& u, int k, PhiOptions options) {
  return phi_traced(u, k, options).result;
}

ShiftReport eviction(const ReverseSSYT& t, int k) {
  const Filling& f = t.filling();
  if (k < 1 || k > f.num_rows()) {
    throw ArgumentError("cell count " + std::to_string(k) + " outside 1.." +
                        std::to_string(f.num_rows()));
  }
  auto first = f.column(1);
  std::vector<Entry> survivors(first.begin() + k, first.end());

  ShiftReport report;
  for (int c = 2; c <= f.width(); ++c) {
    auto col = f.column(c);
    std::vector<bool> matched(col.size(), false);
    for (Entry s : survivors) {
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (!matched[i] && col[i] <= s) {
          matched[i] = true;
          break;
        }
      }
    }
    survivors.clear();
    std::vector<Entry> shifted;
    for (std::size_t i = 0; i < col.size(); ++i) {
      (matched[i] ? survivors : shifted).push_back(col[i]);
    }
    if (!shifted.empty()) report.columns[c] = std::move(shifted);
  }
  return report;
}

}  // namespace ctab
