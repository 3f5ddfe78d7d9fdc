#pragma once

#include <map>
#include <span>
#include <vector>

#include "ctab/validate.hpp"

namespace ctab {

enum class SlideDirection { up, left };

/// One move of a jeu-de-taquin slide: `entry` moves from `from` into the
/// empty cell `to`. A left move carries an entry into the previous column.
struct SlideStep {
  Cell from;
  Cell to;
  Entry entry = 0;
  SlideDirection direction = SlideDirection::up;
  bool operator==(const SlideStep&) const = default;
};

/// Record of a single slide started at first-column row `start_row`.
struct SlideTrace {
  int start_row = 1;
  Entry removed_entry = 0;
  std::vector<SlideStep> steps;
  Cell vacated;  ///< the outer corner removed from the shape
  bool operator==(const SlideTrace&) const = default;
};

/// Shifting entries per source column (always >= 2). Lists are ordered by the
/// first-column cell whose slide moved them, cell 1 first.
struct ShiftReport {
  std::map<int, std::vector<Entry>> columns;
  bool empty() const { return columns.empty(); }
  bool operator==(const ShiftReport&) const = default;
};

struct RectifyResult {
  ReverseSSYT tableau;
  /// Slides in execution order: start rows k, k-1, ..., 1.
  std::vector<SlideTrace> traces;
};

/// Removes the entry at (1,1) and slides the larger of the lower and right
/// neighbours into the empty cell (the lower one on ties) until both read 0.
std::pair<ReverseSSYT, SlideTrace> rectify_once(const ReverseSSYT& t);

/// Rectifies the top k cells of column 1 (its k largest entries). The k
/// cells are emptied together and slid out as a skew shape, innermost
/// corner first: start rows k, k-1, ..., 1. For k = 1 this is rectify_once.
/// Throws ArgumentError unless 1 <= k <= t.num_rows().
RectifyResult rectify_k(const ReverseSSYT& t, int k);

/// Every intermediate diagram of rectify_k, holes included: the filling after
/// the k cells are emptied, after each step, and after each vacated corner
/// is removed.
std::vector<Filling> rectify_frames(const ReverseSSYT& t, int k);

ShiftReport shifting_entries(std::span<const SlideTrace> traces);

/// entry(row, col) > entry(row + 1, col - 1), with holes and absent slots
/// reading 0. Throws ArgumentError unless (row, col) is filled and col >= 2.
bool is_diagonally_dominant(const Filling& f, int row, int col);
bool is_diagonally_dominant(const ReverseSSYT& t, int row, int col);

struct PathEntry {
  Cell cell;
  Entry entry = 0;
  bool operator==(const PathEntry&) const = default;
};

/// Southeast path of diagonally dominant entries: for columns 2, 3, ... the
/// largest dominant entry at or below the previously chosen row, stopping at
/// the first column without one. No cross-check.
std::vector<PathEntry> find_dominant_path(const ReverseSSYT& t);

/// find_dominant_path, asserted equal to the left moves of rectify_once.
/// Throws InvariantError on a mismatch.
std::vector<PathEntry> dominant_path(const ReverseSSYT& t);

/// Repeatedly rectifies, writing n - e into each vacated corner of a same
/// shaped output, where e is the removed entry and n the cell count.
/// Throws ArgumentError if an entry exceeds n (the output would be negative).
Filling evacuate(const ReverseSSYT& t);

}  // namespace ctab
