#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ctab {

using Entry = int;

/// Slot marker for a removed box. Holes and slots past a row's end both read
/// as 0 through Filling::value().
inline constexpr Entry kHole = -1;

/// Grid position, 1-based; row 1 is the top row, column 1 the leftmost.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

std::string to_string(Cell cell);

/// Ragged grid of slots: the common carrier for every tableau in the library.
class Filling {
 public:
  using Row = std::vector<Entry>;

  Filling() = default;
  /// Throws ArgumentError on an entry that is neither >= 0 nor kHole.
  explicit Filling(std::vector<Row> rows);

  const std::vector<Row>& rows() const noexcept { return rows_; }
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  bool empty() const noexcept { return rows_.empty(); }

  /// Number of slots (filled or hole) in row r.
  int row_length(int r) const;
  /// Length of the longest row.
  int width() const;
  /// Number of filled (non-hole) slots.
  std::size_t cell_count() const;
  bool has_holes() const;

  bool has_slot(int r, int c) const;
  bool is_hole(int r, int c) const;
  bool is_filled(int r, int c) const;
  /// Entry at (r, c); holes and absent slots read 0.
  Entry value(int r, int c) const;

  /// Entries of column c from top to bottom, skipping holes and short rows.
  std::vector<Entry> column(int c) const;

  bool operator==(const Filling&) const = default;

 private:
  std::vector<Row> rows_;
};

struct PartitionShape {
  std::vector<int> parts;

  PartitionShape() = default;
  /// Throws ArgumentError unless parts are positive and weakly decreasing.
  explicit PartitionShape(std::vector<int> parts);
  int size() const;
  bool operator==(const PartitionShape&) const = default;
};

struct CompositionShape {
  std::vector<int> parts;

  CompositionShape() = default;
  /// Throws ArgumentError unless every part is positive.
  explicit CompositionShape(std::vector<int> parts);
  int size() const;
  bool operator==(const CompositionShape&) const = default;
};

/// counts[v - 1] is the number of cells holding v.
struct Weight {
  std::vector<int> counts;
  bool operator==(const Weight&) const = default;
};

/// Parts of each row. Throws ShapeError on an empty row or a hole.
CompositionShape shape_of(const Filling& filling);

/// Frequencies of values 1..max; holes and zero entries are ignored.
Weight weight_of(const Filling& filling);

enum class RenderMode {
  canonical,  ///< single spaces, "." for holes
  display,    ///< columns right-aligned to the widest entry
};

/// Whitespace separated positive integers, "." for a hole, one row per line.
/// Trailing blank lines are ignored; a blank line between rows is an error.
Filling parse_filling(std::string_view text);

std::string render_filling(const Filling& filling,
                           RenderMode mode = RenderMode::canonical);

/// {"rows": [[int|null, ...], ...]} with null marking a hole.
Filling parse_filling_json(std::string_view text);
std::string render_filling_json(const Filling& filling);

/// Dispatches on the first non-space character: '{' selects JSON.
Filling read_filling(std::string_view text);

}  // namespace ctab
