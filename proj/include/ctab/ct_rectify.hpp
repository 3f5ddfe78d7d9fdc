#pragma once

#include <string>
#include <vector>

#include "ctab/rssyt_rectify.hpp"
#include "ctab/validate.hpp"

namespace ctab {

/// One action of the direct composition-tableau rectification.
struct PhiEvent {
  enum class Kind {
    remove,    ///< a first-column entry is deleted
    swap,      ///< a column-2 entry moves into column 1 of its row
    drop_row,  ///< a row left with no entries is deleted
    reorder,   ///< rows are sorted by their first entry
    insert,    ///< a candidate moves one column left into `to`
    bump,      ///< `entry` displaces `displaced` at `to`
  };
  Kind kind = Kind::remove;
  Entry entry = 0;
  Cell from;
  Cell to;
  Entry displaced = 0;
  bool operator==(const PhiEvent&) const = default;
};

std::string describe(const PhiEvent& event);

struct PhiOptions {
  /// Compare the result with rho_inv(rectify_k(rho(u), k)) and throw
  /// InvariantError if they differ.
  bool check_against_oracle = true;
};

struct PhiRun {
  CompositionTableau result;
  /// Working diagrams with removed boxes as holes: after removal, after the
  /// swap, after the reorder, after every candidate insertion, and the final
  /// tableau.
  std::vector<Filling> frames;
  std::vector<PhiEvent> log;
};

/// Rectifies the k largest first-column entries of a composition tableau
/// (its bottom k rows) without passing through the RSSYT.
///
/// The k entries are deleted and each affected row pulls its column-2 entry
/// into column 1; rows are re-sorted by first entry. Then, column by column,
/// the entries directly right of the removed boxes are inserted one column to
/// the left in decreasing order, each at the highest row whose left
/// neighbour is >= the entry and whose right neighbour is <= it, displacing a
/// strictly smaller occupant if there is one. A displaced entry continues
/// the search below its old row. Vacated cells become the next removed boxes.
///
/// Throws ArgumentError unless 1 <= k <= u.num_rows(); InvariantError if an
/// entry finds no admissible slot or the oracle check fails.
CompositionTableau phi(const CompositionTableau& u, int k, PhiOptions options = {});
PhiRun phi_traced(const CompositionTableau& u, int k, PhiOptions options = {});

/// Shifting entries of rectify_k(t, k) computed without sliding: the column-1
/// entries below the top k are aligned against column 2 (each, largest first,
/// beside the highest unmatched entry not exceeding it); unmatched column-2
/// entries shift, and the matched ones are aligned against column 3, and so
/// on. Lists are in decreasing order.
ShiftReport eviction(const ReverseSSYT& t, int k);

}  // namespace ctab
