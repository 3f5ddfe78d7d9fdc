#include "ctab/bijection.hpp"

#include <algorithm>
#include <functional>

#include "ctab/errors.hpp"

namespace ctab {

ReverseSSYT rho(const CompositionTableau& ct) {
  const Filling& f = ct.filling();
  std::vector<Filling::Row> rows;
  for (int c = 1; c <= f.width(); ++c) {
    auto col = f.column(c);
    std::sort(col.begin(), col.end(), std::greater<>());
    if (std::adjacent_find(col.begin(), col.end()) != col.end()) {
      throw InvariantError("column " + std::to_string(c) + " of the composition tableau repeats an entry");
    }
    if (col.size() > rows.size()) rows.resize(col.size());
    for (std::size_t i = 0; i < col.size(); ++i) rows[i].push_back(col[i]);
  }
  try {
    return ReverseSSYT(Filling(std::move(rows)));
  } catch (const ValidationError& e) {
    throw InvariantError(std::string("rho produced an invalid RSSYT: ") + e.what());
  }
}

CompositionTableau rho_inv(const ReverseSSYT& t) {
  const Filling& f = t.filling();
  const int height = f.num_rows();
  std::vector<Filling::Row> rows(height);
  for (int r = 0; r < height; ++r) rows[r].push_back(f.value(height - r, 1));

  for (int c = 2; c <= f.width(); ++c) {
    // RSSYT columns already run in decreasing order top to bottom.
    for (Entry e : f.column(c)) {
      auto slot = std::find_if(rows.begin(), rows.end(), [&](const Filling::Row& row) {
        return static_cast<int>(row.size()) == c - 1 && row.back() >= e;
      });
      if (slot == rows.end()) {
        throw InvariantError("rho_inv: no admissible row for entry " + std::to_string(e) +
                             " of column " + std::to_string(c));
      }
      slot->push_back(e);
    }
  }
  try {
    return CompositionTableau(Filling(std::move(rows)));
  } catch (const ValidationError& e) {
    throw InvariantError(std::string("rho_inv produced an invalid CT: ") + e.what());
  }
}

}  // namespace ctab
