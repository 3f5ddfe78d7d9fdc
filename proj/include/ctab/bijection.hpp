#pragma once

#include "ctab/validate.hpp"

namespace ctab {

/// Sorts every column into strictly decreasing order, top-justified.
/// Throws InvariantError if a column holds a repeated entry.
ReverseSSYT rho(const CompositionTableau& ct);

/// Inverse of rho. Column 1 is reversed; each later column is inserted in
/// decreasing order, every entry taking the highest free row whose left
/// neighbour is at least as large. The result is re-validated as a CT.
CompositionTableau rho_inv(const ReverseSSYT& t);

}  // namespace ctab
