#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ctab/filling.hpp"

namespace ctab {

enum class TableauKind { ssyt, rssyt, syt, ct };

std::string_view to_string(TableauKind kind);
/// Accepts "ssyt", "rssyt", "syt", "ct". Throws ArgumentError otherwise.
TableauKind parse_tableau_kind(std::string_view name);

struct Violation {
  std::string rule;  ///< e.g. "row", "column", "first-column", "triple"
  Cell cell;
  std::string message;
  bool operator==(const Violation&) const = default;
};

/// Every rule violation of `filling` read as a tableau of `kind`, in row-major
/// order of the offending cell. Empty means valid; the empty filling is valid
/// for every kind.
///
/// Composition tableau rules: rows weakly decrease, the first column strictly
/// increases downward, and for a = (r1, c+1), c = (r1, c), b = (r2, c+1) with
/// r2 > r1 and b filled, a <= b implies b > c. Absent slots read 0, so an
/// empty `a` forces every filled b below it to exceed its own left-column
/// partner in row r1.
std::vector<Violation> find_violations(TableauKind kind, const Filling& filling);

std::string describe(const std::vector<Violation>& violations);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(TableauKind kind, std::vector<Violation> violations);
  TableauKind kind() const noexcept { return kind_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  TableauKind kind_;
  std::vector<Violation> violations_;
};

/// A filling known to satisfy the rules of kind K.
template <TableauKind K>
class Tableau {
 public:
  static constexpr TableauKind kind = K;

  /// Throws ValidationError listing every violation.
  explicit Tableau(Filling filling) : filling_(std::move(filling)) {
    auto violations = find_violations(K, filling_);
    if (!violations.empty()) throw ValidationError(K, std::move(violations));
  }

  const Filling& filling() const noexcept { return filling_; }
  int num_rows() const noexcept { return filling_.num_rows(); }
  Entry value(int r, int c) const { return filling_.value(r, c); }
  std::size_t cell_count() const { return filling_.cell_count(); }
  bool empty() const noexcept { return filling_.empty(); }

  bool operator==(const Tableau&) const = default;

 private:
  Filling filling_;
};

using SSYT = Tableau<TableauKind::ssyt>;
using ReverseSSYT = Tableau<TableauKind::rssyt>;
using StandardYT = Tableau<TableauKind::syt>;
using CompositionTableau = Tableau<TableauKind::ct>;

template <TableauKind K>
std::variant<Tableau<K>, std::vector<Violation>> validate(Filling filling) {
  auto violations = find_violations(K, filling);
  if (!violations.empty()) return violations;
  return Tableau<K>(std::move(filling));
}

}  // namespace ctab
