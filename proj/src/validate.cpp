#include "ctab/validate.hpp"

#include <algorithm>

#include "ctab/errors.hpp"

namespace ctab {

namespace {

std::string cell_str(int r, int c) { return to_string(Cell{r, c}); }

// Holes, empty rows and zero entries rule out every kind before the
// kind-specific checks run.
void check_slots(const Filling& f, std::vector<Violation>& out) {
  for (int r = 1; r <= f.num_rows(); ++r) {
    if (f.row_length(r) == 0) {
      out.push_back({"empty-row", {r, 1}, "row " + std::to_string(r) + " is empty"});
    }
    for (int c = 1; c <= f.row_length(r); ++c) {
      if (f.is_hole(r, c)) {
        out.push_back({"hole", {r, c}, "hole at " + cell_str(r, c)});
      } else if (f.value(r, c) < 1) {
        out.push_back({"positive", {r, c}, "entry at " + cell_str(r, c) + " is not positive"});
      }
    }
  }
}

void check_partition_shape(const Filling& f, std::vector<Violation>& out) {
  for (int r = 2; r <= f.num_rows(); ++r) {
    if (f.row_length(r) > f.row_length(r - 1)) {
      out.push_back({"shape", {r, f.row_length(r)},
                     "row " + std::to_string(r) + " is longer than the row above"});
    }
  }
}

// Young-diagram rules: `increasing` selects SSYT, otherwise RSSYT.
void check_young(const Filling& f, bool increasing, std::vector<Violation>& out) {
  check_partition_shape(f, out);
  for (int r = 1; r <= f.num_rows(); ++r) {
    for (int c = 1; c <= f.row_length(r); ++c) {
      if (!f.is_filled(r, c)) continue;
      Entry e = f.value(r, c);
      if (c > 1 && f.is_filled(r, c - 1)) {
        Entry left = f.value(r, c - 1);
        bool ok = increasing ? left <= e : left >= e;
        if (!ok) {
          out.push_back({"row", {r, c},
                         "row " + std::to_string(r) + " is not weakly " +
                             (increasing ? "increasing" : "decreasing") + " at " +
                             cell_str(r, c)});
        }
      }
      if (r > 1 && f.is_filled(r - 1, c)) {
        Entry above = f.value(r - 1, c);
        bool ok = increasing ? above < e : above > e;
        if (!ok) {
          out.push_back({"column", {r, c},
                         "column " + std::to_string(c) + " is not strictly " +
                             (increasing ? "increasing" : "decreasing") + " at " +
                             cell_str(r, c)});
        }
      }
    }
  }
}

void check_standard(const Filling& f, std::vector<Violation>& out) {
  auto n = static_cast<Entry>(f.cell_count());
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int r = 1; r <= f.num_rows(); ++r) {
    for (int c = 1; c <= f.row_length(r); ++c) {
      Entry e = f.value(r, c);
      if (e < 1) continue;
      if (e > n) {
        out.push_back({"standard", {r, c},
                       "entry " + std::to_string(e) + " exceeds cell count " + std::to_string(n)});
      } else if (seen[e]++ > 0) {
        out.push_back({"standard", {r, c}, "entry " + std::to_string(e) + " repeated"});
      }
    }
  }
}

void check_composition(const Filling& f, std::vector<Violation>& out) {
  for (int r = 1; r <= f.num_rows(); ++r) {
    if (r > 1 && f.is_filled(r, 1) && f.is_filled(r - 1, 1) &&
        !(f.value(r - 1, 1) < f.value(r, 1))) {
      out.push_back({"first-column", {r, 1},
                     "first column is not strictly increasing at " + cell_str(r, 1)});
    }
    for (int c = 2; c <= f.row_length(r); ++c) {
      if (f.is_filled(r, c) && f.is_filled(r, c - 1) && f.value(r, c - 1) < f.value(r, c)) {
        out.push_back({"row", {r, c},
                       "row " + std::to_string(r) + " is not weakly decreasing at " +
                           cell_str(r, c)});
      }
    }
  }
  // Triple rule, reported at the offending b cell.
  const int width = f.width();
  for (int r2 = 1; r2 <= f.num_rows(); ++r2) {
    for (int col = 2; col <= std::min(width, f.row_length(r2)); ++col) {
      if (!f.is_filled(r2, col)) continue;
      Entry b = f.value(r2, col);
      for (int r1 = 1; r1 < r2; ++r1) {
        Entry a = f.value(r1, col);
        Entry c = f.value(r1, col - 1);
        if (a <= b && !(b > c)) {
          out.push_back({"triple", {r2, col},
                         "a=" + std::to_string(a) + " at " + cell_str(r1, col) + " <= b=" +
                             std::to_string(b) + " at " + cell_str(r2, col) + " but b <= c=" +
                             std::to_string(c) + " at " + cell_str(r1, col - 1)});
        }
      }
    }
  }
}

}  // namespace

std::string_view to_string(TableauKind kind) {
  switch (kind) {
    case TableauKind::ssyt: return "ssyt";
    case TableauKind::rssyt: return "rssyt";
    case TableauKind::syt: return "syt";
    case TableauKind::ct: return "ct";
  }
  return "?";
}

TableauKind parse_tableau_kind(std::string_view name) {
  for (auto k : {TableauKind::ssyt, TableauKind::rssyt, TableauKind::syt, TableauKind::ct}) {
    if (to_string(k) == name) return k;
  }
  throw ArgumentError("unknown tableau kind '" + std::string(name) + "'");
}

std::vector<Violation> find_violations(TableauKind kind, const Filling& filling) {
  std::vector<Violation> out;
  check_slots(filling, out);
  switch (kind) {
    case TableauKind::ssyt:
      check_young(filling, true, out);
      break;
    case TableauKind::rssyt:
      check_young(filling, false, out);
      break;
    case TableauKind::syt:
      check_young(filling, true, out);
      check_standard(filling, out);
      break;
    case TableauKind::ct:
      check_composition(filling, out);
      break;
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Violation& x, const Violation& y) { return x.cell < y.cell; });
  return out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    out += v.rule + " " + to_string(v.cell) + ": " + v.message + "\n";
  }
  return out;
}

ValidationError::ValidationError(TableauKind kind, std::vector<Violation> violations)
    : std::runtime_error("not a valid " + std::string(to_string(kind)) + ":\n" +
                         describe(violations)),
      kind_(kind),
      violations_(std::move(violations)) {}

}  // namespace ctab
