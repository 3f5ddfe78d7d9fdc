#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctab/validate.hpp"

namespace ctab {

enum class Property {
  roundtrip,
  commutativity,
  lemma41,
  lemma42,
  lemma43,
  dominance,
  schur_identities,
};

std::string_view to_string(Property p);
/// Accepts the CLI names: roundtrip, commutativity, lemma41, lemma42,
/// lemma43, dominance, schur-identities. Throws ArgumentError otherwise.
Property parse_property(std::string_view name);
std::vector<Property> all_properties();

struct Bounds {
  int max_cells = 4;
  int max_entry = 4;
  /// Inclusive k range, further capped by each instance's row count.
  int k_min = 1;
  std::optional<int> k_max;
};

struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string property;
  Bounds bounds;
  std::size_t instances = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::duration<double> wall_time{0};

  bool passed() const { return counterexamples.empty(); }
};

/// Valid tableaux with 1..max_cells cells and entries <= max_entry. Shapes by
/// cell count then lexicographically; fillings by row reading word.
std::vector<ReverseSSYT> all_rssyt(int max_cells, int max_entry);
/// Composition tableaux enumerated directly from the CT rules, not via rho.
std::vector<CompositionTableau> all_ct(int max_cells, int max_entry);

/// Checks `property` on every instance within bounds. `jobs` > 1 splits the
/// instances into contiguous chunks checked in parallel; the report does not
/// depend on `jobs`.
VerifyReport run_verify(Property property, const Bounds& bounds, int jobs = 1);

/// Deterministic text summary (no timing), listing at most `max_listed`
/// counterexamples.
std::string render_report(const VerifyReport& report, std::size_t max_listed = 10);
/// Full JSON report, wall time included.
std::string render_report_json(const VerifyReport& report);

}  // namespace ctab
