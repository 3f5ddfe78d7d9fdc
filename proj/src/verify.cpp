#include "ctab/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

#include <json.hpp>

#include "ctab/bijection.hpp"
#include "ctab/ct_rectify.hpp"
#include "ctab/errors.hpp"
#include "ctab/polynomials.hpp"
#include "ctab/rssyt_rectify.hpp"

namespace ctab {

namespace {

constexpr std::pair<Property, std::string_view> kPropertyNames[] = {
    {Property::roundtrip, "roundtrip"},   {Property::commutativity, "commutativity"},
    {Property::lemma41, "lemma41"},       {Property::lemma42, "lemma42"},
    {Property::lemma43, "lemma43"},       {Property::dominance, "dominance"},
    {Property::schur_identities, "schur-identities"},
};

std::string show(const Filling& f) { return render_filling(f); }

std::string show(const ShiftReport& report) {
  std::string out;
  for (const auto& [col, entries] : report.columns) {
    if (!out.empty()) out += "; ";
    out += "column " + std::to_string(col) + ":";
    for (Entry e : entries) out += " " + std::to_string(e);
  }
  return out.empty() ? "(none)" : out;
}

std::string with_k(const Filling& f, int k) { return show(f) + "\nk=" + std::to_string(k); }

// Per-instance results collected by one worker.
struct Partial {
  std::size_t instances = 0;
  std::vector<Counterexample> counterexamples;

  void fail(std::string input, std::string expected, std::string actual) {
    counterexamples.push_back({std::move(input), std::move(expected), std::move(actual)});
  }
};

template <class T>
Partial check_parallel(const std::vector<T>& items, int jobs,
                       const std::function<void(const T&, Partial&)>& check) {
  const std::size_t n = items.size();
  const std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, std::max<std::size_t>(n, 1));
  std::vector<Partial> partials(workers);
  auto run_chunk = [&](std::size_t w) {
    std::size_t begin = n * w / workers;
    std::size_t end = n * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) {
      try {
        check(items[i], partials[w]);
      } catch (const std::exception& e) {
        partials[w].fail("instance #" + std::to_string(i), "no exception", e.what());
      }
    }
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run_chunk, w);
    for (auto& t : threads) t.join();
  }
  Partial merged;
  for (auto& p : partials) {
    merged.instances += p.instances;
    std::move(p.counterexamples.begin(), p.counterexamples.end(),
              std::back_inserter(merged.counterexamples));
  }
  return merged;
}

template <class T>
std::vector<int> k_values(const T& tableau, const Bounds& bounds) {
  std::vector<int> ks;
  int hi = std::min(tableau.num_rows(), bounds.k_max.value_or(tableau.num_rows()));
  for (int k = std::max(1, bounds.k_min); k <= hi; ++k) ks.push_back(k);
  return ks;
}

Partial check_roundtrip(const Bounds& bounds, int jobs) {
  auto rssyts = all_rssyt(bounds.max_cells, bounds.max_entry);
  auto cts = all_ct(bounds.max_cells, bounds.max_entry);

  Partial result = check_parallel<ReverseSSYT>(rssyts, jobs, [](const ReverseSSYT& t, Partial& p) {
    ++p.instances;
    auto back = rho(rho_inv(t));
    if (back != t) p.fail(show(t.filling()), show(t.filling()), show(back.filling()));
  });
  Partial cts_part = check_parallel<CompositionTableau>(cts, jobs, [](const CompositionTableau& u, Partial& p) {
    ++p.instances;
    auto back = rho_inv(rho(u));
    if (back != u) p.fail(show(u.filling()), show(u.filling()), show(back.filling()));
  });
  result.instances += cts_part.instances;
  std::move(cts_part.counterexamples.begin(), cts_part.counterexamples.end(),
            std::back_inserter(result.counterexamples));

  // rho_inv maps RSSYT of shape lambda onto exactly the CTs whose shape
  // rearranges lambda.
  for (int n = 1; n <= bounds.max_cells; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      ++result.instances;
      std::set<std::vector<Filling::Row>> image;
      for (const auto& t : enumerate_rssyt(lambda, bounds.max_entry)) {
        image.insert(rho_inv(t).filling().rows());
      }
      std::set<std::vector<Filling::Row>> direct;
      for (const auto& shape : rearrangements(lambda)) {
        for (const auto& u : enumerate_ct(shape, bounds.max_entry)) direct.insert(u.filling().rows());
      }
      if (image != direct) {
        std::string parts;
        for (int part : lambda.parts) parts += std::to_string(part) + " ";
        result.fail("shape " + parts, std::to_string(direct.size()) + " composition tableaux",
                    std::to_string(image.size()) + " images under rho_inv");
      }
    }
  }
  return result;
}

Partial check_commutativity(const Bounds& bounds, int jobs) {
  auto cts = all_ct(bounds.max_cells, bounds.max_entry);
  return check_parallel<CompositionTableau>(cts, jobs, [&](const CompositionTableau& u, Partial& p) {
    auto t = rho(u);
    for (int k : k_values(u, bounds)) {
      ++p.instances;
      auto expected = rho_inv(rectify_k(t, k).tableau);
      std::string actual;
      try {
        auto got = phi(u, k, {.check_against_oracle = false});
        if (got == expected) {
          // Weight drops by exactly the k removed first-column entries.
          Weight w = weight_of(u.filling());
          for (int r = u.num_rows() - k + 1; r <= u.num_rows(); ++r) --w.counts[u.value(r, 1) - 1];
          while (!w.counts.empty() && w.counts.back() == 0) w.counts.pop_back();
          if (w == weight_of(got.filling())) continue;
          actual = show(got.filling()) + "\n(weight mismatch)";
        } else {
          actual = show(got.filling());
        }
      } catch (const std::exception& e) {
        actual = e.what();
      }
      p.fail(with_k(u.filling(), k), show(expected.filling()), actual);
    }
  });
}

Partial check_lemma41(const Bounds& bounds, int jobs) {
  auto rssyts = all_rssyt(bounds.max_cells, bounds.max_entry);
  return check_parallel<ReverseSSYT>(rssyts, jobs, [&](const ReverseSSYT& t, Partial& p) {
    for (int k : k_values(t, bounds)) {
      ++p.instances;
      auto run = rectify_k(t, k);
      // column -> (cell, entry) pairs
      std::map<int, std::vector<std::pair<int, Entry>>> shifts;
      bool repeated = false;
      for (const auto& trace : run.traces) {
        std::set<int> cols;
        for (const auto& step : trace.steps) {
          if (step.direction != SlideDirection::left) continue;
          repeated |= !cols.insert(step.from.col).second;
          shifts[step.from.col].emplace_back(trace.start_row, step.entry);
        }
      }
      std::string problem = repeated ? "a slide shifted twice out of one column" : "";
      for (auto& [col, items] : shifts) {
        std::sort(items.begin(), items.end());
        std::vector<Entry> by_value;
        for (const auto& item : items) by_value.push_back(item.second);
        std::sort(by_value.begin(), by_value.end(), std::greater<>());
        for (std::size_t n = 0; n < items.size() && problem.empty(); ++n) {
          // The n-th slide shifts the n-th largest shifting entry.
          if (items[n].first != static_cast<int>(n) + 1 || items[n].second != by_value[n] ||
              (n > 0 && by_value[n] == by_value[n - 1])) {
            problem = "column " + std::to_string(col) + " out of order";
          }
        }
      }
      if (!problem.empty()) {
        p.fail(with_k(t.filling(), k), "round n shifts the n-th largest entry",
               problem + ": " + show(shifting_entries(run.traces)));
      }
    }
  });
}

Partial check_lemma42(const Bounds& bounds, int jobs) {
  auto rssyts = all_rssyt(bounds.max_cells, bounds.max_entry);
  return check_parallel<ReverseSSYT>(rssyts, jobs, [&](const ReverseSSYT& t, Partial& p) {
    for (int k : k_values(t, bounds)) {
      ++p.instances;
      auto traced = shifting_entries(rectify_k(t, k).traces);
      auto evicted = eviction(t, k);
      // Eviction lists are decreasing and trace lists are ordered by round,
      // so list equality checks both the sets and the ordering.
      if (traced != evicted) p.fail(with_k(t.filling(), k), show(traced), show(evicted));
    }
  });
}

Partial check_lemma43(const Bounds& bounds, int jobs) {
  auto rssyts = all_rssyt(bounds.max_cells, bounds.max_entry);
  return check_parallel<ReverseSSYT>(rssyts, jobs, [&](const ReverseSSYT& t, Partial& p) {
    auto u = rho_inv(t);
    const Filling& f = u.filling();
    for (int k : k_values(t, bounds)) {
      ++p.instances;
      ShiftReport rows;
      for (int c = 2; c <= f.width(); ++c) {
        std::vector<Entry> col;
        for (int r = f.num_rows() - k + 1; r <= f.num_rows(); ++r) {
          if (f.is_filled(r, c)) col.push_back(f.value(r, c));
        }
        std::sort(col.begin(), col.end(), std::greater<>());
        if (!col.empty()) rows.columns[c] = std::move(col);
      }
      auto evicted = eviction(t, k);
      if (rows != evicted) p.fail(with_k(t.filling(), k), show(rows), show(evicted));
    }
  });
}

Partial check_dominance(const Bounds& bounds, int jobs) {
  auto rssyts = all_rssyt(bounds.max_cells, bounds.max_entry);
  return check_parallel<ReverseSSYT>(rssyts, jobs, [&](const ReverseSSYT& t, Partial& p) {
    ++p.instances;
    auto [once, trace] = rectify_once(t);
    std::vector<PathEntry> shifts;
    for (const auto& step : trace.steps) {
      if (step.direction == SlideDirection::left) shifts.push_back({step.from, step.entry});
    }
    auto path = find_dominant_path(t);
    if (path != shifts) {
      auto list = [](const std::vector<PathEntry>& v) {
        std::string s;
        for (const auto& e : v) s += to_string(e.cell) + "=" + std::to_string(e.entry) + " ";
        return s.empty() ? std::string("(empty)") : s;
      };
      p.fail(show(t.filling()), list(shifts), list(path));
    }
    // Path shape: consecutive columns from 2, weakly descending rows.
    for (std::size_t i = 0; i < shifts.size(); ++i) {
      bool ok = shifts[i].cell.col == static_cast<int>(i) + 2 &&
                (i == 0 || shifts[i].cell.row >= shifts[i - 1].cell.row);
      if (!ok) {
        p.fail(show(t.filling()), "consecutive southeast shift path", "broken at " + to_string(shifts[i].cell));
        break;
      }
    }

    for (int k : k_values(t, bounds)) {
      ++p.instances;
      auto frames = rectify_frames(t, k);
      auto run = rectify_k(t, k);
      // frames[0] is the state before the first slide; each slide adds one
      // frame per step plus one for the removed corner.
      std::size_t frame = 0;
      for (const auto& tr : run.traces) {
        const Filling& before = frames[frame];
        for (const auto& step : tr.steps) {
          if (step.direction == SlideDirection::left &&
              !is_diagonally_dominant(before, step.from.row, step.from.col)) {
            p.fail(with_k(t.filling(), k), "shifting entry is diagonally dominant",
                   std::to_string(step.entry) + " at " + to_string(step.from) + " is not");
          }
        }
        frame += tr.steps.size() + 1;
      }
    }
  });
}

Partial check_schur_identities(const Bounds& bounds) {
  Partial result;
  auto expect = [&](const std::string& what, const Polynomial& lhs, const Polynomial& rhs) {
    ++result.instances;
    if (lhs != rhs) result.fail(what, render_polynomial(lhs), render_polynomial(rhs));
  };
  auto expect_true = [&](const std::string& what, bool ok) {
    ++result.instances;
    if (!ok) result.fail(what, "true", "false");
  };

  const int n = 3;
  auto s21 = schur_expand(PartitionShape({2, 1}), n);
  auto m21 = monomial_sym_expand(PartitionShape({2, 1}), n);
  auto m111 = monomial_sym_expand(PartitionShape({1, 1, 1}), n);
  auto M21 = monomial_qsym_expand(CompositionShape({2, 1}), n);
  auto M12 = monomial_qsym_expand(CompositionShape({1, 2}), n);
  auto M111 = monomial_qsym_expand(CompositionShape({1, 1, 1}), n);
  expect("s21 = m21 + 2 m111 (3 variables)", s21, m21 + 2 * m111);
  expect("s21 = M21 + M12 + 2 M111 (3 variables)", s21, M21 + M12 + 2 * M111);
  expect("m21 = M21 + M12 (3 variables)", m21, M21 + M12);

  for (int cells = 1; cells <= bounds.max_cells; ++cells) {
    for (const auto& lambda : partitions_of(cells)) {
      std::string name = "lambda=";
      for (int part : lambda.parts) name += std::to_string(part) + ",";
      name.pop_back();
      for (int vars = 1; vars <= bounds.max_entry; ++vars) {
        std::string tag = name + " n=" + std::to_string(vars);
        auto schur = schur_expand(lambda, vars);
        expect_true("s_" + tag + " symmetric", is_symmetric(schur));
        expect_true("s_" + tag + " quasisymmetric", is_quasisymmetric(schur));
        auto rssyt_sum = rssyt_generating_sum(lambda, vars);
        expect("RSSYT sum = s_" + tag, rssyt_sum, schur);
        expect("CT sum = RSSYT sum, " + tag, ct_generating_sum(lambda, vars), rssyt_sum);
      }
    }
  }
  return result;
}

}  // namespace

std::string_view to_string(Property p) {
  for (const auto& [prop, name] : kPropertyNames) {
    if (prop == p) return name;
  }
  return "?";
}

Property parse_property(std::string_view name) {
  for (const auto& [prop, pname] : kPropertyNames) {
    if (pname == name) return prop;
  }
  throw ArgumentError("unknown property '" + std::string(name) + "'");
}

std::vector<Property> all_properties() {
  std::vector<Property> out;
  for (const auto& entry : kPropertyNames) out.push_back(entry.first);
  return out;
}

std::vector<ReverseSSYT> all_rssyt(int max_cells, int max_entry) {
  std::vector<ReverseSSYT> out;
  for (int n = 1; n <= max_cells; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      auto batch = enumerate_rssyt(lambda, max_entry);
      std::move(batch.begin(), batch.end(), std::back_inserter(out));
    }
  }
  return out;
}

std::vector<CompositionTableau> all_ct(int max_cells, int max_entry) {
  std::vector<CompositionTableau> out;
  for (int n = 1; n <= max_cells; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      auto batch = enumerate_ct(alpha, max_entry);
      std::move(batch.begin(), batch.end(), std::back_inserter(out));
    }
  }
  return out;
}

VerifyReport run_verify(Property property, const Bounds& bounds, int jobs) {
  if (bounds.max_cells < 1 || bounds.max_entry < 1) {
    throw ArgumentError("max-cells and max-entry must be at least 1");
  }
  if (bounds.k_min < 1 || (bounds.k_max && *bounds.k_max < bounds.k_min)) {
    throw ArgumentError("invalid k range");
  }
  auto start = std::chrono::steady_clock::now();
  Partial result;
  switch (property) {
    case Property::roundtrip: result = check_roundtrip(bounds, jobs); break;
    case Property::commutativity: result = check_commutativity(bounds, jobs); break;
    case Property::lemma41: result = check_lemma41(bounds, jobs); break;
    case Property::lemma42: result = check_lemma42(bounds, jobs); break;
    case Property::lemma43: result = check_lemma43(bounds, jobs); break;
    case Property::dominance: result = check_dominance(bounds, jobs); break;
    case Property::schur_identities: result = check_schur_identities(bounds); break;
  }
  VerifyReport report;
  report.property = std::string(to_string(property));
  report.bounds = bounds;
  report.instances = result.instances;
  report.counterexamples = std::move(result.counterexamples);
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

namespace {

std::string k_range_text(const Bounds& b) {
  return std::to_string(b.k_min) + ".." + (b.k_max ? std::to_string(*b.k_max) : std::string("rows"));
}

}  // namespace

std::string render_report(const VerifyReport& report, std::size_t max_listed) {
  std::string out;
  out += "property: " + report.property + "\n";
  out += "bounds: max-cells " + std::to_string(report.bounds.max_cells) + ", max-entry " +
         std::to_string(report.bounds.max_entry) + ", k " + k_range_text(report.bounds) + "\n";
  out += "instances: " + std::to_string(report.instances) + "\n";
  out += "counterexamples: " + std::to_string(report.counterexamples.size()) + "\n";
  std::size_t listed = std::min(max_listed, report.counterexamples.size());
  for (std::size_t i = 0; i < listed; ++i) {
    const auto& c = report.counterexamples[i];
    out += "--- counterexample " + std::to_string(i + 1) + "\ninput:\n" + c.input +
           "\nexpected:\n" + c.expected + "\nactual:\n" + c.actual + "\n";
  }
  if (listed < report.counterexamples.size()) {
    out += "... " + std::to_string(report.counterexamples.size() - listed) + " more\n";
  }
  return out;
}

std::string render_report_json(const VerifyReport& report) {
  nlohmann::json j;
  j["property"] = report.property;
  j["bounds"] = {{"max_cells", report.bounds.max_cells},
                 {"max_entry", report.bounds.max_entry},
                 {"k_range", k_range_text(report.bounds)}};
  j["instances"] = report.instances;
  j["wall_time_seconds"] = report.wall_time.count();
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : report.counterexamples) {
    j["counterexamples"].push_back({{"input", c.input}, {"expected", c.expected}, {"actual", c.actual}});
  }
  return j.dump(2);
}

}  // namespace ctab
