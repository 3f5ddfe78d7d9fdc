#include "ctab/polynomials.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "ctab/errors.hpp"

namespace ctab {

bool GradedLexOrder::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return b < a;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw ArgumentError("a polynomial needs at least one variable");
}

void Polynomial::add_term(const Exponents& exponents, long long coefficient) {
  if (static_cast<int>(exponents.size()) != nvars_) {
    throw ArgumentError("exponent vector of length " + std::to_string(exponents.size()) +
                        " in a polynomial of " + std::to_string(nvars_) + " variables");
  }
  if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; })) {
    throw ArgumentError("negative exponent");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

long long Polynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? 0 : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw ArgumentError("variable counts differ");
  for (const auto& [exps, coef] : other.terms_) add_term(exps, coef);
  return *this;
}

Polynomial operator*(long long scalar, Polynomial p) {
  if (scalar == 0) return Polynomial(p.nvars());
  for (auto& [exps, coef] : p.terms_) coef *= scalar;
  return p;
}

std::string render_polynomial(const Polynomial& p) {
  std::string out;
  for (const auto& [exps, coef] : p.terms()) {
    out += std::to_string(coef) + ":";
    for (std::size_t i = 0; i < exps.size(); ++i) {
      out += (i == 0 ? " " : ",") + std::to_string(exps[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

long long parse_int(std::string_view token, int line, int column) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, column, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars) {
  std::vector<std::pair<Exponents, long long>> terms;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, 1, "missing ':'");
    long long coef = parse_int(std::string_view(line).substr(0, colon), line_no, 1);
    Exponents exps;
    std::string_view rest = std::string_view(line).substr(colon + 1);
    int field = 1;
    for (;;) {
      auto comma = rest.find(',');
      long long e = parse_int(rest.substr(0, comma), line_no, field + 1);
      if (e < 0) throw ParseError(line_no, field + 1, "negative exponent");
      exps.push_back(static_cast<int>(e));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
      ++field;
    }
    if (nvars == 0) nvars = static_cast<int>(exps.size());
    if (static_cast<int>(exps.size()) != nvars) {
      throw ParseError(line_no, 1, "expected " + std::to_string(nvars) + " exponents");
    }
    terms.emplace_back(std::move(exps), coef);
  }
  Polynomial p(nvars == 0 ? 1 : nvars);
  for (const auto& [exps, coef] : terms) p.add_term(exps, coef);
  return p;
}

Exponents monomial_of(const Filling& f, int nvars) {
  Exponents exps(nvars, 0);
  for (const auto& row : f.rows()) {
    for (Entry e : row) {
      if (e < 1) continue;
      if (e > nvars) {
        throw ArgumentError("entry " + std::to_string(e) + " exceeds variable count " +
                            std::to_string(nvars));
      }
      ++exps[e - 1];
    }
  }
  return exps;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& parts,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    parts.push_back(p);
    partitions_rec(remaining - p, p, parts, out);
    parts.pop_back();
  }
}

void compositions_rec(int remaining, std::vector<int>& parts, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (int p = 1; p <= remaining; ++p) {
    parts.push_back(p);
    compositions_rec(remaining - p, parts, out);
    parts.pop_back();
  }
}

// Backtracking fill in row reading order with values ascending, so results
// come out lexicographic in the reading word. `admissible` sees the grid
// with every earlier cell already filled.
using Grid = std::vector<Filling::Row>;
using Admissible = std::function<bool(const Grid&, int r, int c, Entry v)>;

void fill_rec(Grid& grid, const std::vector<int>& parts, std::size_t r, std::size_t c,
              int max_entry, const Admissible& admissible, std::vector<Filling>& out) {
  if (r == parts.size()) {
    out.emplace_back(grid);
    return;
  }
  std::size_t nr = r, nc = c + 1;
  if (nc == static_cast<std::size_t>(parts[r])) {
    ++nr;
    nc = 0;
  }
  for (Entry v = 1; v <= max_entry; ++v) {
    if (!admissible(grid, static_cast<int>(r), static_cast<int>(c), v)) continue;
    grid[r][c] = v;
    fill_rec(grid, parts, nr, nc, max_entry, admissible, out);
  }
  grid[r][c] = 0;
}

std::vector<Filling> fill_all(const std::vector<int>& parts, int max_entry,
                              const Admissible& admissible) {
  if (max_entry < 1) throw ArgumentError("max entry must be at least 1");
  std::vector<Filling> out;
  Grid grid;
  for (int p : parts) grid.emplace_back(p, 0);
  if (parts.empty()) {
    out.emplace_back();
    return out;
  }
  fill_rec(grid, parts, 0, 0, max_entry, admissible, out);
  return out;
}

// Reads a cell of a partially filled grid (0-based), 0 when absent.
Entry at(const Grid& g, int r, int c) {
  if (r < 0 || r >= static_cast<int>(g.size()) || c < 0 || c >= static_cast<int>(g[r].size())) return 0;
  return g[r][c];
}

template <TableauKind K>
std::vector<Tableau<K>> wrap(std::vector<Filling> fillings) {
  std::vector<Tableau<K>> out;
  out.reserve(fillings.size());
  for (auto& f : fillings) out.emplace_back(std::move(f));
  return out;
}

}  // namespace

std::vector<PartitionShape> partitions_of(int size) {
  std::vector<std::vector<int>> raw;
  std::vector<int> parts;
  partitions_rec(size, size, parts, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<PartitionShape> out;
  for (auto& p : raw) out.emplace_back(std::move(p));
  return out;
}

std::vector<CompositionShape> compositions_of(int size) {
  std::vector<std::vector<int>> raw;
  std::vector<int> parts;
  compositions_rec(size, parts, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<CompositionShape> out;
  for (auto& p : raw) out.emplace_back(std::move(p));
  return out;
}

std::vector<CompositionShape> rearrangements(const PartitionShape& shape) {
  std::vector<int> parts = shape.parts;
  std::sort(parts.begin(), parts.end());
  std::vector<CompositionShape> out;
  do {
    out.emplace_back(parts);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

std::vector<SSYT> enumerate_ssyt(const PartitionShape& shape, int max_entry) {
  return wrap<TableauKind::ssyt>(fill_all(shape.parts, max_entry, [](const Grid& g, int r, int c, Entry v) {
    return (c == 0 || at(g, r, c - 1) <= v) && (r == 0 || at(g, r - 1, c) < v);
  }));
}

std::vector<ReverseSSYT> enumerate_rssyt(const PartitionShape& shape, int max_entry) {
  return wrap<TableauKind::rssyt>(fill_all(shape.parts, max_entry, [](const Grid& g, int r, int c, Entry v) {
    return (c == 0 || at(g, r, c - 1) >= v) && (r == 0 || at(g, r - 1, c) > v);
  }));
}

std::vector<CompositionTableau> enumerate_ct(const CompositionShape& shape, int max_entry) {
  return wrap<TableauKind::ct>(fill_all(shape.parts, max_entry, [](const Grid& g, int r, int c, Entry v) {
    if (c == 0) return r == 0 || at(g, r - 1, 0) < v;
    if (at(g, r, c - 1) < v) return false;
    // v is b; every row above is complete.
    for (int r1 = 0; r1 < r; ++r1) {
      if (at(g, r1, c) <= v && !(v > at(g, r1, c - 1))) return false;
    }
    return true;
  }));
}

Polynomial schur_expand(const PartitionShape& lambda, int nvars) {
  Polynomial p(nvars);
  for (const auto& t : enumerate_ssyt(lambda, nvars)) p.add_term(monomial_of(t.filling(), nvars), 1);
  return p;
}

Polynomial monomial_sym_expand(const PartitionShape& alpha, int nvars) {
  Polynomial p(nvars);
  if (static_cast<int>(alpha.parts.size()) > nvars) return p;
  Exponents exps = alpha.parts;
  exps.resize(nvars, 0);
  std::sort(exps.begin(), exps.end());
  do {
    p.add_term(exps, 1);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return p;
}

namespace {

// Calls fn for every strictly increasing index sequence of length k in [0, n).
void for_each_placement(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Polynomial monomial_qsym_expand(const CompositionShape& alpha, int nvars) {
  Polynomial p(nvars);
  const int k = static_cast<int>(alpha.parts.size());
  for_each_placement(nvars, k, [&](const std::vector<int>& idx) {
    Exponents exps(nvars, 0);
    for (int i = 0; i < k; ++i) exps[idx[i]] = alpha.parts[i];
    p.add_term(exps, 1);
  });
  return p;
}

Polynomial ct_generating_sum(const PartitionShape& lambda, int nvars) {
  Polynomial p(nvars);
  for (const auto& shape : rearrangements(lambda)) {
    for (const auto& u : enumerate_ct(shape, nvars)) p.add_term(monomial_of(u.filling(), nvars), 1);
  }
  return p;
}

Polynomial rssyt_generating_sum(const PartitionShape& lambda, int nvars) {
  Polynomial p(nvars);
  for (const auto& t : enumerate_rssyt(lambda, nvars)) p.add_term(monomial_of(t.filling(), nvars), 1);
  return p;
}

bool is_quasisymmetric(const Polynomial& p) {
  const int n = p.nvars();
  for (const auto& [exps, coef] : p.terms()) {
    std::vector<int> alpha;
    for (int e : exps) {
      if (e != 0) alpha.push_back(e);
    }
    bool ok = true;
    for_each_placement(n, static_cast<int>(alpha.size()), [&](const std::vector<int>& idx) {
      if (!ok) return;
      Exponents placed(n, 0);
      for (std::size_t i = 0; i < alpha.size(); ++i) placed[idx[i]] = alpha[i];
      if (p.coefficient(placed) != coef) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_symmetric(const Polynomial& p) {
  for (const auto& [exps, coef] : p.terms()) {
    Exponents perm = exps;
    std::sort(perm.begin(), perm.end());
    do {
      if (p.coefficient(perm) != coef) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

}  // namespace ctab
