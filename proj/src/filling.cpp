#include "ctab/filling.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "ctab/errors.hpp"

namespace ctab {

std::string to_string(Cell cell) {
  return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

Filling::Filling(std::vector<Row> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    for (Entry e : row) {
      if (e < 0 && e != kHole) {
        throw ArgumentError("negative entry " + std::to_string(e));
      }
    }
  }
}

int Filling::row_length(int r) const {
  if (r < 1 || r > num_rows()) return 0;
  return static_cast<int>(rows_[r - 1].size());
}

int Filling::width() const {
  int w = 0;
  for (const auto& row : rows_) w = std::max(w, static_cast<int>(row.size()));
  return w;
}

std::size_t Filling::cell_count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) {
    n += static_cast<std::size_t>(std::count_if(
        row.begin(), row.end(), [](Entry e) { return e != kHole; }));
  }
  return n;
}

bool Filling::has_holes() const {
  return std::any_of(rows_.begin(), rows_.end(), [](const Row& row) {
    return std::find(row.begin(), row.end(), kHole) != row.end();
  });
}

bool Filling::has_slot(int r, int c) const {
  return r >= 1 && r <= num_rows() && c >= 1 && c <= row_length(r);
}

bool Filling::is_hole(int r, int c) const {
  return has_slot(r, c) && rows_[r - 1][c - 1] == kHole;
}

bool Filling::is_filled(int r, int c) const {
  return has_slot(r, c) && rows_[r - 1][c - 1] != kHole;
}

Entry Filling::value(int r, int c) const {
  return is_filled(r, c) ? rows_[r - 1][c - 1] : 0;
}

std::vector<Entry> Filling::column(int c) const {
  std::vector<Entry> out;
  for (int r = 1; r <= num_rows(); ++r) {
    if (is_filled(r, c)) out.push_back(rows_[r - 1][c - 1]);
  }
  return out;
}

PartitionShape::PartitionShape(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw ArgumentError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw ArgumentError("partition parts must be weakly decreasing");
    }
  }
}

int PartitionShape::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

CompositionShape::CompositionShape(std::vector<int> p) : parts(std::move(p)) {
  for (int part : parts) {
    if (part < 1) throw ArgumentError("composition parts must be positive");
  }
}

int CompositionShape::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

CompositionShape shape_of(const Filling& filling) {
  std::vector<int> parts;
  for (int r = 1; r <= filling.num_rows(); ++r) {
    int len = filling.row_length(r);
    if (len == 0) {
      throw ShapeError("row " + std::to_string(r) + " is empty");
    }
    for (int c = 1; c <= len; ++c) {
      if (filling.is_hole(r, c)) {
        throw ShapeError("hole at " + to_string({r, c}));
      }
    }
    parts.push_back(len);
  }
  return CompositionShape(std::move(parts));
}

Weight weight_of(const Filling& filling) {
  Weight w;
  for (const auto& row : filling.rows()) {
    for (Entry e : row) {
      if (e < 1) continue;
      if (static_cast<std::size_t>(e) > w.counts.size()) w.counts.resize(e, 0);
      ++w.counts[e - 1];
    }
  }
  return w;
}

Filling parse_filling(std::string_view text) {
  std::vector<Filling::Row> rows;
  int blank_run = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    Filling::Row row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      std::string_view token = line.substr(i, j - i);
      int column = static_cast<int>(row.size()) + 1;
      if (token == ".") {
        row.push_back(kHole);
      } else {
        Entry value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
          throw ParseError(line_no, column, "invalid token '" + std::string(token) + "'");
        }
        if (value < 1) {
          throw ParseError(line_no, column, "entries must be positive, got '" + std::string(token) + "'");
        }
        row.push_back(value);
      }
      i = j;
    }

    if (row.empty()) {
      ++blank_run;
      continue;
    }
    if (blank_run > 0 && !rows.empty()) {
      throw ParseError(line_no - blank_run, 1, "blank line inside tableau");
    }
    blank_run = 0;
    rows.push_back(std::move(row));
  }
  return Filling(std::move(rows));
}

std::string render_filling(const Filling& filling, RenderMode mode) {
  std::size_t cell_width = 1;
  if (mode == RenderMode::display) {
    for (const auto& row : filling.rows()) {
      for (Entry e : row) {
        if (e != kHole) cell_width = std::max(cell_width, std::to_string(e).size());
      }
    }
  }
  std::string out;
  for (std::size_t r = 0; r < filling.rows().size(); ++r) {
    if (r > 0) out += '\n';
    const auto& row = filling.rows()[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ' ';
      std::string token = row[c] == kHole ? "." : std::to_string(row[c]);
      if (token.size() < cell_width) out.append(cell_width - token.size(), ' ');
      out += token;
    }
  }
  return out;
}

Filling parse_filling_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, static_cast<int>(e.byte), "malformed JSON");
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError(1, 1, "expected an object with a \"rows\" array");
  }
  std::vector<Filling::Row> rows;
  int r = 0;
  for (const auto& jrow : doc["rows"]) {
    ++r;
    if (!jrow.is_array()) throw ParseError(r, 1, "row is not an array");
    Filling::Row row;
    int c = 0;
    for (const auto& slot : jrow) {
      ++c;
      if (slot.is_null()) {
        row.push_back(kHole);
      } else if (slot.is_number_integer() && slot.get<long long>() >= 1 &&
                 slot.get<long long>() <= std::numeric_limits<Entry>::max()) {
        row.push_back(slot.get<Entry>());
      } else {
        throw ParseError(r, c, "slot must be a positive integer or null");
      }
    }
    rows.push_back(std::move(row));
  }
  return Filling(std::move(rows));
}

std::string render_filling_json(const Filling& filling) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : filling.rows()) {
    nlohmann::json jrow = nlohmann::json::array();
    for (Entry e : row) {
      if (e == kHole) {
        jrow.push_back(nullptr);
      } else {
        jrow.push_back(e);
      }
    }
    rows.push_back(std::move(jrow));
  }
  return nlohmann::json{{"rows", rows}}.dump();
}

Filling read_filling(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_filling_json(text);
  }
  return parse_filling(text);
}

}  // namespace ctab
