#include "morse/table.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace morse {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("Table: row width mismatch");
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return format_double(*d);
  return quote(std::get<std::string>(c));
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_quotes) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        in_quotes = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Cell parse_cell(const std::string& s) {
  if (!s.empty()) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() + s.size()) return v;
  }
  return s;
}

}  // namespace

void write_csv(std::ostream& os, const Table& t, const std::vector<std::string>& comments) {
  for (auto& c : comments) os << "# " << c << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << quote(t.columns[i]);
  os << "\n";
  for (auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << "\n";
  }
}

Table read_csv(std::istream& is) {
  Table t;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto parts = split_line(line);
    if (header) {
      t.columns = parts;
      header = false;
      continue;
    }
    if (parts.size() != t.columns.size()) throw std::runtime_error("read_csv: ragged row");
    std::vector<Cell> row;
    for (auto& p : parts) row.push_back(parse_cell(p));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string to_json(const Table& t, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (auto d = std::get_if<double>(&row[i])) {
        if (std::isfinite(*d))
          obj[t.columns[i]] = *d;
        else
          obj[t.columns[i]] = nullptr;
      } else {
        obj[t.columns[i]] = std::get<std::string>(row[i]);
      }
    }
    arr.push_back(obj);
  }
  return arr.dump(indent);
}

}  // namespace morse
