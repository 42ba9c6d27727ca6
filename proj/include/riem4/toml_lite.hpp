#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

// A small TOML-subset reader returning nlohmann::json, enough for scenario
// files: comments, [table] / [a.b] headers, [[array-of-tables]] headers,
// and key = value lines with strings, numbers, booleans, or flat arrays.
// Anything outside this subset is rejected with a located error.

namespace riem4::toml_lite {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_key(const std::string& s, int line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == '.') {
      if (cur.empty()) throw ParseError("line " + std::to_string(line) + ": empty key segment");
      parts.push_back(detail::trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  cur = detail::trim(cur);
  if (cur.empty()) throw ParseError("line " + std::to_string(line) + ": empty key segment");
  parts.push_back(cur);
  return parts;
}

inline nlohmann::json parse_scalar(const std::string& raw, int line) {
  std::string v = trim(raw);
  if (v.empty()) throw ParseError("line " + std::to_string(line) + ": missing value");
  if (v.front() == '"') {
    if (v.size() < 2 || v.back() != '"')
      throw ParseError("line " + std::to_string(line) + ": unterminated string");
    return v.substr(1, v.size() - 2);
  }
  if (v == "true") return true;
  if (v == "false") return false;
  try {
    size_t used = 0;
    long long i = std::stoll(v, &used);
    if (used == v.size()) return i;
  } catch (const std::exception&) {
  }
  try {
    size_t used = 0;
    double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw ParseError("line " + std::to_string(line) + ": unsupported value '" + v + "'");
}

inline nlohmann::json parse_value(const std::string& raw, int line) {
  std::string v = trim(raw);
  if (!v.empty() && v.front() == '[') {
    if (v.back() != ']') throw ParseError("line " + std::to_string(line) + ": unterminated array");
    nlohmann::json arr = nlohmann::json::array();
    std::string body = v.substr(1, v.size() - 2);
    std::string cur;
    bool in_str = false;
    for (char c : body) {
      if (c == '"') in_str = !in_str;
      if (c == ',' && !in_str) {
        if (!trim(cur).empty()) arr.push_back(parse_scalar(cur, line));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!trim(cur).empty()) arr.push_back(parse_scalar(cur, line));
    return arr;
  }
  return parse_scalar(v, line);
}

inline nlohmann::json* descend(nlohmann::json& root, const std::vector<std::string>& path) {
  nlohmann::json* t = &root;
  for (const auto& k : path) {
    if (t->is_array()) t = &t->back();
    t = &(*t)[k];
  }
  if (t->is_array()) t = &t->back();
  return t;
}

}  // namespace detail

inline nlohmann::json parse(const std::string& text) {
  nlohmann::json root = nlohmann::json::object();
  std::vector<std::string> table_path;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    // strip comments outside strings
    bool in_str = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_str = !in_str;
      if (line[i] == '#' && !in_str) {
        line = line.substr(0, i);
        break;
      }
    }
    line = detail::trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      bool array_of_tables = line.size() > 1 && line[1] == '[';
      size_t close = line.find(array_of_tables ? "]]" : "]");
      if (close == std::string::npos)
        throw ParseError("line " + std::to_string(line_no) + ": malformed table header");
      std::string inner = line.substr(array_of_tables ? 2 : 1, close - (array_of_tables ? 2 : 1));
      table_path = detail::split_key(inner, line_no);
      if (array_of_tables) {
        nlohmann::json* parent = &root;
        for (size_t i = 0; i + 1 < table_path.size(); ++i) {
          if (parent->is_array()) parent = &parent->back();
          parent = &(*parent)[table_path[i]];
        }
        if (parent->is_array()) parent = &parent->back();
        nlohmann::json& slot = (*parent)[table_path.back()];
        if (slot.is_null()) slot = nlohmann::json::array();
        if (!slot.is_array())
          throw ParseError("line " + std::to_string(line_no) + ": redefinition as array of tables");
        slot.push_back(nlohmann::json::object());
      }
      continue;
    }

    size_t eq = std::string::npos;
    in_str = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_str = !in_str;
      if (line[i] == '=' && !in_str) {
        eq = i;
        break;
      }
    }
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
    auto key_path = detail::split_key(line.substr(0, eq), line_no);
    nlohmann::json value = detail::parse_value(line.substr(eq + 1), line_no);

    nlohmann::json* table = detail::descend(root, table_path);
    nlohmann::json* slot = table;
    for (size_t i = 0; i + 1 < key_path.size(); ++i) slot = &(*slot)[key_path[i]];
    (*slot)[key_path.back()] = std::move(value);
  }
  return root;
}

}  // namespace riem4::toml_lite
