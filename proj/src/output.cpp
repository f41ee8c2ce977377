#include "ellipsoid/output.hpp"

#include <cmath>
#include <cstdio>

#include "ellipsoid/errors.hpp"

namespace ellipsoid::output {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

std::string csv_escape(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const {
      if (std::isnan(v)) return "";
      return format_double(v);
    }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const {
      return csv_escape(v);
    }
  };
  return std::visit(Visitor{}, cell);
}

std::string json_escape(const std::string& value) {
  std::string out;
  out.reserve(value.size() + 2);
  for (unsigned char c : value) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (c < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
          out += buffer;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::string json_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(double v) const {
      if (std::isnan(v)) return "null";
      if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
      return format_double(v);
    }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const {
      return "\"" + json_escape(v) + "\"";
    }
  };
  return std::visit(Visitor{}, cell);
}

void check_table(const Table& table) {
  for (const std::vector<Cell>& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw InvalidArgument("table row width does not match its columns");
    }
  }
}

}  // namespace

void write_csv(std::ostream& out, const Table& table,
               const std::vector<std::pair<std::string, std::string>>&
                   parameters) {
  check_table(table);
  out << "# schema=1\n";
  for (const auto& [key, value] : parameters) {
    out << "# " << key << "=" << value << "\n";
  }
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) out << ",";
    out << csv_escape(table.columns[i]);
  }
  out << "\n";
  for (const std::vector<Cell>& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ",";
      out << csv_cell(row[i]);
    }
    out << "\n";
  }
}

void write_json(std::ostream& out, const std::string& command,
                const std::vector<std::pair<std::string, Cell>>& parameters,
                const Table& table) {
  check_table(table);
  out << "{\"schema\":1,\"command\":\"" << json_escape(command) << "\"";
  out << ",\"parameters\":{";
  for (size_t i = 0; i < parameters.size(); ++i) {
    if (i > 0) out << ",";
    out << "\"" << json_escape(parameters[i].first)
        << "\":" << json_cell(parameters[i].second);
  }
  out << "},\"rows\":[";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    if (r > 0) out << ",";
    out << "{";
    for (size_t i = 0; i < table.columns.size(); ++i) {
      if (i > 0) out << ",";
      out << "\"" << json_escape(table.columns[i])
          << "\":" << json_cell(table.rows[r][i]);
    }
    out << "}";
  }
  out << "]}\n";
}

void write_error_json(std::ostream& out, const std::string& kind,
                      const std::string& message) {
  out << "{\"schema\":1,\"error\":{\"kind\":\"" << json_escape(kind)
      << "\",\"message\":\"" << json_escape(message) << "\"}}\n";
}

}  // namespace ellipsoid::output
