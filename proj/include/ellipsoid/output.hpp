#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ellipsoid::output {

// One table cell. monostate renders as an empty CSV field / JSON null, as
// does a NaN double; infinities render as "inf" / "-inf" (JSON strings).
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;  // each row matches columns in size
};

// Doubles are printed with %.17g so every value round-trips exactly.
std::string format_double(double value);

// CSV: "# schema=1", one "# key=value" line per parameter, a header line,
// then the rows (RFC 4180 quoting for strings).
void write_csv(std::ostream& out, const Table& table,
               const std::vector<std::pair<std::string, std::string>>&
                   parameters = {});

// JSON document {"schema":1,"command":...,"parameters":{...},"rows":[...]},
// with rows as objects keyed by column name, keys in insertion order.
void write_json(std::ostream& out, const std::string& command,
                const std::vector<std::pair<std::string, Cell>>& parameters,
                const Table& table);

// Error object {"schema":1,"error":{"kind":...,"message":...}}.
void write_error_json(std::ostream& out, const std::string& kind,
                      const std::string& message);

}  // namespace ellipsoid::output
