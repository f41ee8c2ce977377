#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/output.hpp"

namespace out = ellipsoid::output;

namespace {

out::Table sample_table() {
  out::Table table;
  table.name = "sample";
  table.columns = {"label", "value", "count", "empty"};
  table.rows.push_back({std::string("plain"), 0.1, std::int64_t{3},
                        std::monostate{}});
  table.rows.push_back({std::string("quote\"and,comma"), 1.0 / 3.0,
                        std::int64_t{-7}, std::monostate{}});
  table.rows.push_back({std::string("line\nbreak"),
                        std::numeric_limits<double>::quiet_NaN(),
                        std::int64_t{0}, std::monostate{}});
  return table;
}

}  // namespace

TEST_SUITE("output") {

TEST_CASE("doubles round-trip through the printed representation") {
  for (double value : {0.1, 1.0 / 3.0, 1e-308, 6.02e23, -0.0,
                       0.5582158815195115, 1.0744715882221367}) {
    const std::string text = out::format_double(value);
    const double parsed = std::strtod(text.c_str(), nullptr);
    CHECK(parsed == value);
  }
}

TEST_CASE("CSV output carries schema, parameters, quoting and NaN blanks") {
  std::ostringstream stream;
  out::write_csv(stream, sample_table(), {{"alpha", "1.5"}, {"mode", "x"}});
  const std::string text = stream.str();

  CHECK(text.find("# schema=1") == 0);
  CHECK(text.find("# alpha=1.5") != std::string::npos);
  CHECK(text.find("# mode=x") != std::string::npos);
  CHECK(text.find("label,value,count,empty") != std::string::npos);
  // RFC 4180: embedded quotes double, fields with commas/newlines quoted.
  CHECK(text.find("\"quote\"\"and,comma\"") != std::string::npos);
  CHECK(text.find("\"line\nbreak\"") != std::string::npos);
  // NaN and monostate leave the field empty: the last row ends ",,0," or so.
  CHECK(text.find("\"line\nbreak\",,0,") != std::string::npos);
}

TEST_CASE("JSON output is well formed and preserves values") {
  std::ostringstream stream;
  out::write_json(stream, "sample-command",
                  {{"alpha", out::Cell{1.5}},
                   {"label", out::Cell{std::string("x")}},
                   {"count", out::Cell{std::int64_t{4}}}},
                  sample_table());
  const auto doc = nlohmann::json::parse(stream.str());

  CHECK(doc.at("schema").get<int>() == 1);
  CHECK(doc.at("command").get<std::string>() == "sample-command");
  CHECK(doc.at("parameters").at("alpha").get<double>() == 1.5);
  CHECK(doc.at("parameters").at("label").get<std::string>() == "x");
  CHECK(doc.at("parameters").at("count").get<int>() == 4);

  const auto& rows = doc.at("rows");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].at("label").get<std::string>() == "plain");
  CHECK(rows[0].at("value").get<double>() == 0.1);
  CHECK(rows[0].at("count").get<std::int64_t>() == 3);
  CHECK(rows[0].at("empty").is_null());
  CHECK(rows[1].at("value").get<double>() == 1.0 / 3.0);
  CHECK(rows[1].at("label").get<std::string>() == "quote\"and,comma");
  CHECK(rows[2].at("label").get<std::string>() == "line\nbreak");
  CHECK(rows[2].at("value").is_null());  // NaN maps to null
}

TEST_CASE("non-finite doubles have explicit JSON spellings") {
  out::Table table;
  table.name = "edge";
  table.columns = {"v"};
  table.rows.push_back({std::numeric_limits<double>::infinity()});
  table.rows.push_back({-std::numeric_limits<double>::infinity()});
  std::ostringstream stream;
  out::write_json(stream, "edge", {}, table);
  const auto doc = nlohmann::json::parse(stream.str());
  CHECK(doc.at("rows")[0].at("v").get<std::string>() == "inf");
  CHECK(doc.at("rows")[1].at("v").get<std::string>() == "-inf");
}

TEST_CASE("error documents use the fixed shape") {
  std::ostringstream stream;
  out::write_error_json(stream, "invalid_argument", "axis \"a\" must exceed b");
  const auto doc = nlohmann::json::parse(stream.str());
  CHECK(doc.at("schema").get<int>() == 1);
  CHECK(doc.at("error").at("kind").get<std::string>() == "invalid_argument");
  CHECK(doc.at("error").at("message").get<std::string>() ==
        "axis \"a\" must exceed b");
}

TEST_CASE("ragged rows are rejected") {
  out::Table table;
  table.name = "bad";
  table.columns = {"x", "y"};
  table.rows.push_back({1.0});
  std::ostringstream csv_stream;
  CHECK_THROWS_AS(out::write_csv(csv_stream, table),
                  ellipsoid::InvalidArgument);
  std::ostringstream json_stream;
  CHECK_THROWS_AS(out::write_json(json_stream, "bad", {}, table),
                  ellipsoid::InvalidArgument);
}

}  // TEST_SUITE
