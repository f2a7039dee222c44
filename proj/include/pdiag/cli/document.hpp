#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pdiag/rational.hpp"

namespace pdiag::cli {

enum class OutputFormat { csv, json, markdown };

std::optional<OutputFormat> parse_format(std::string_view name);

inline constexpr unsigned kDefaultDigits = 4;

/// Placeholder for a value that does not exist (e.g. a ratio over a zero area).
struct Undefined {};
/// A rational shown as a rounded decimal.
struct Decimal {
  Rational value;
};

using Cell = std::variant<Undefined, std::string, Integer, Rational, Decimal, bool>;

/// A tabular result. Every subcommand builds one and hands it to emit().
///
/// CSV and Markdown print `columns` and `rows` only. JSON prints
/// {"params": ..., "rows": [{column: value}, ...]} followed by `extras`' members.
/// Exact rationals become {"num": "...", "den": "..."} and integers become decimal
/// strings, so nothing loses precision.
struct Document {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();
};

void emit(const Document& doc, OutputFormat format, unsigned digits, std::ostream& out);

nlohmann::ordered_json rational_to_json(const Rational& value);

/// Inverse of rational_to_json(); the result is reduced. Throws std::invalid_argument
/// for anything that is not {"num": integer-string, "den": nonzero integer-string}.
Rational rational_from_json(const nlohmann::json& value);

}  // namespace pdiag::cli
