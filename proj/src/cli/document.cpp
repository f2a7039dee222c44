#include "pdiag/cli/document.hpp"

#include <ostream>
#include <stdexcept>

namespace pdiag::cli {

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "markdown") return OutputFormat::markdown;
  return std::nullopt;
}

nlohmann::ordered_json rational_to_json(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  return {{"num", reduced.get_num().get_str()}, {"den", reduced.get_den().get_str()}};
}

Rational rational_from_json(const nlohmann::json& value) {
  if (!value.is_object() || !value.contains("num") || !value.contains("den") ||
      !value["num"].is_string() || !value["den"].is_string())
    throw std::invalid_argument("expected {\"num\": string, \"den\": string}");
  return parse_fraction(value["num"].get<std::string>() + "/" + value["den"].get<std::string>());
}

namespace {

struct TextCell {
  unsigned digits;

  std::string operator()(const Undefined&) const { return "undefined"; }
  std::string operator()(const std::string& s) const { return s; }
  std::string operator()(const Integer& i) const { return i.get_str(); }
  std::string operator()(const Rational& r) const { return to_fraction_string(r); }
  std::string operator()(const Decimal& d) const { return to_decimal_string(d.value, digits); }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
};

struct JsonCell {
  unsigned digits;

  nlohmann::ordered_json operator()(const Undefined&) const { return nullptr; }
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  nlohmann::ordered_json operator()(const Integer& i) const { return i.get_str(); }
  nlohmann::ordered_json operator()(const Rational& r) const { return rational_to_json(r); }
  nlohmann::ordered_json operator()(const Decimal& d) const {
    return to_decimal_string(d.value, digits);
  }
  nlohmann::ordered_json operator()(bool b) const { return b; }
};

void emit_csv(const Document& doc, unsigned digits, std::ostream& out) {
  for (std::size_t c = 0; c < doc.columns.size(); ++c)
    out << (c ? "," : "") << doc.columns[c];
  out << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "," : "") << std::visit(TextCell{digits}, row[c]);
    out << '\n';
  }
}

void emit_markdown(const Document& doc, unsigned digits, std::ostream& out) {
  out << '|';
  for (const auto& column : doc.columns) out << ' ' << column << " |";
  out << "\n|";
  for (std::size_t c = 0; c < doc.columns.size(); ++c) out << "---|";
  out << '\n';
  for (const auto& row : doc.rows) {
    out << '|';
    for (const auto& cell : row) out << ' ' << std::visit(TextCell{digits}, cell) << " |";
    out << '\n';
  }
}

void emit_json(const Document& doc, unsigned digits, std::ostream& out) {
  nlohmann::ordered_json root;
  root["params"] = doc.params;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < doc.columns.size(); ++c)
      record[doc.columns[c]] = std::visit(JsonCell{digits}, row[c]);
    rows.push_back(std::move(record));
  }
  root["rows"] = std::move(rows);
  for (const auto& [key, value] : doc.extras.items()) root[key] = value;
  out << root.dump(2) << '\n';
}

}  // namespace

void emit(const Document& doc, OutputFormat format, unsigned digits, std::ostream& out) {
  switch (format) {
    case OutputFormat::csv: emit_csv(doc, digits, out); break;
    case OutputFormat::json: emit_json(doc, digits, out); break;
    case OutputFormat::markdown: emit_markdown(doc, digits, out); break;
  }
}

}  // namespace pdiag::cli
