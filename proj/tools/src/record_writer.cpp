#include "record_writer.hpp"

#include <cmath>
#include <stdexcept>

#include "orbent/errors.hpp"

namespace orbent::cli {

namespace {

std::string csv_field(const nlohmann::ordered_json& v) {
  std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw ParseError("unknown format '" + text + "' (expected json or csv)");
}

void RecordWriter::write(const nlohmann::ordered_json& record) {
  if (format_ == Format::Json) {
    out_ << record.dump() << '\n';
    return;
  }
  if (header_.empty()) {
    for (const auto& item : record.items()) header_.push_back(item.key());
    for (std::size_t i = 0; i < header_.size(); ++i) out_ << (i ? "," : "") << header_[i];
    out_ << '\n';
  }
  for (std::size_t i = 0; i < header_.size(); ++i) {
    out_ << (i ? "," : "");
    if (record.contains(header_[i])) out_ << csv_field(record.at(header_[i]));
  }
  out_ << '\n';
}

double round_to(double x, int places) {
  const double scale = std::pow(10.0, places);
  const double r = std::round(x * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

}  // namespace orbent::cli
