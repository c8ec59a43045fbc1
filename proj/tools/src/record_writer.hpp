#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace orbent::cli {

enum class Format { Json, Csv };

Format parse_format(const std::string& text);

/// Streams flat records as JSON lines or as CSV with a header taken from the
/// first record's keys.
class RecordWriter {
 public:
  RecordWriter(Format format, std::ostream& out) : format_(format), out_(out) {}

  void write(const nlohmann::ordered_json& record);

 private:
  Format format_;
  std::ostream& out_;
  std::vector<std::string> header_;
};

/// x rounded to `places` decimals.
double round_to(double x, int places);

}  // namespace orbent::cli
