#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace catmode {

// Shortest round-trip decimal form ("%.17g" trimmed); "nan" / "inf" spelled out.
std::string format_number(double x);

enum class OutputFormat { csv, json };

// Row-oriented emitter for fixed-schema tables. CSV writes the header on the
// first row; JSON writes one object per line with the header names as keys.
class RowWriter {
 public:
  using Cell = std::variant<double, int, std::string>;

  RowWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns);

  void write(const std::vector<Cell>& row);

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::vector<std::string> columns_;
  bool header_written_ = false;
};

}  // namespace catmode
