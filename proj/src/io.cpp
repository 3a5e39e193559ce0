#include "catmode/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace catmode {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  // Prefer the shortest representation that round-trips.
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

RowWriter::RowWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {}

void RowWriter::write(const std::vector<Cell>& row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("RowWriter: row width does not match header");
  }
  if (format_ == OutputFormat::csv) {
    if (!header_written_) {
      for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
      out_ << '\n';
      header_written_ = true;
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out_ << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out_ << format_number(v);
            } else {
              out_ << v;
            }
          },
          row[i]);
    }
    out_ << '\n';
    return;
  }

  nlohmann::ordered_json obj;
  for (std::size_t i = 0; i < row.size(); ++i) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            if (std::isfinite(v)) {
              obj[columns_[i]] = v;
            } else {
              obj[columns_[i]] = nullptr;
            }
          } else {
            obj[columns_[i]] = v;
          }
        },
        row[i]);
  }
  out_ << obj.dump() << '\n';
}

}  // namespace catmode
