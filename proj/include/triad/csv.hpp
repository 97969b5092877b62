#ifndef TRIAD_CSV_HPP
#define TRIAD_CSV_HPP

#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>

#include "triad/text.hpp"

namespace triad {

/// CSV writer with a schema comment line and full-precision,
/// locale-independent number formatting. Undefined values are written as
/// empty fields.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, std::string_view schema);

  void header(std::initializer_list<std::string_view> columns);
  void raw_header(const std::string& line);

  CsvWriter& field(double x);
  CsvWriter& field(std::size_t x);
  CsvWriter& field(std::string_view x);
  CsvWriter& empty_field();
  void end_row();

  bool good() const { return bool(out_); }

 private:
  void sep();
  std::ofstream out_;
  bool row_started_ = false;
};

}  // namespace triad

#endif  // TRIAD_CSV_HPP
