#include "triad/csv.hpp"

#include <stdexcept>

namespace triad {

CsvWriter::CsvWriter(const std::string& path, std::string_view schema)
    : out_(path, std::ios::binary) {
  if (!out_) throw std::runtime_error("cannot open for writing: " + path);
  out_ << "# schema: " << schema << "\n";
}

void CsvWriter::header(std::initializer_list<std::string_view> columns) {
  bool first = true;
  for (const auto c : columns) {
    if (!first) out_ << ',';
    out_ << c;
    first = false;
  }
  out_ << '\n';
}

void CsvWriter::raw_header(const std::string& line) { out_ << line << '\n'; }

void CsvWriter::sep() {
  if (row_started_) out_ << ',';
  row_started_ = true;
}

CsvWriter& CsvWriter::field(double x) {
  sep();
  out_ << format_double(x);
  return *this;
}

CsvWriter& CsvWriter::field(std::size_t x) {
  sep();
  out_ << x;
  return *this;
}

CsvWriter& CsvWriter::field(std::string_view x) {
  sep();
  out_ << x;
  return *this;
}

CsvWriter& CsvWriter::empty_field() {
  sep();
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  row_started_ = false;
}

}  // namespace triad
