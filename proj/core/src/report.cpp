#include "crlab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "crlab/parallel.hpp"

namespace crlab {

int& job_cap() {
  static int cap = 0;
  return cap;
}

struct CsvWriter::Impl {
  std::ofstream out;
  std::size_t ncols = 0;
};

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& columns)
    : impl_(new Impl) {
  impl_->out.open(path);
  if (!impl_->out) throw std::runtime_error("CsvWriter: cannot open " + path);
  impl_->ncols = columns.size();
  for (std::size_t i = 0; i < columns.size(); ++i)
    impl_->out << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

CsvWriter::~CsvWriter() {
  close();
  delete impl_;
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != impl_->ncols)
    throw std::invalid_argument("CsvWriter::row: column count mismatch");
  for (std::size_t i = 0; i < values.size(); ++i)
    impl_->out << format_double(values[i]) << (i + 1 < values.size() ? "," : "\n");
}

void CsvWriter::close() {
  if (impl_->out.is_open()) impl_->out.close();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string ensure_dir(const std::string& path) {
  std::filesystem::create_directories(path);
  return path;
}

}  // namespace crlab
