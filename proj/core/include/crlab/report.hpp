#pragma once

#include <string>
#include <vector>

namespace crlab {

/**
 * Deterministic CSV writer: fixed column order, %.17g doubles, so identical
 * configs and seeds produce byte-identical files.
 */
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns);
  ~CsvWriter();
  void row(const std::vector<double>& values);
  void close();

 private:
  struct Impl;
  Impl* impl_;
};

std::string format_double(double v);

/** Creates the directory (and parents) if needed; returns the path. */
std::string ensure_dir(const std::string& path);

}  // namespace crlab
