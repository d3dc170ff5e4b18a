#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qproc::io {

// Shortest round-trip decimal form; locale-independent and identical for
// identical doubles, which is what makes the CSV outputs byte-stable.
std::string format_double(double value);

std::string format_u64(std::uint64_t value);
std::string format_i64(std::int64_t value);

// Minimal CSV surface: numeric cells only, no quoting.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(&out) {}
  void header(const std::vector<std::string>& names);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream* out_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Parses what CsvWriter emits. Throws std::runtime_error on ragged rows.
CsvTable read_csv(std::istream& in);

// Overlaid step-function paths in a fixed 800x400 viewport.
std::string svg_step_paths(const std::vector<double>& grid,
                           const std::vector<std::vector<double>>& paths);

}  // namespace qproc::io
