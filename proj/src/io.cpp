#include "qproc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace qproc::io {

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_u64(std::uint64_t value) { return std::to_string(value); }
std::string format_i64(std::int64_t value) { return std::to_string(value); }

namespace {
void write_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}
}  // namespace

void CsvWriter::header(const std::vector<std::string>& names) {
  write_line(*out_, names);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  write_line(*out_, cells);
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = line.find(',', start);
      if (pos == std::string::npos) {
        cells.push_back(line.substr(start));
        break;
      }
      cells.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != table.header.size())
        throw std::runtime_error("csv row width does not match header");
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

std::string svg_step_paths(const std::vector<double>& grid,
                           const std::vector<std::vector<double>>& paths) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 400.0;
  constexpr double kPad = 20.0;

  double lo = 0.0;
  double hi = 0.0;
  for (const auto& p : paths) {
    for (double v : p) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (hi - lo < 1e-12) {
    hi += 0.5;
    lo -= 0.5;
  }

  const auto sx = [&](double t) { return kPad + t * (kWidth - 2 * kPad); };
  const auto sy = [&](double v) {
    return kHeight - kPad - (v - lo) / (hi - lo) * (kHeight - 2 * kPad);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" "
         "viewBox=\"0 0 800 400\">\n";
  out << "<rect width=\"800\" height=\"400\" fill=\"white\"/>\n";
  // zero line
  if (lo < 0.0 && hi > 0.0) {
    out << "<line x1=\"" << format_double(sx(0.0)) << "\" y1=\""
        << format_double(sy(0.0)) << "\" x2=\"" << format_double(sx(1.0))
        << "\" y2=\"" << format_double(sy(0.0))
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const int hue = paths.size() > 1
                        ? static_cast<int>(360.0 * static_cast<double>(p) /
                                           static_cast<double>(paths.size()))
                        : 210;
    out << "<polyline fill=\"none\" stroke=\"hsl(" << hue
        << ",60%,45%)\" stroke-width=\"1\" points=\"";
    const auto& path = paths[p];
    // Step rendering: hold the previous value until each grid point.
    double prev = 0.0;
    out << format_double(sx(0.0)) << ',' << format_double(sy(prev));
    for (std::size_t k = 0; k < grid.size() && k < path.size(); ++k) {
      const std::string x = format_double(sx(grid[k]));
      out << ' ' << x << ',' << format_double(sy(prev));
      out << ' ' << x << ',' << format_double(sy(path[k]));
      prev = path[k];
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace qproc::io
