#pragma once

// Growth series containers and b-file I/O.  A b-file is the plain-text
// sequence format used by the OEIS: one "n value" pair per line, starting at
// n = 0, with a single space and no trailing blank line.

#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "types.hpp"

namespace thompsonf {

enum class SeriesKind { elements, geodesics };
enum class SeriesSource { algorithm_a, algorithm_b, bfs_oracle, file };

struct GrowthSeries {
  std::vector<Int> values;
  SeriesKind kind = SeriesKind::elements;
  SeriesSource source = SeriesSource::file;

  std::size_t size() const { return values.size(); }
  const Int& operator[](std::size_t n) const { return values.at(n); }
};

inline void write_bfile(const std::vector<Int>& values, std::ostream& out) {
  for (std::size_t n = 0; n < values.size(); ++n) out << n << ' ' << values[n] << '\n';
}

inline void write_bfile(const GrowthSeries& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_bfile(s.values, out);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

inline GrowthSeries read_bfile(std::istream& in, SeriesKind kind = SeriesKind::elements) {
  GrowthSeries s;
  s.kind = kind;
  s.source = SeriesSource::file;
  std::string line;
  std::size_t expect = 0;
  while (std::getline(in, line)) {
    if (line.empty()) throw std::runtime_error("b-file: blank line at entry " + std::to_string(expect));
    std::istringstream ls(line);
    long long n = -1;
    std::string value;
    if (!(ls >> n >> value) || n < 0 || static_cast<std::size_t>(n) != expect)
      throw std::runtime_error("b-file: expected line for n = " + std::to_string(expect));
    std::string rest;
    if (ls >> rest) throw std::runtime_error("b-file: trailing tokens at n = " + std::to_string(expect));
    for (char c : value)
      if (c < '0' || c > '9') throw std::runtime_error("b-file: non-numeric value at n = " + std::to_string(expect));
    s.values.push_back(Int(value));
    ++expect;
  }
  return s;
}

inline GrowthSeries read_bfile(const std::string& path, SeriesKind kind = SeriesKind::elements) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_bfile(in, kind);
}

}  // namespace thompsonf
