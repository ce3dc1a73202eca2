#include "densband/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <vector>

namespace densband {

namespace {
std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}
}  // namespace

Eigen::VectorXd read_observations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<double> vals;
  std::string line;
  long lineno = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty()) continue;
    if (first_content && (s == "x" || s == "\"x\"")) {  // single-column CSV header
      first_content = false;
      continue;
    }
    first_content = false;
    const char* c = s.c_str();
    char* end = nullptr;
    double v = std::strtod(c, &end);
    if (end == c || *end != '\0')
      throw ParseError("not a number: '" + s + "'", lineno);
    if (!std::isfinite(v)) throw ParseError("non-finite observation", lineno);
    vals.push_back(v);
  }
  Eigen::VectorXd out(static_cast<long>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) out[static_cast<long>(i)] = vals[i];
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_band_csv(const BandResult& band, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "y,center,lower,upper\n";
  for (long i = 0; i < band.grid.size(); ++i)
    out << format_double(band.grid[i]) << ',' << format_double(band.center[i]) << ','
        << format_double(band.center[i] - band.halfwidth[i]) << ','
        << format_double(band.center[i] + band.halfwidth[i]) << '\n';
}

void write_single_column_csv(const Eigen::VectorXd& values, const std::string& header,
                             const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << header << '\n';
  for (long i = 0; i < values.size(); ++i) out << format_double(values[i]) << '\n';
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << contents;
}

}  // namespace densband
