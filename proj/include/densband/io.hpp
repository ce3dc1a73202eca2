#pragma once

#include <Eigen/Core>
#include <string>

#include "densband/band.hpp"

namespace densband {

/// Parse failure with 1-based line number.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, long line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
  long line_number;
};

/// Read newline-delimited reals, or a single-column CSV whose header is "x".
/// Blank lines are skipped; anything non-numeric raises ParseError with the
/// offending line number.
Eigen::VectorXd read_observations(const std::string& path);

/// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_double(double v);

void write_band_csv(const BandResult& band, const std::string& path);
void write_single_column_csv(const Eigen::VectorXd& values, const std::string& header,
                             const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace densband
