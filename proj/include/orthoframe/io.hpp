#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthoframe/attitude.hpp"
#include "orthoframe/matrix.hpp"

namespace orthoframe {

/// Raised on malformed input text (exit code 2 territory).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Whitespace-separated reals, one matrix row per line. Blank lines and
/// lines starting with '#' are ignored. Must be rectangular and finite.
Matrix parse_matrix(std::istream& in);
Matrix parse_matrix(const std::string& text);

struct WahbaInput {
    WahbaProblem problem;
    std::vector<std::string> warnings;  // off-unit vectors normalized on ingest
};

/// One observation per line: weight r1 r2 r3 o1 o2 o3. Vectors are
/// normalized on ingest; a warning is recorded when off-unit by > 1e-6.
WahbaInput parse_wahba(std::istream& in);

/// Format with the given number of significant digits ("%.*g").
std::string format_real(double x, int digits);
std::string format_matrix(const Matrix& m, int digits);

}  // namespace orthoframe
