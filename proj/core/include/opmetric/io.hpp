#pragma once

#include <filesystem>
#include <string>

#include "opmetric/ball.hpp"
#include "opmetric/operator_space.hpp"

namespace opmetric {

// Numbers in files and CLI output carry 17 significant digits, enough for an
// exact double round trip.
std::string format_double(double v);

// Operator file: {"rows": dimK, "cols": dimH, "dimH": ..., "dimK": ...,
// "data": [[re, im], ...]} with data row-major, complex entries as [re, im]
// pairs. ParseError on malformed JSON, DimensionMismatch on inconsistent
// shape fields, NonFiniteEntry on NaN/inf.
ClosedOperator parse_operator(const std::string& text);
std::string format_operator(const ClosedOperator& t);

// Generator file: {"dimH": m, "dimK": n, "A": <matrix m x n>, "U": <matrix
// m x m>, "V": <matrix n x n>} with each matrix block shaped like an operator
// file's {"rows", "cols", "data"}. A is the Moebius parameter in ball
// coordinates; U, V are the unitary parts.
BallAutomorphism parse_generator(const std::string& text);
std::string format_generator(const BallAutomorphism& g);

ClosedOperator read_operator_file(const std::filesystem::path& path);
void write_operator_file(const std::filesystem::path& path, const ClosedOperator& t);
BallAutomorphism read_generator_file(const std::filesystem::path& path);
void write_generator_file(const std::filesystem::path& path, const BallAutomorphism& g);

} // namespace opmetric
