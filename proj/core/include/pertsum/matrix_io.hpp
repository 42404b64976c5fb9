#pragma once

// Plain-text matrix and vector files.
//
//   % comment lines start with '%'
//   N
//   t_00 t_01 ... t_0(N-1)
//   ...
//
// A token is a decimal real (imaginary part zero) or "(re,im)" with no
// interior whitespace. Matrices have N rows of N tokens; vectors have N
// tokens on any number of lines. Writers use 17 significant digits so a
// format/parse round trip reproduces every double.

#include <string>
#include <string_view>

#include "pertsum/numkernel.hpp"
#include "pertsum/perturbation.hpp"

namespace pertsum {

inline constexpr double kVectorNormSlack = 1e-6;

/// %.17g rendering.
std::string format_real(double value);
/// "(re,im)".
std::string format_complex(Complex value);

std::string format_matrix(const HermitianMatrix& m, std::string_view comment = {});
std::string format_vector(const Vector& v, std::string_view comment = {});

/// Throws ParseError (with line number) or NonHermitianInput.
HermitianMatrix parse_matrix(std::string_view text);

/// Rescales to unit norm when within 1e-6 of it; throws NotNormalized
/// otherwise, or ParseError.
StateVector parse_vector(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace pertsum
