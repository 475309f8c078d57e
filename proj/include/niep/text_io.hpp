#pragma once

#include <string>
#include <string_view>

#include "niep/spectrum.hpp"
#include "niep/types.hpp"

namespace niep {

// Spectrum text: comma-separated entries, complex written as a+bi / a-bi.
Spectrum parse_spectrum(std::string_view text);
Complex parse_complex(std::string_view token);

// Polynomial text: "poly: 1, k1, ..., kn"; the "poly:" prefix is optional
// but the leading 1 is required.
MonicPolynomial parse_polynomial(std::string_view text);

// Matrix text: one row per line, entries separated by spaces or commas.
Matrix parse_matrix(std::string_view text);

std::string format_number(double v, int significant = 12);
std::string format_complex(Complex z, int significant = 12);
std::string format_spectrum(const Spectrum& s, int significant = 12);
std::string format_polynomial(const MonicPolynomial& p, int significant = 12);
std::string format_matrix(const Matrix& m, int significant = 12);

}  // namespace niep
