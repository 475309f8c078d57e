#include "niep/text_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "niep/error.hpp"

namespace niep {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_real(std::string_view token) {
  std::string_view t = trim(token);
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw Error(Errc::ParseError, "not a number: '" + std::string(token) + "'");
  }
  return v;
}

// Imaginary coefficient text in front of the 'i': empty, "+" and "-" mean +-1.
double parse_imag_coeff(std::string_view t) {
  t = trim(t);
  if (t.empty() || t == "+") return 1.0;
  if (t == "-") return -1.0;
  return parse_real(t);
}

}  // namespace

Complex parse_complex(std::string_view token) {
  std::string compact;
  for (char c : token) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw Error(Errc::ParseError, "empty entry");
  if (compact.back() != 'i' && compact.back() != 'j') return {parse_real(compact), 0.0};

  const std::string_view body = std::string_view(compact).substr(0, compact.size() - 1);
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  if (split_at == std::string_view::npos) return {0.0, parse_imag_coeff(body)};
  return {parse_real(body.substr(0, split_at)), parse_imag_coeff(body.substr(split_at))};
}

Spectrum parse_spectrum(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(Errc::ParseError, "empty spectrum");
  std::vector<Complex> values;
  for (auto part : split(text, ',')) values.push_back(parse_complex(part));
  return Spectrum(std::move(values));
}

MonicPolynomial parse_polynomial(std::string_view text) {
  text = trim(text);
  if (text.substr(0, 5) == "poly:") text = trim(text.substr(5));
  if (text.empty()) throw Error(Errc::ParseError, "empty polynomial");
  const auto parts = split(text, ',');
  if (parse_real(parts.front()) != 1.0) {
    throw Error(Errc::ParseError, "polynomial must start with the leading coefficient 1");
  }
  std::vector<double> k;
  for (std::size_t i = 1; i < parts.size(); ++i) k.push_back(parse_real(parts[i]));
  return MonicPolynomial(std::move(k));
}

Matrix parse_matrix(std::string_view text) {
  std::vector<std::vector<double>> rows;
  for (auto line : split(text, '\n')) {
    std::string cleaned(line);
    for (char& c : cleaned) {
      if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
    }
    std::istringstream in(cleaned);
    std::vector<double> row;
    std::string tok;
    while (in >> tok) row.push_back(parse_real(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(Errc::ParseError, "empty matrix");
  const std::size_t cols = rows.front().size();
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(Errc::ParseError, "row " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  }
  return m;
}

std::string format_number(double v, int significant) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string format_complex(Complex z, int significant) {
  const std::string re = format_number(z.real(), significant);
  const std::string im = format_number(std::abs(z.imag()), significant);
  if (im == "0") return re;
  return re + (z.imag() < 0 ? "-" : "+") + im + "i";
}

std::string format_spectrum(const Spectrum& s, int significant) {
  std::string out;
  for (Index i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_complex(s[i], significant);
  }
  return out;
}

std::string format_polynomial(const MonicPolynomial& p, int significant) {
  std::string out = "poly: 1";
  for (double c : p.coeffs()) out += ", " + format_number(c, significant);
  return out;
}

std::string format_matrix(const Matrix& m, int significant) {
  std::string out;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_number(m(i, j), significant);
    }
    out += '\n';
  }
  return out;
}

}  // namespace niep
