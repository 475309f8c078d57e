#include "niep/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "niep/error.hpp"

namespace niep {
namespace {

// Index of an occurrence of the Perron root, if the list has one.
std::optional<Index> perron_index(const Spectrum& s, double slack) {
  const double rho = s.spectral_radius();
  for (Index i = 0; i < s.size(); ++i) {
    const Complex z = s[i];
    if (std::abs(z.imag()) <= slack && z.real() >= -slack && std::abs(z) >= rho - slack) return i;
  }
  return std::nullopt;
}

}  // namespace

int spectral_circle_count(const Spectrum& s, const Tolerance& tol) {
  const double rho = s.spectral_radius();
  const double slack = tol.eq(rho);
  return static_cast<int>(
      std::count_if(s.begin(), s.end(), [&](const Complex& z) { return std::abs(z) >= rho - slack; }));
}

StructureReport check_necessary(const Spectrum& s, const Tolerance& tol) {
  StructureReport r;
  const double rho = s.spectral_radius();
  const double slack = tol.eq(rho);

  r.trace_ok = s.trace().real() >= -slack;
  r.self_conjugate = s.is_self_conjugate(tol);
  r.perron_ok = !s.empty() && perron_index(s, slack).has_value();
  if (r.perron_ok) {
    r.perron_multiplicity = static_cast<int>(std::count_if(
        s.begin(), s.end(), [&](const Complex& z) { return std::abs(z - Complex(rho, 0.0)) <= slack; }));
    r.spectrally_simple = spectral_circle_count(s, tol) == 1;
  }
  r.zero_count = static_cast<int>(
      std::count_if(s.begin(), s.end(), [&](const Complex& z) { return std::abs(z) <= slack; }));
  if (r.perron_ok && r.self_conjugate && !r.spectrally_simple) r.frobenius_h = frobenius_structure(s, tol);
  return r;
}

std::optional<int> frobenius_structure(const Spectrum& s, const Tolerance& tol) {
  const double rho = s.spectral_radius();
  const double slack = tol.eq(rho);
  if (!s.is_self_conjugate(tol) || !perron_index(s, slack)) {
    throw Error(Errc::PerronMissing, "spectrum has no Perron root or is not self-conjugate");
  }
  if (rho <= slack) return std::nullopt;

  // Only h equal to the circle count can have exactly h eigenvalues there.
  const int h = spectral_circle_count(s, tol);
  if (h < 2) return std::nullopt;

  std::vector<Complex> nonzero;
  for (const auto& z : s) {
    if (std::abs(z) > slack) nonzero.push_back(z);
  }
  const Complex turn = std::polar(1.0, 2.0 * std::numbers::pi / h);
  std::vector<Complex> rotated;
  rotated.reserve(nonzero.size());
  for (const auto& z : nonzero) rotated.push_back(z * turn);
  if (approx_equal(Spectrum(nonzero), Spectrum(std::move(rotated)), tol)) return h;
  return std::nullopt;
}

Spectrum append(const Spectrum& s, double b) {
  std::vector<Complex> v = s.values();
  v.emplace_back(b, 0.0);
  return Spectrum(std::move(v));
}

Spectrum shift_perron(const Spectrum& s, double t, const Tolerance& tol) {
  const double rho = s.spectral_radius();
  const double slack = tol.eq(rho);
  const auto idx = perron_index(s, slack);
  if (!idx) throw Error(Errc::PerronMissing, "spectrum has no Perron root");

  std::vector<Complex> v = s.values();
  const double shifted = v[static_cast<std::size_t>(*idx)].real() + t;
  double rest = 0.0;
  for (Index i = 0; i < s.size(); ++i) {
    if (i != *idx) rest = std::max(rest, std::abs(s[i]));
  }
  if (shifted < -slack || shifted < rest - slack) {
    throw Error(Errc::PerronViolated, "shifted root " + std::to_string(shifted) +
                                          " is below the modulus " + std::to_string(rest) +
                                          " of the remaining eigenvalues");
  }
  v[static_cast<std::size_t>(*idx)] = Complex(shifted, 0.0);
  return Spectrum(std::move(v));
}

}  // namespace niep
