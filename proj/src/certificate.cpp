#include "niep/certificate.hpp"

#include "niep/digraph.hpp"

namespace niep {

RealizationCertificate make_certificate(Matrix matrix, std::string construction, Claims claims,
                                        MonicPolynomial target) {
  RealizationCertificate cert{std::move(matrix), std::move(construction), claims, std::move(target), 0.0};
  cert.residual = max_coeff_deviation(charpoly_leverrier(cert.matrix), cert.target);
  return cert;
}

}  // namespace niep
