#include "tempora/otoc.hpp"

#include <cmath>
#include <stdexcept>

#include "tempora/errors.hpp"

namespace tempora {

namespace {

void require_same_dim(const CMatrix& m, std::size_t d, const char* what) {
  if (m.rows() != d || !m.is_square()) throw DimensionError(std::string(what) + " has the wrong dimension");
}

}  // namespace

void OtocSpec::validate() const {
  require_square(v, "V");
  const std::size_t d = v.rows();
  require_same_dim(b, d, "B");
  require_same_dim(u, d, "U");
  require_same_dim(rho, d, "rho");
  require_unitary(u, "U");
  require_density_matrix(rho, "rho");
}

CMatrix thermal_state(const CMatrix& h, double beta) {
  if (!(beta >= 0) || !std::isfinite(beta)) throw ValidationError("beta must be finite and >= 0");
  const EigenSystem es = eig_hermitian(h);
  const std::size_t d = h.rows();
  const double e0 = es.values.front();
  std::vector<double> w(d);
  double z = 0.0;
  for (std::size_t k = 0; k < d; ++k) z += w[k] = std::exp(-beta * (es.values[k] - e0));
  CMatrix rho(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) rho(r, c) += (w[k] / z) * es.vectors(r, k) * std::conj(es.vectors(c, k));
  return 0.5 * (rho + rho.adjoint());
}

CMatrix evolution_unitary(const CMatrix& h, double t) { return exp_hermitian(h, cplx(0.0, -t)); }

cplx otoc_direct(const OtocSpec& s) {
  s.validate();
  const CMatrix ud = s.u.adjoint();
  const CMatrix bt = ud * s.b * s.u;
  const CMatrix btd = ud * s.b.adjoint() * s.u;
  return trace_of_product(s.rho, s.v * bt * s.v.adjoint() * btd);
}

double otoc_via_pdm(const CMatrix& a_proj, const CMatrix& b, const CMatrix& u, const CMatrix& rho) {
  require_square(a_proj, "A");
  const std::size_t d = a_proj.rows();
  require_same_dim(b, d, "B");
  require_same_dim(u, d, "U");
  require_same_dim(rho, d, "rho");
  require_unitary(u, "U");
  require_density_matrix(rho, "rho");
  if (!is_hermitian(a_proj, kCheckTol) || max_abs_diff(a_proj * a_proj, a_proj) > kCheckTol)
    throw ValidationError("A must be a Hermitian projector");
  const CMatrix ud = u.adjoint();
  const CMatrix bt = ud * b * u;
  const CMatrix btd = ud * b.adjoint() * u;
  const CMatrix ad = a_proj.adjoint();
  const cplx r = trace_of_product(a_proj * bt * a_proj * rho * ad, btd * ad);
  if (std::abs(r.imag()) > kInputTol) throw std::logic_error("PDM-route OTOC has an imaginary residue");
  return r.real();
}

}  // namespace tempora
