#pragma once

// Out-of-time-order correlators.

#include "tempora/qcore.hpp"

namespace tempora {

struct OtocSpec {
  CMatrix v;
  CMatrix b;
  CMatrix u;  // evolution over the time t
  CMatrix rho;

  void validate() const;
};

// exp(-beta H) / Tr, via the eigendecomposition shifted by the ground energy.
CMatrix thermal_state(const CMatrix& h, double beta);
// exp(-i H t)
CMatrix evolution_unitary(const CMatrix& h, double t);

// Tr[rho V (U^† B U) V^† (U^† B^† U)]
cplx otoc_direct(const OtocSpec& s);

// Tr[A U^†BU A rho A^† U^†B^†U A^†] for a Hermitian projector A.
double otoc_via_pdm(const CMatrix& a_proj, const CMatrix& b, const CMatrix& u, const CMatrix& rho);

}  // namespace tempora
