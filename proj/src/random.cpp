#include "tempora/random.hpp"

#include <Eigen/Dense>

namespace tempora {

namespace {

using EMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

CMatrix from_eigen(const EMat& m) {
  CMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

// d x k matrix with orthonormal columns.
EMat haar_isometry(Rng& rng, std::size_t d, std::size_t k) {
  const CMatrix g = random_ginibre(rng, d, k);
  EMat e(d, k);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < k; ++c) e(r, c) = g(r, c);
  Eigen::HouseholderQR<EMat> qr(e);
  EMat q = qr.householderQ() * EMat::Identity(d, k);
  const EMat rmat = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (std::size_t c = 0; c < k; ++c) {
    const cplx diag = rmat(c, c);
    const double a = std::abs(diag);
    if (a > 0) q.col(c) *= diag / a;
  }
  return q;
}

}  // namespace

CMatrix random_ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix m(rows, cols);
  for (auto& z : m.entries()) {
    const double re = n(rng);
    const double im = n(rng);
    z = cplx(re, im) * M_SQRT1_2;
  }
  return m;
}

CMatrix random_unitary(Rng& rng, std::size_t d) { return from_eigen(haar_isometry(rng, d, d)); }

CMatrix random_state(Rng& rng, std::size_t d) {
  const CMatrix g = random_ginibre(rng, d, d);
  CMatrix rho = g * g.adjoint();
  rho = rho / rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

CMatrix random_pure_ket(Rng& rng, std::size_t d) { return from_eigen(haar_isometry(rng, d, 1)); }

CMatrix random_hermitian(Rng& rng, std::size_t d) {
  const CMatrix g = random_ginibre(rng, d, d);
  return 0.5 * (g + g.adjoint());
}

Channel random_channel(Rng& rng, std::size_t d, std::size_t rank) {
  // Stack the Kraus operators as blocks of one (rank*d) x d isometry.
  const EMat v = haar_isometry(rng, rank * d, d);
  Channel ch;
  for (std::size_t k = 0; k < rank; ++k) ch.kraus.push_back(from_eigen(v.block(k * d, 0, d, d)));
  return ch;
}

CMatrix random_projector(Rng& rng, std::size_t d, std::size_t rank) {
  if (rank == 0) return CMatrix(d, d);
  const EMat v = haar_isometry(rng, d, rank);
  CMatrix p = from_eigen(v * v.adjoint());
  return 0.5 * (p + p.adjoint());
}

Instrument random_pm_instrument(Rng& rng, std::size_t d, std::size_t rank) {
  const CMatrix p = random_projector(rng, d, rank);
  Instrument in;
  in.outcomes[+1] = {p};
  in.outcomes[-1] = {CMatrix::identity(d) - p};
  return in;
}

}  // namespace tempora
