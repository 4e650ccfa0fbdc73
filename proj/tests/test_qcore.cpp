#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tempora/errors.hpp"
#include "tempora/qcore.hpp"
#include "tempora/random.hpp"

using namespace tempora;

namespace {

// Entrywise oracle: ((i1,i2),(j1,j2)) -> a(i1,j1) b(i2,j2).
CMatrix kron_loop(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
  return out;
}

CMatrix swap4() {
  CMatrix s(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) s(2 * i + j, 2 * j + i) = 1.0;
  return s;
}

CMatrix rect(Rng& rng, std::size_t r, std::size_t c) { return random_ginibre(rng, r, c); }

// Small-integer entries keep every product exact in double precision.
CMatrix int_rect(Rng& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-4, 4);
  CMatrix m(r, c);
  for (auto& z : m.entries()) z = cplx(d(rng), d(rng));
  return m;
}

}  // namespace

TEST_CASE("kron") {
  CHECK(kron(CMatrix::identity(2), CMatrix::identity(2)) == CMatrix::identity(4));

  const CMatrix xx = kron(pauli(1), pauli(1));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(xx(r, c) == cplx(r + c == 3 ? 1.0 : 0.0));

  Rng rng(1);
  const CMatrix a = rect(rng, 2, 3), b = rect(rng, 4, 5), c = rect(rng, 3, 2);
  const CMatrix ab = kron(a, b);
  CHECK(ab.rows() == 8);
  CHECK(ab.cols() == 15);
  CHECK(ab == kron_loop(a, b));
  CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-14);
  const CMatrix ia = int_rect(rng, 2, 2), ib = int_rect(rng, 3, 2), ic = int_rect(rng, 2, 3);
  CHECK(kron(kron(ia, ib), ic) == kron(ia, kron(ib, ic)));
}

TEST_CASE("partial trace") {
  Rng rng(2);
  const CMatrix rho = random_state(rng, 2), sigma = random_state(rng, 3);
  const SpaceSpec s{{"A", 2}, {"B", 3}};
  CHECK(max_abs_diff(partial_trace(kron(rho, sigma), s, {"A"}), rho) < 1e-14);

  // Index-sum oracle over SWAP = sum |ij><ji|: Tr_A(SWAP/2) = sum_i |i><i| / 2.
  const SpaceSpec q{{"A", 2}, {"B", 2}};
  const CMatrix tb = partial_trace(0.5 * swap4(), q, {"B"});
  CHECK(max_abs_diff(tb, CMatrix::identity(2) / 2.0) < 1e-15);

  const CMatrix all = partial_trace(kron(rho, sigma), s, {});
  CHECK(all.rows() == 1);
  CHECK(std::abs(all(0, 0) - 1.0) < 1e-14);

  // Tr_B (a ⊗ b) = a Tr b for non-Hermitian square factors; spec order kept.
  const CMatrix a = rect(rng, 3, 3), b = rect(rng, 2, 2), c = rect(rng, 2, 2);
  const SpaceSpec t{{"X", 3}, {"Y", 2}, {"Z", 2}};
  const CMatrix m = kron({a, b, c});
  CHECK(max_abs_diff(partial_trace(m, t, {"X"}), a * (b.trace() * c.trace())) < 1e-12);
  CHECK(max_abs_diff(partial_trace(m, t, {"Z", "X"}), kron(a, c) * b.trace()) < 1e-12);
  CHECK(std::abs(partial_trace(m, t, {"Y"}).trace() - m.trace()) < 1e-12);

  CHECK_THROWS_AS(partial_trace(m, t, {"Q"}), DimensionError);
  CHECK_THROWS_AS(partial_trace(m, q, {"A"}), DimensionError);
}

TEST_CASE("partial transpose") {
  // [[1]] = sum_ij |ii><jj|; transposing the first qubit gives SWAP.
  CMatrix phi(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) phi(3 * i, 3 * j) = 1.0;
  const SpaceSpec q{{"A", 2}, {"B", 2}};
  CHECK(partial_transpose(phi, q, {"A"}) == swap4());

  Rng rng(3);
  const SpaceSpec s{{"A", 2}, {"B", 3}, {"C", 2}};
  const CMatrix m = rect(rng, 12, 12);
  CHECK(partial_transpose(m, s, {"A", "B", "C"}) == m.transpose());
  CHECK(partial_transpose(m, s, {}) == m);
  CHECK(partial_transpose(partial_transpose(m, s, {"B"}), s, {"B"}) == m);
  CHECK(partial_transpose(partial_transpose(m, s, {"A", "C"}), s, {"A", "C"}) == m);
  // product-state oracle
  const CMatrix a = rect(rng, 2, 2), b = rect(rng, 3, 3), c = rect(rng, 2, 2);
  CHECK(max_abs_diff(partial_transpose(kron({a, b, c}), s, {"B"}), kron({a, b.transpose(), c})) < 1e-14);
}

TEST_CASE("permute and trace-and-replace") {
  Rng rng(4);
  const CMatrix a = rect(rng, 2, 2), b = rect(rng, 3, 3), c = rect(rng, 2, 2);
  const SpaceSpec s{{"A", 2}, {"B", 3}, {"C", 2}};
  CHECK(max_abs_diff(permute_subsystems(kron({a, b, c}), s, {"C", "A", "B"}), kron({c, a, b})) < 1e-14);
  // (1_B / 3) ⊗ Tr_B, with the identity back in B's position
  const CMatrix r = trace_and_replace(kron({a, b, c}), s, {"B"});
  CHECK(max_abs_diff(r, kron({a, CMatrix::identity(3) / 3.0, c}) * b.trace()) < 1e-13);
}

TEST_CASE("eig_hermitian") {
  const auto z = eig_hermitian(pauli(3));
  CHECK(z.values[0] == doctest::Approx(-1.0));
  CHECK(z.values[1] == doctest::Approx(1.0));

  const auto s = eig_hermitian(0.5 * swap4());
  const double expect[4] = {-0.5, 0.5, 0.5, 0.5};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(s.values[k] - expect[k]) < 1e-12);

  for (double v : eig_hermitian(CMatrix::identity(5)).values) CHECK(std::abs(v - 1.0) < 1e-12);

  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const CMatrix h = random_hermitian(rng, 6);
    const auto es = eig_hermitian(h);
    CMatrix lam(6, 6);
    for (std::size_t k = 0; k < 6; ++k) lam(k, k) = es.values[k];
    CHECK(frobenius_norm(h * es.vectors - es.vectors * lam) < 1e-9);
    CHECK(max_abs_diff(es.vectors.adjoint() * es.vectors, CMatrix::identity(6)) < 1e-9);
    CHECK(frobenius_norm(es.vectors * lam * es.vectors.adjoint() - h) < 1e-9);
    for (std::size_t k = 1; k < 6; ++k) CHECK(es.values[k - 1] <= es.values[k]);
  }
  CMatrix bad = CMatrix::identity(2);
  bad(0, 1) = 1e-6;
  CHECK_THROWS_AS(eig_hermitian(bad), ValidationError);
}

TEST_CASE("pauli matrices") {
  CHECK(pauli_matrix(PauliString{3}) == pauli(3));
  CHECK(pauli_matrix(PauliString{1, 3}) == kron_loop(pauli(1), pauli(3)));
  CHECK(pauli_matrix(PauliString{0, 0}) == CMatrix::identity(4));

  // Tr(sigma_p sigma_q) = 2^n delta_pq
  for (std::size_t p = 0; p < 16; ++p)
    for (std::size_t q = 0; q < 16; ++q) {
      const cplx t = trace_of_product(pauli_matrix(PauliString::from_index(2, p)),
                                      pauli_matrix(PauliString::from_index(2, q)));
      CHECK(std::abs(t - (p == q ? 4.0 : 0.0)) < 1e-15);
    }
  for (std::size_t p = 0; p < 64; ++p) {
    const CMatrix m = pauli_matrix(PauliString::from_index(3, p));
    CHECK(is_hermitian(m));
    CHECK(m * m == CMatrix::identity(8));
  }
  CHECK(PauliString::from_index(2, 7).to_string() == "XZ");
  CHECK_THROWS_AS(PauliString{4}, ValidationError);
}

TEST_CASE("pearson") {
  const std::vector<double> x = {1, 2, 3}, y = {2, 4, 6.5}, ny = {-1, -2, -3};
  CHECK(pearson(x, x) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pearson(x, ny) == doctest::Approx(-1.0).epsilon(1e-15));
  // Hand evaluation: mean y = 25/6; cov sum = 4.5; var sums 2 and 61/6.
  const double my = 12.5 / 3.0;
  const double cov = (-1) * (2 - my) + 0 + 1 * (6.5 - my);
  const double vy = (2 - my) * (2 - my) + (4 - my) * (4 - my) + (6.5 - my) * (6.5 - my);
  CHECK(pearson(x, y) == doctest::Approx(cov / std::sqrt(2.0 * vy)).epsilon(1e-14));
  CHECK(pearson(x, y) == doctest::Approx(0.9979487157886733).epsilon(1e-12));

  const std::vector<double> flat = {1, 1, 1};
  CHECK_THROWS_AS(pearson(x, flat), UndefinedCorrelation);
  CHECK_THROWS_AS(pearson(std::vector<double>{1}, std::vector<double>{1}), DimensionError);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(CMatrix(2, 2, std::vector<cplx>(3)), ValidationError);
  CHECK_THROWS_AS(CMatrix(1, 1, std::vector<cplx>{cplx(NAN, 0)}), ValidationError);
  CHECK_THROWS_AS(SpaceSpec({{"A", 2}, {"A", 2}}), ValidationError);
  CHECK_THROWS_AS(SpaceSpec({{"A", 0}}), ValidationError);
  CHECK(is_density_matrix(CMatrix::identity(2) / 2.0));
  CHECK_FALSE(is_density_matrix(pauli(3)));
  CHECK(is_unitary(pauli(2)));
}
