#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tempora/channel.hpp"
#include "tempora/errors.hpp"
#include "tempora/random.hpp"

using namespace tempora;

TEST_CASE("channels") {
  Rng rng(11);
  const CMatrix rho = random_state(rng, 3);
  CHECK(max_abs_diff(Channel::identity(3).apply(rho), rho) < 1e-15);
  CHECK(max_abs_diff(Channel::depolarizing(3).apply(rho), CMatrix::identity(3) / 3.0) < 1e-14);

  const CMatrix u = random_unitary(rng, 3);
  CHECK(max_abs_diff(Channel::unitary(u).apply(rho), u * rho * u.adjoint()) < 1e-14);

  for (std::size_t rank = 1; rank <= 4; ++rank) {
    const Channel ch = random_channel(rng, 2, rank);
    CHECK(ch.kraus.size() == rank);
    CHECK_NOTHROW(ch.validate());
    const CMatrix out = ch.apply(random_state(rng, 2));
    CHECK(is_density_matrix(out, 1e-9));
    // Hilbert-Schmidt duality: Tr[O E(rho)] = Tr[E^†(O) rho]
    const CMatrix o = random_hermitian(rng, 2), r = random_state(rng, 2);
    CHECK(std::abs(trace_of_product(o, ch.apply(r)) - trace_of_product(ch.apply_adjoint(o), r)) < 1e-12);
  }

  Channel bad{{2.0 * CMatrix::identity(2)}};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("instruments") {
  const Instrument z = Instrument::pauli(3);
  CHECK(z.labels() == std::vector<int>{-1, 1});
  CHECK_NOTHROW(z.validate());
  CHECK_NOTHROW(z.require_pm_one_labels());
  const CMatrix zero = CMatrix::basis_projector(2, 0);
  CHECK(max_abs_diff(z.apply(1, zero), zero) < 1e-15);
  CHECK(max_abs(z.apply(-1, zero)) < 1e-15);
  CHECK(max_abs_diff(z.effect(1), zero) < 1e-15);

  const Instrument xx = Instrument::from_observable(kron(pauli(1), pauli(1)));
  CHECK_NOTHROW(xx.validate());
  CHECK(max_abs_diff(xx.effect(1) - xx.effect(-1), kron(pauli(1), pauli(1))) < 1e-12);
  CHECK_THROWS_AS(Instrument::from_observable(2.0 * pauli(3)), ValidationError);

  Rng rng(12);
  for (std::size_t r = 0; r <= 4; ++r) CHECK_NOTHROW(random_pm_instrument(rng, 4, r).validate());

  const Povm p = Povm::from_instrument(z);
  CHECK_NOTHROW(p.validate());
  CHECK(p.dim() == 2);
  CHECK(Povm::trivial(3).labels() == std::vector<int>{1});

  Instrument labelled;
  labelled.outcomes[0] = {CMatrix::identity(2)};
  CHECK_THROWS_AS(labelled.require_pm_one_labels(), ValidationError);
}

TEST_CASE("random draws") {
  Rng a(99), b(99);
  CHECK(random_unitary(a, 4) == random_unitary(b, 4));

  Rng rng(13);
  for (std::size_t d : {1u, 2u, 5u, 8u}) {
    CHECK(is_unitary(random_unitary(rng, d)));
    CHECK(is_density_matrix(random_state(rng, d), 1e-12));
    CHECK(is_hermitian(random_hermitian(rng, d)));
    const CMatrix ket = random_pure_ket(rng, d);
    CHECK(std::abs((ket.adjoint() * ket)(0, 0) - 1.0) < 1e-12);
    for (std::size_t r = 0; r <= d; ++r) {
      const CMatrix p = random_projector(rng, d, r);
      CHECK(max_abs_diff(p * p, p) < 1e-12);
      CHECK(std::abs(p.trace() - double(r)) < 1e-12);
    }
  }

  // Haar first moment: E|U_00|^2 = 1/d.
  double acc = 0.0;
  const int n = 4000;
  for (int k = 0; k < n; ++k) acc += std::norm(random_unitary(rng, 3)(0, 0));
  CHECK(acc / n == doctest::Approx(1.0 / 3.0).epsilon(0.05));
}
