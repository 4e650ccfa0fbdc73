#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tempora/errors.hpp"
#include "tempora/pdm.hpp"
#include "tempora/procmat.hpp"
#include "tempora/random.hpp"

using namespace tempora;

namespace {

// sum_ij |ii><jj|
CMatrix link(std::size_t d) {
  CMatrix m(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i * d + i, j * d + j) = 1.0;
  return m;
}

CMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return CMatrix{{s, s}, {s, -s}};
}

ProcessMatrix channel_w() {
  return {kron(CMatrix::identity(2) / 2.0, link(2)), SpaceSpec{{"A_I", 2}, {"A_O", 2}, {"B_I", 2}}};
}

ProcessMatrix state_w(const CMatrix& ra, const CMatrix& rb) {
  return {kron({ra, CMatrix::identity(2), rb, CMatrix::identity(2)}),
          SpaceSpec{{"A_I", 2}, {"A_O", 2}, {"B_I", 2}, {"B_O", 2}}};
}

ProcessMatrix loop_w() {
  return {0.5 * kron(link(2), link(2)), SpaceSpec{{"A_O", 2}, {"B_I", 2}, {"B_O", 2}, {"A_I", 2}}};
}

}  // namespace

TEST_CASE("choi") {
  const CMatrix c = choi(Channel::identity(2));
  CHECK(c == link(2));
  CHECK(c.trace() == cplx(2.0));

  Rng rng(31);
  const CMatrix u = random_unitary(rng, 2);
  const CMatrix expect = kron(CMatrix::identity(2), u) * link(2) * kron(CMatrix::identity(2), u.adjoint());
  CHECK(max_abs_diff(choi(Channel::unitary(u)), expect) < 1e-14);

  // Kraus-sum oracle for full depolarisation: (1/2) sum_ij |i><j| ⊗ Tr(|i><j|) 1 = I4/2.
  CHECK(max_abs_diff(choi(Channel::depolarizing(2)), CMatrix::identity(4) / 2.0) < 1e-15);
}

TEST_CASE("choi_apply") {
  Rng rng(32);
  const CMatrix rho = random_state(rng, 2);
  CHECK(max_abs_diff(choi_apply(link(2), rho), rho) < 1e-15);
  CHECK(max_abs_diff(choi_apply(link(2), CMatrix::basis_projector(2, 0)), CMatrix::basis_projector(2, 0)) < 1e-15);

  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 2 + t % 2;
    const Channel ch = random_channel(rng, d, 1 + t % 4);
    const CMatrix r = random_state(rng, d);
    CHECK(max_abs_diff(choi_apply(choi(ch), r), ch.apply(r)) < 1e-10);
    // non-Hermitian input exposes a missing transpose
    const CMatrix g = random_ginibre(rng, d, d);
    CHECK(max_abs_diff(choi_apply(choi(ch), g), ch.apply(g)) < 1e-10);
  }
}

TEST_CASE("L_V projector") {
  Rng rng(33);
  for (int t = 0; t < 20; ++t) {
    const std::size_t dp = 1 + t % 2, df = 1 + (t / 2) % 2;
    const SpaceSpec s{{"P", dp}, {"A_I", 2}, {"A_O", 2}, {"B_I", 2}, {"B_O", 1 + t % 2}, {"F", df}};
    const CMatrix h = random_hermitian(rng, s.total_dim());
    const ProcessMatrix w{h, s};
    const CMatrix once = lv_project(w);
    const CMatrix twice = lv_project({once, s});
    CHECK(frobenius_norm(twice - once) < 1e-9);
  }
}

TEST_CASE("validity examples") {
  const ValidityReport ch = validate_process_matrix(channel_w());
  CHECK(ch.valid());
  CHECK(ch.trace == doctest::Approx(2.0));

  Rng rng(34);
  const ValidityReport st = validate_process_matrix(state_w(random_state(rng, 2), random_state(rng, 2)));
  CHECK(st.valid());
  CHECK(st.trace == doctest::Approx(4.0));

  const ValidityReport lp = validate_process_matrix(loop_w());
  CHECK(lp.psd);
  CHECK(lp.trace == doctest::Approx(2.0));
  CHECK_FALSE(lp.lv_fixed);
  CHECK_FALSE(lp.valid());

  // causally ordered channels: rho ⊗ [[E]] ⊗ 1
  for (int t = 0; t < 30; ++t) {
    const CMatrix w = kron({random_state(rng, 2), choi(random_channel(rng, 2, 1 + t % 4)), CMatrix::identity(2)});
    const ProcessMatrix pw{w, SpaceSpec{{"A_I", 2}, {"A_O", 2}, {"B_I", 2}, {"B_O", 2}}};
    CHECK(validate_process_matrix(pw).valid());
    CHECK(hs_classify(pw).forbidden.empty());
    CHECK(hs_classify(pw).b_to_a.empty());
  }

  CHECK_THROWS_AS(validate_process_matrix({CMatrix::identity(4), SpaceSpec{{"Q", 4}}}), ValidationError);
  CHECK_THROWS_AS(validate_process_matrix({CMatrix::identity(4), SpaceSpec{{"A_I", 2}}}), DimensionError);
}

TEST_CASE("CJ observables") {
  CHECK(pauli_cj_observable(3) == 0.5 * (kron(CMatrix::identity(2), pauli(3)) + kron(pauli(3), CMatrix::identity(2))));
  CHECK(max_abs_diff(pauli_cj_observable_projector_form(0), CMatrix::identity(4)) == 0.0);
  for (int i = 0; i < 4; ++i) CHECK(pauli_cj_observable(i) == pauli_cj_observable_projector_form(i));
  const auto ev = eig_hermitian(pauli_cj_observable(1)).values;
  const double expect[4] = {-1, 0, 0, 1};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(ev[k] - expect[k]) < 1e-12);

  // Sigma_i for a discarding measurement is the transpose of sigma_i.
  for (int i = 0; i < 4; ++i) CHECK(max_abs_diff(pauli_cj_operation(i, 1), pauli(i).transpose()) < 1e-15);
  CHECK_THROWS_AS(pauli_cj_operation(1, 3), DimensionError);
}

TEST_CASE("Born rule against direct evolution") {
  Rng rng(35);
  for (int t = 0; t < 20; ++t) {
    const CMatrix rho = random_state(rng, 2), u = random_unitary(rng, 2);
    const ProcessMatrix w = channel_process(rho, u);
    for (int i = 1; i < 4; ++i)
      for (int a : {1, -1})
        for (int j = 1; j < 4; ++j)
          for (int b : {1, -1}) {
            const CMatrix pa = pauli_projector(i, a), pb = pauli_projector(j, b);
            const CMatrix a_op = choi(std::vector<CMatrix>{pa});
            const CMatrix b_op = pb.transpose();
            const double direct = (pb * u * pa * rho * pa * u.adjoint()).trace().real();
            CHECK(std::abs(pm_probability(w, a_op, b_op) - direct) < 1e-12);
          }
  }
}

TEST_CASE("pm_pauli_correlation") {
  Rng rng(36);
  for (int t = 0; t < 20; ++t) {
    const CMatrix u = random_unitary(rng, 2);
    const ProcessMatrix w = channel_process(CMatrix::identity(2) / 2.0, u);
    for (int i = 1; i < 4; ++i)
      for (int j = 1; j < 4; ++j) {
        const double half = 0.5 * (pauli(j) * u * pauli(i) * u.adjoint()).trace().real();
        CHECK(std::abs(pm_pauli_correlation(w, i, j) - half) < 1e-12);
      }
    CHECK(pm_pauli_correlation(w, 0, 0) == doctest::Approx(1.0));
  }
  CHECK(pm_pauli_correlation(channel_process(CMatrix::identity(2) / 2.0, CMatrix::identity(2)), 1, 1) ==
        doctest::Approx(1.0));
}

TEST_CASE("PM-PDM equivalence") {
  CHECK(pm_pdm_equivalence_check(CMatrix::identity(2) / 2.0, CMatrix::identity(2)).max_abs_diff < 1e-10);
  CHECK(pm_pdm_equivalence_check(CMatrix::basis_projector(2, 0), hadamard()).max_abs_diff < 1e-10);
  Rng rng(37);
  for (int t = 0; t < 100; ++t)
    CHECK(pm_pdm_equivalence_check(random_state(rng, 2), random_unitary(rng, 2)).max_abs_diff < 1e-10);
}

TEST_CASE("Hilbert-Schmidt classification") {
  const HsReport ch = hs_classify(channel_w());
  CHECK(ch.identity == doctest::Approx(1.0));
  CHECK(ch.a_to_b.size() == 3);
  CHECK(ch.b_to_a.empty());
  CHECK(ch.separate.empty());
  CHECK(ch.forbidden.empty());
  // [[1]] = (II + XX - YY + ZZ) / 2
  for (const HsTerm& term : ch.a_to_b) {
    const auto& l = term.letters.letters();
    CHECK(l[0] == 0);
    CHECK(l[1] == l[2]);
    CHECK(term.coeff == doctest::Approx(l[1] == 2 ? -1.0 : 1.0));
  }

  Rng rng(38);
  const HsReport st = hs_classify(state_w(random_state(rng, 2), random_state(rng, 2)));
  CHECK(st.a_to_b.empty());
  CHECK(st.b_to_a.empty());
  CHECK(st.forbidden.empty());
  CHECK(st.separate.size() == 15);

  const HsReport lp = hs_classify(loop_w());
  CHECK_FALSE(lp.forbidden.empty());
}

TEST_CASE("slot handling") {
  const ProcessMatrix w = channel_w();
  CHECK(w.dim("B_O") == 1);
  CHECK(w.dim("A_O") == 2);
  const ProcessMatrix c = w.canonical();
  CHECK(c.spec.count() == 6);
  CHECK(c.matrix == w.matrix);
  CHECK_THROWS_AS(w.dim("Z"), ValidationError);
}
