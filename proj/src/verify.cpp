#include "tempora/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tempora/causal.hpp"
#include "tempora/histories.hpp"
#include "tempora/oscillator.hpp"
#include "tempora/otoc.hpp"
#include "tempora/pdm.hpp"
#include "tempora/procmat.hpp"

namespace tempora {

namespace {

std::size_t uniform_int(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

CMatrix swap4() {
  CMatrix s(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) s(2 * i + j, 2 * j + i) = 1.0;
  return s;
}

}  // namespace

nlohmann::json to_json(const CheckResult& r) {
  return nlohmann::json{{"name", r.name},   {"passed", r.passed}, {"max_error", r.max_error},
                        {"threshold", r.threshold}, {"cases", r.cases}, {"detail", r.detail}};
}

HistoryInstance random_history_instance(Rng& rng, std::size_t steps, std::size_t qubits) {
  const std::size_t d = std::size_t{1} << qubits;
  HistoryInstance h;
  h.rho = random_state(rng, d);
  for (std::size_t k = 0; k + 1 < steps; ++k) h.unitaries.push_back(random_unitary(rng, d));
  for (std::size_t k = 0; k < steps; ++k)
    h.paulis.push_back(PauliString::from_index(qubits, uniform_int(rng, 0, (std::size_t{1} << (2 * qubits)) - 1)));
  return h;
}

Strategy random_correlation_strategy(Rng& rng) {
  Strategy s;
  const std::size_t nl = uniform_int(rng, 1, 3);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double total = 0.0;
  for (std::size_t k = 0; k < nl; ++k) {
    s.lambda_dist.push_back(u01(rng) + 0.05);
    total += s.lambda_dist.back();
  }
  for (auto& w : s.lambda_dist) w /= total;
  s.memory = random_channel(rng, 2, uniform_int(rng, 1, 3));
  for (std::size_t k = 0; k < nl; ++k) {
    // Four Kraus operators from one random channel, split between the two outcomes.
    const Channel c = random_channel(rng, 2, 4);
    Instrument in;
    in.outcomes[+1] = {c.kraus[0], c.kraus[1]};
    in.outcomes[-1] = {c.kraus[2], c.kraus[3]};
    s.first.push_back(std::move(in));
    // E+ = V diag(u1, u2) V^†, E- = 1 - E+.
    const CMatrix v = random_unitary(rng, 2);
    const double diag[2] = {u01(rng), u01(rng)};
    CMatrix ep = v * CMatrix::diagonal(diag) * v.adjoint();
    ep = 0.5 * (ep + ep.adjoint());
    Povm q;
    q.effects[+1] = ep;
    q.effects[-1] = CMatrix::identity(2) - ep;
    s.second.push_back({{+1, q}, {-1, q}});
  }
  return s;
}

CheckResult verify_causal_demo(double tol) {
  CheckResult r{"causal_demo", false, 0.0, tol, 2, ""};
  const double g = expected_gyni_violation();
  const auto pm = indefinite_order_demo(DemoRoute::PM);
  const auto pdm = indefinite_order_demo(DemoRoute::PDM);
  r.max_error = std::max({std::abs(pm.gyni - g), std::abs(pdm.gyni - g), std::abs(pm.lgyni - (g + 0.25)),
                          std::abs(pdm.lgyni - (g + 0.25))});
  double agree = 0.0;
  for (std::size_t i = 0; i < pm.table.p.size(); ++i) agree = std::max(agree, std::abs(pm.table.p[i] - pdm.table.p[i]));
  r.passed = r.max_error <= tol && agree <= 1e-10 && !pm.causal && !pdm.causal;
  r.detail = "gyni=" + fmt(pm.gyni) + " lgyni=" + fmt(pm.lgyni) + " route_gap=" + fmt(agree);
  return r;
}

CheckResult verify_polytope() {
  CheckResult r{"polytope", false, 0.0, 0.0, 0, ""};
  const auto v = enumerate_causal_vertices(2, 2, 2, 2);
  const auto v1 = enumerate_causal_vertices(1, 1, 2, 2);
  bool facets = true;
  for (const auto& t : v) facets = facets && facet_value(t, Facet::GYNI) <= 0.5 && facet_value(t, Facet::LGYNI) <= 0.75;
  r.cases = v.size() + v1.size();
  r.passed = v.size() == 112 && v1.size() == 4 && facets;
  r.detail = "vertices(2,2,2,2)=" + std::to_string(v.size()) + " vertices(1,1,2,2)=" + std::to_string(v1.size());
  return r;
}

CheckResult verify_pm_pdm(std::uint64_t seed, std::size_t n, double tol) {
  CheckResult r{"pm_pdm", false, 0.0, tol, n, ""};
  Rng rng(seed);
  for (std::size_t s = 0; s < n; ++s) {
    const CMatrix rho = random_state(rng, 2);
    const CMatrix u = random_unitary(rng, 2);
    const ProcessMatrix w = channel_process(rho, u);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const double pm = pm_pauli_correlation(w, i, j);
        r.max_error = std::max(r.max_error, std::abs(pm - temporal_correlation_pair(rho, Channel::unitary(u), i, j)));
        if (i > 0 && j > 0) {
          const double closed = 0.5 * trace_of_product(pauli(j), u * pauli(i) * u.adjoint()).real();
          r.max_error = std::max(r.max_error, std::abs(pm - closed));
        }
      }
  }
  r.passed = r.max_error <= tol;
  return r;
}

CheckResult verify_histories_pdm(std::uint64_t seed, std::size_t n, double tol) {
  CheckResult r{"histories_pdm", false, 0.0, tol, n, ""};
  Rng rng(seed);
  double herm = 0.0, norm = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    const auto h = random_history_instance(rng, uniform_int(rng, 1, 3), uniform_int(rng, 1, 2));
    const double hist = correlation_from_histories(h.rho, h.unitaries, h.paulis);
    std::vector<Instrument> ins;
    for (const auto& p : h.paulis) ins.push_back(Instrument::from_observable(pauli_matrix(p)));
    std::vector<Channel> chs;
    for (const auto& u : h.unitaries) chs.push_back(Channel::unitary(u));
    r.max_error = std::max(r.max_error, std::abs(hist - sequential_correlation(h.rho, ins, chs)));

    const CMatrix d = decoherence_matrix(pauli_history_family(h.rho, h.unitaries, h.paulis));
    herm = std::max(herm, max_abs_diff(d, d.adjoint()));
    cplx total = 0.0;
    for (const auto& z : d.entries()) total += z;
    norm = std::max({norm, std::abs(total - 1.0), std::abs(d.trace() - 1.0)});
  }
  r.passed = r.max_error <= tol && herm <= kCheckTol && norm <= kCheckTol;
  r.detail = "hermiticity=" + fmt(herm) + " normalisation=" + fmt(norm);
  return r;
}

CheckResult verify_games_pdm(std::uint64_t seed, std::size_t n, double tol) {
  CheckResult r{"games_pdm", false, 0.0, tol, n, ""};
  Rng rng(seed);
  for (std::size_t s = 0; s < n; ++s) {
    const Strategy st = random_correlation_strategy(rng);
    const CMatrix tau = random_state(rng, 2);
    double pdm = 0.0;
    for (std::size_t k = 0; k < st.lambda_dist.size(); ++k)
      pdm += st.lambda_dist[k] *
             sequential_correlation(tau, {st.first[k], instrument_from_povm(st.second[k].at(+1))}, {st.memory});
    r.max_error = std::max(r.max_error, std::abs(qcsg_temporal_correlation(st, tau) - pdm));
  }
  r.passed = r.max_error <= tol;
  return r;
}

CheckResult verify_otoc_pdm(std::uint64_t seed, std::size_t n, double tol) {
  CheckResult r{"otoc_pdm", false, 0.0, tol, n, ""};
  Rng rng(seed);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t d = std::size_t{1} << uniform_int(rng, 1, 3);
    const CMatrix a = random_projector(rng, d, uniform_int(rng, 1, d));
    const CMatrix b = random_ginibre(rng, d, d);
    const CMatrix u = random_unitary(rng, d);
    const CMatrix rho = CMatrix::identity(d) / double(d);
    const cplx direct = otoc_direct(OtocSpec{a, b, u, rho});
    r.max_error = std::max(r.max_error, std::abs(otoc_via_pdm(a, b, u, rho) - direct.real()));
  }
  r.passed = r.max_error <= tol;
  return r;
}

CheckResult verify_chsh() {
  CheckResult r{"chsh", false, 0.0, 1e-9, 2, ""};
  const double classical = chsh_classical_optimum();
  const CMatrix phi = projector_onto(CMatrix::column(std::vector<cplx>{M_SQRT1_2, 0, 0, M_SQRT1_2}));
  const double q = chsh_quantum_value(phi, chsh_optimal_angles());
  const double target = std::pow(std::cos(M_PI / 8), 2);
  r.max_error = std::abs(q - target);
  r.passed = classical == 0.75 && r.max_error <= 1e-9;
  r.detail = "classical=" + fmt(classical) + " quantum=" + fmt(q);
  return r;
}

CheckResult verify_pdm_structure(std::uint64_t seed, std::size_t n, double tol) {
  CheckResult r{"pdm_structure", false, 0.0, tol, n + 1, ""};
  const Pdm base = pdm_bipartite_channel(CMatrix::identity(2) / 2.0, Channel::identity(2));
  const double swap_err = max_abs_diff(base.matrix, 0.5 * swap4());
  const double eig_err = std::abs(min_eigenvalue(base.matrix) + 0.5);
  Rng rng(seed);
  double marg = 0.0;
  const SpaceSpec ab{{"A", 2}, {"B", 2}};
  for (std::size_t s = 0; s < n; ++s) {
    const CMatrix rho = random_state(rng, 2);
    const Channel ch = random_channel(rng, 2, uniform_int(rng, 1, 4));
    marg = std::max(marg, max_abs_diff(partial_trace(pdm_bipartite_channel(rho, ch).matrix, ab, {"A"}), rho));
  }
  r.max_error = std::max({swap_err, eig_err, marg});
  r.passed = swap_err == 0.0 && eig_err <= tol && marg <= tol;
  r.detail = "swap_err=" + fmt(swap_err) + " min_eig_err=" + fmt(eig_err) + " marginal_err=" + fmt(marg);
  return r;
}

CheckResult verify_process_validity() {
  CheckResult r{"process_validity", false, 0.0, kCheckTol, 3, ""};
  const CMatrix id2 = CMatrix::identity(2);
  const CMatrix phi = choi(Channel::identity(2));
  const ProcessMatrix channel_w{kron(id2 / 2.0, phi), SpaceSpec{{"A_I", 2}, {"A_O", 2}, {"B_I", 2}}};
  const CMatrix rho = CMatrix{{0.75, 0.25}, {0.25, 0.25}};
  const ProcessMatrix state_w{kron({rho, rho, id2, id2}), SpaceSpec{{"A_I", 2}, {"B_I", 2}, {"A_O", 2}, {"B_O", 2}}};
  const ProcessMatrix loop_w{0.5 * kron(phi, phi), SpaceSpec{{"A_O", 2}, {"B_I", 2}, {"B_O", 2}, {"A_I", 2}}};
  const auto a = validate_process_matrix(channel_w);
  const auto b = validate_process_matrix(state_w);
  const auto c = validate_process_matrix(loop_w);
  r.max_error = std::max(a.lv_residual, b.lv_residual);
  r.passed = a.valid() && b.valid() && !c.lv_fixed;
  r.detail = "channel_lv=" + fmt(a.lv_residual) + " state_lv=" + fmt(b.lv_residual) + " loop_lv=" + fmt(c.lv_residual);
  return r;
}

CheckResult verify_oscillator() {
  CheckResult r{"oscillator_discrepancy", false, 0.0, 1e-2, 4, ""};
  OscParams p;
  OscParams fine = p;
  fine.n_lattice = 2 * p.n_lattice;
  const std::vector<double> taus = {0.5, 1.0, 2.0, 3.0};
  bool gaps = true;
  double conv = 0.0;
  for (const auto& row : measure_discrepancy_report(p, taus)) {
    gaps = gaps && row.rel_gap > 0.1;
    const double f = lattice_twopoint(fine, 0.0, row.tau);
    conv = std::max(conv, std::abs(row.lattice - f) / std::abs(f));
  }
  r.max_error = conv;
  r.passed = gaps && conv < 1e-2;
  r.detail = "lattice_refinement=" + fmt(conv) + (gaps ? " gaps>10%" : " gap<=10% somewhere");
  return r;
}

std::vector<CheckResult> verify_all(std::uint64_t seed, double tol) {
  return {verify_causal_demo(),        verify_polytope(),         verify_pm_pdm(seed, 100, tol),
          verify_histories_pdm(seed, 500, tol), verify_games_pdm(seed, 200, tol), verify_otoc_pdm(seed, 200, tol),
          verify_chsh(),               verify_pdm_structure(seed, 100, tol), verify_process_validity(),
          verify_oscillator()};
}

}  // namespace tempora
