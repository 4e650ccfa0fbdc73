#include "tempora/pdm.hpp"

#include <cmath>
#include <functional>

#include "tempora/errors.hpp"

namespace tempora {

namespace {

void require_qubit_state(const CMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw DimensionError("expected a single-qubit state");
  require_density_matrix(rho, "rho");
}

void require_qubit_channel(const Channel& ch) {
  ch.validate();
  if (ch.dim_in() != 2 || ch.dim_out() != 2) throw DimensionError("expected a single-qubit channel");
}

void require_pauli_index(int i) {
  if (i < 0 || i > 3) throw ValidationError("Pauli index must be in 0..3");
}

CMatrix sqrt_psd(const CMatrix& e) {
  const EigenSystem es = eig_hermitian(e);
  const std::size_t d = e.rows();
  CMatrix out(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const double lam = std::max(es.values[k], 0.0);
    if (lam == 0.0) continue;
    const double s = std::sqrt(lam);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out(r, c) += s * es.vectors(r, k) * std::conj(es.vectors(c, k));
  }
  return out;
}

// Sum over (alpha, beta) of f(alpha, beta) * Tr[eta P_j^b ch(P_i^a rho P_i^a) P_j^b].
template <class F>
double postselected_sum(const CMatrix& rho, const Channel& ch, int i, int j, const CMatrix& eta, F weight) {
  double acc = 0.0;
  for (int a : {+1, -1}) {
    const CMatrix pa = pauli_projector(i, a);
    const CMatrix mid = ch.apply(pa * rho * pa);
    for (int b : {+1, -1}) {
      const CMatrix pb = pauli_projector(j, b);
      acc += weight(a, b) * trace_of_product(eta, pb * mid * pb).real();
    }
  }
  return acc;
}

void validate_postselection(const CMatrix& rho, const Channel& ch, int i, int j, const CMatrix& eta) {
  require_qubit_state(rho);
  require_qubit_channel(ch);
  require_pauli_index(i);
  require_pauli_index(j);
  if (eta.rows() != 2 || eta.cols() != 2) throw DimensionError("post-selection state must be a qubit");
  require_density_matrix(eta, "eta");
}

}  // namespace

void Pdm::validate() const {
  if (events > 10 || matrix.rows() != (std::size_t{1} << events) || !matrix.is_square())
    throw DimensionError("PDM dimension must be 2^events");
  if (!is_hermitian(matrix, kInputTol)) throw ValidationError("PDM is not Hermitian");
  if (std::abs(matrix.trace() - 1.0) > kInputTol) throw ValidationError("PDM trace is not 1");
}

void TwoTimeState::validate() const {
  if (pre.cols() != 1 || post.cols() != 1 || pre.rows() != post.rows())
    throw DimensionError("two-time state needs two kets of equal dimension");
  if (std::abs(frobenius_norm(pre) - 1.0) > kInputTol || std::abs(frobenius_norm(post) - 1.0) > kInputTol)
    throw ValidationError("two-time state kets must be normalised");
}

double sequential_correlation(const CMatrix& rho, const std::vector<Instrument>& instruments,
                              const std::vector<Channel>& channels) {
  if (instruments.empty()) return 1.0;
  if (channels.size() + 1 != instruments.size())
    throw DimensionError("need exactly one channel between consecutive events");
  require_density_matrix(rho, "rho");
  for (const auto& in : instruments) {
    in.validate();
    in.require_pm_one_labels();
  }
  for (const auto& ch : channels) ch.validate();

  std::function<double(std::size_t, const CMatrix&)> branch = [&](std::size_t k, const CMatrix& sigma) -> double {
    const Instrument& in = instruments[k];
    if (in.dim_in() != sigma.rows()) throw DimensionError("instrument input dimension does not match the state");
    double acc = 0.0;
    for (const auto& [a, _] : in.outcomes) {
      CMatrix next = in.apply(a, sigma);
      if (k + 1 == instruments.size()) {
        acc += a * next.trace().real();
      } else {
        acc += a * branch(k + 1, channels[k].apply(next));
      }
    }
    return acc;
  };
  return branch(0, rho);
}

double temporal_correlation_pair(const CMatrix& rho, const Channel& ch, int i, int j) {
  require_qubit_state(rho);
  require_qubit_channel(ch);
  require_pauli_index(i);
  require_pauli_index(j);
  return sequential_correlation(rho, {Instrument::pauli(i), Instrument::pauli(j)}, {ch});
}

Pdm pdm_from_correlations(std::size_t n, const CorrelationMap& corr) {
  if (n == 0 || n > 10) throw DimensionError("PDM event count must be in 1..10");
  const auto id = corr.find(PauliString::identity(n));
  if (id == corr.end()) throw ValidationError("correlations must include the identity string");
  if (std::abs(id->second - 1.0) > kInputTol) throw ValidationError("identity correlation must equal 1");
  const std::size_t d = std::size_t{1} << n;
  CMatrix r(d, d);
  for (const auto& [p, v] : corr) {
    if (p.length() != n) throw DimensionError("Pauli string length differs from event count");
    if (!std::isfinite(v) || v < -1.0 - kInputTol || v > 1.0 + kInputTol)
      throw ValidationError("correlation for " + p.to_string() + " outside [-1, 1]");
    if (v != 0.0) r += v * pauli_matrix(p);
  }
  return Pdm{r / static_cast<double>(d), n};
}

CorrelationMap pdm_correlations(const Pdm& r) {
  r.validate();
  CorrelationMap out;
  const std::size_t count = std::size_t{1} << (2 * r.events);
  for (std::size_t code = 0; code < count; ++code) {
    PauliString p = PauliString::from_index(r.events, code);
    out[p] = trace_of_product(r.matrix, pauli_matrix(p)).real();
  }
  return out;
}

double pdm_negativity(const Pdm& r) {
  double neg = 0.0;
  for (double v : eig_hermitian(r.matrix).values)
    if (v < 0) neg -= v;
  return neg;
}

Pdm pdm_bipartite_channel(const CMatrix& rho, const Channel& ch) {
  require_qubit_state(rho);
  require_qubit_channel(ch);
  CMatrix e(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CMatrix ij(2, 2), ji(2, 2);
      ij(i, j) = 1.0;
      ji(j, i) = 1.0;
      e += kron(ij, ch.apply(ji));
    }
  const CMatrix half = kron(rho, 0.5 * CMatrix::identity(2));
  CMatrix r = half * e + e * half;
  return Pdm{0.5 * (r + r.adjoint()), 2};
}

double tripartite_loop_correlation(const CMatrix& rho, const CMatrix& u, int i, int j, int k) {
  require_qubit_state(rho);
  if (u.rows() != 2) throw DimensionError("expected a single-qubit unitary");
  require_unitary(u, "u");
  require_pauli_index(i);
  require_pauli_index(j);
  require_pauli_index(k);
  return sequential_correlation(rho, {Instrument::pauli(i), Instrument::pauli(j), Instrument::pauli(k)},
                                {Channel::unitary(u), Channel::unitary(u.adjoint())});
}

double postselection_probability(const CMatrix& rho, const Channel& ch, int i, int j, const CMatrix& eta) {
  validate_postselection(rho, ch, i, j, eta);
  return postselected_sum(rho, ch, i, j, eta, [](int, int) { return 1.0; });
}

double postselected_correlation(const CMatrix& rho, const Channel& ch, int i, int j, const CMatrix& eta) {
  const double p = postselection_probability(rho, ch, i, j, eta);
  if (p <= kPostselectionCutoff) throw ImpossiblePostselection("post-selection probability is zero");
  return postselected_sum(rho, ch, i, j, eta, [](int a, int b) { return double(a * b); }) / p;
}

Pdm pdm_postselected(const CMatrix& rho, const Channel& ch, const CMatrix& eta) {
  CMatrix r(8, 8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double c = postselected_correlation(rho, ch, i, j, eta);
      r += c * kron({pauli(i), pauli(j), eta});
    }
  r = 0.25 * r;
  return Pdm{0.5 * (r + r.adjoint()), 3};
}

std::map<int, double> two_time_distribution(const TwoTimeState& tt, const Instrument& instr) {
  tt.validate();
  instr.validate();
  if (instr.dim_in() != tt.pre.rows() || instr.dim_out() != tt.post.rows())
    throw DimensionError("instrument does not match the two-time state");
  const CMatrix bra = tt.post.adjoint();
  std::map<int, double> w;
  double total = 0.0;
  for (const auto& [a, ks] : instr.outcomes) {
    double s = 0.0;
    for (const auto& k : ks) s += std::norm((bra * k * tt.pre)(0, 0));
    w[a] = s;
    total += s;
  }
  if (total <= kPostselectionCutoff) throw ImpossiblePostselection("pre- and post-selected states are incompatible");
  for (auto& [a, v] : w) v /= total;
  return w;
}

double two_time_outcome_prob(const TwoTimeState& tt, const Instrument& instr, int a) {
  const auto dist = two_time_distribution(tt, instr);
  const auto it = dist.find(a);
  if (it == dist.end()) throw ValidationError("instrument has no outcome " + std::to_string(a));
  return it->second;
}

Instrument instrument_from_povm(const Povm& povm) {
  povm.validate();
  Instrument in;
  for (const auto& [b, e] : povm.effects) in.outcomes[b] = {sqrt_psd(e)};
  return in;
}

}  // namespace tempora
