#pragma once

// Pseudo-density matrices over qubit measurement events.

#include <map>
#include <vector>

#include "tempora/channel.hpp"
#include "tempora/qcore.hpp"

namespace tempora {

inline constexpr double kPostselectionCutoff = 1e-12;

struct Pdm {
  CMatrix matrix;
  std::size_t events = 0;

  // Hermitian and unit trace within kInputTol, dimension 2^events. Not PSD in general.
  void validate() const;
};

// Pre-selected ket psi and post-selected ket phi.
struct TwoTimeState {
  CMatrix pre;
  CMatrix post;

  void validate() const;
};

using CorrelationMap = std::map<PauliString, double>;

// Expectation of the product of +/-1 outcomes of a sequence of instruments,
// with Luders updates between events:
//   sum over outcome strings of a_1...a_n Tr[I_n^{a_n} o C_{n-1} o ... o I_1^{a_1}(rho)].
// channels[k] acts between event k and k+1, so channels.size() == instruments.size() - 1.
double sequential_correlation(const CMatrix& rho, const std::vector<Instrument>& instruments,
                              const std::vector<Channel>& channels);

// Two-event single-qubit correlation <{sigma_i, sigma_j}> across the channel.
double temporal_correlation_pair(const CMatrix& rho, const Channel& ch, int i, int j);

// R = 2^{-n} sum_p corr(p) sigma_p. Missing strings count as zero.
Pdm pdm_from_correlations(std::size_t n, const CorrelationMap& corr);
// Tr[R sigma_p] for all 4^n strings.
CorrelationMap pdm_correlations(const Pdm& r);
// Sum of |negative eigenvalues|.
double pdm_negativity(const Pdm& r);

// Two-event PDM of a qubit sent through a channel:
//   R = (rho ⊗ 1/2) E + E (rho ⊗ 1/2),  E = sum_ij |i><j| ⊗ ch(|j><i|).
Pdm pdm_bipartite_channel(const CMatrix& rho, const Channel& ch);

// Three events on one qubit: measure i, evolve u, measure j, evolve u^†, measure k.
double tripartite_loop_correlation(const CMatrix& rho, const CMatrix& u, int i, int j, int k);

// Two-event correlation conditioned on a final post-selection onto eta.
double postselected_correlation(const CMatrix& rho, const Channel& ch, int i, int j, const CMatrix& eta);
// Normalisation p_ij(eta) of the above.
double postselection_probability(const CMatrix& rho, const Channel& ch, int i, int j, const CMatrix& eta);
// 8x8 operator 1/4 sum_ij <{sigma_i, sigma_j, eta}> sigma_i ⊗ sigma_j ⊗ eta.
Pdm pdm_postselected(const CMatrix& rho, const Channel& ch, const CMatrix& eta);

// p(a) = sum_mu |<phi|E_{a,mu}|psi>|^2 / sum over all outcomes.
double two_time_outcome_prob(const TwoTimeState& tt, const Instrument& instr, int a);
std::map<int, double> two_time_distribution(const TwoTimeState& tt, const Instrument& instr);

// Instrument whose Kraus operators are the square roots of the effects.
Instrument instrument_from_povm(const Povm& povm);

}  // namespace tempora
