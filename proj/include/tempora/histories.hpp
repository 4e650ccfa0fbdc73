#pragma once

// Decoherence functionals over projective history families.
//
// Histories are indexed by one projector index per step. Flat history codes are
// mixed-radix with the first step most significant.

#include <vector>

#include "tempora/qcore.hpp"

namespace tempora {

inline constexpr double kConsistencyTol = 1e-8;

struct HistoryStep {
  CMatrix unitary;                  // evolution from the previous time to this one
  std::vector<CMatrix> projectors;  // exhaustive, mutually exclusive
};

struct HistoryFamily {
  CMatrix rho0;
  std::vector<HistoryStep> steps;

  void validate() const;
  std::size_t dim() const { return rho0.rows(); }
  std::vector<std::size_t> alphabet_sizes() const;
  std::size_t history_count() const;
  std::vector<std::size_t> decode(std::size_t code) const;
  std::size_t encode(const std::vector<std::size_t>& alpha) const;
};

// Tr[C_a rho C_a'^†], C_a = P^n_{a_n}(t_n) ... P^1_{a_1}(t_1) with Heisenberg projectors
// V_k^† P V_k, V_k = U_k ... U_1.
cplx decoherence_functional(const HistoryFamily& f, const std::vector<std::size_t>& alpha,
                            const std::vector<std::size_t>& alpha_p);

struct HistoryProbabilities {
  std::vector<std::vector<std::size_t>> histories;
  std::vector<double> values;
};

HistoryProbabilities history_probabilities(const HistoryFamily& f);

// weak: max |Re D| off the diagonal <= tol; strong: max |D| off the diagonal <= tol.
bool is_consistent(const HistoryFamily& f, bool strong, double tol = kConsistencyTol);
double max_off_diagonal(const HistoryFamily& f, bool strong);

// sum over histories of a_1...a_n D(a, a), single qubit, projectors (1 ± sigma)/2.
// unitaries[k] acts between measurement k and k+1, so unitaries.size() == paulis.size() - 1.
double correlation_from_histories(const CMatrix& rho, const std::vector<CMatrix>& unitaries,
                                  const std::vector<int>& paulis);
// Same with Pauli strings on one or more qubits.
double correlation_from_histories(const CMatrix& rho, const std::vector<CMatrix>& unitaries,
                                  const std::vector<PauliString>& paulis);

// Family whose k-th step measures the +/-1 eigenprojectors of sigma_{p_k} (outcome +1 at index 0).
HistoryFamily pauli_history_family(const CMatrix& rho, const std::vector<CMatrix>& unitaries,
                                   const std::vector<PauliString>& paulis);

// Merge projector indices at one step according to a partition of 0..b-1.
HistoryFamily coarse_grain(const HistoryFamily& f, std::size_t step,
                           const std::vector<std::vector<std::size_t>>& partition);

// Matrix with entry (code(a), code(a')) = D(a, a').
CMatrix decoherence_matrix(const HistoryFamily& f);

}  // namespace tempora
