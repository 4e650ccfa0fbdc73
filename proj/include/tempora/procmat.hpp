#pragma once

// Choi-Jamiolkowski operators and bipartite process matrices.
//
// Slot labels: P, A_I, A_O, B_I, B_O, F. Absent slots are dimension 1.

#include <string>
#include <vector>

#include "tempora/channel.hpp"
#include "tempora/qcore.hpp"

namespace tempora {

inline const std::vector<std::string> kSlotOrder = {"P", "A_I", "A_O", "B_I", "B_O", "F"};

struct ProcessMatrix {
  CMatrix matrix;
  SpaceSpec spec;

  // Hermitian within kInputTol, labels among the six slots, spec factorizes matrix.
  void validate_shape() const;
  // Same operator with all six slots present in canonical order.
  ProcessMatrix canonical() const;
  std::size_t dim(const std::string& slot) const;
};

// sum_ij |i><j| ⊗ M(|i><j|)
CMatrix choi(const Channel& ch);
CMatrix choi(const std::vector<CMatrix>& kraus);
// Tr_{in}[(rho^T ⊗ 1) M], the inverse of choi.
CMatrix choi_apply(const CMatrix& choi_m, const CMatrix& rho);

struct ValidityReport {
  bool psd = false;
  bool trace_ok = false;
  bool lv_fixed = false;
  double min_eig = 0.0;
  double trace = 0.0;
  double lv_residual = 0.0;  // ||W - L_V(W)||_F
  bool valid() const { return psd && trace_ok && lv_fixed; }
};

// Eleven-term projector onto the subspace allowed for bipartite processes.
CMatrix lv_project(const ProcessMatrix& w);
ValidityReport validate_process_matrix(const ProcessMatrix& w);

// 1/2 (1 ⊗ sigma_i + sigma_i ⊗ 1)
CMatrix pauli_cj_observable(int i);
// P_i^+ ⊗ P_i^+ - P_i^- ⊗ P_i^-
CMatrix pauli_cj_observable_projector_form(int i);

// Choi operator of the +/-1 weighted Luders measurement of sigma_i, input qubit,
// output dimension 1 (measure and discard) or 2 (measure and pass on):
//   sum_a a * choi(Luders instrument element a).
CMatrix pauli_cj_operation(int i, std::size_t d_out);

// Born rule p = Tr[W^{T_{A_I A_O B_I B_O}} (A ⊗ B)] for Choi operators A on
// A_I A_O and B on B_I B_O. P and F must be trivial.
double pm_probability(const ProcessMatrix& w, const CMatrix& a_op, const CMatrix& b_op);

// <Sigma_i Sigma_j> for the Pauli measurements on the two labs.
double pm_pauli_correlation(const ProcessMatrix& w, int i, int j);

struct HsTerm {
  PauliString letters;  // over A_I A_O B_I B_O
  double coeff;
};

struct HsReport {
  double identity = 0.0;
  std::vector<HsTerm> a_to_b;
  std::vector<HsTerm> b_to_a;
  std::vector<HsTerm> separate;
  std::vector<HsTerm> forbidden;
};

// Pauli coefficients c_p of W = (1/(d_AI d_BI)) sum_p c_p sigma_p, sorted by causal class.
// Coefficients below `cutoff` in magnitude are dropped.
HsReport hs_classify(const ProcessMatrix& w, double cutoff = 1e-12);

// W = rho^{A_I} ⊗ [[U]]^{A_O B_I} with trivial B_O.
ProcessMatrix channel_process(const CMatrix& rho, const CMatrix& u);

struct EquivalenceReport {
  double max_abs_diff = 0.0;
};

// Max over (i, j) of |pm_pauli_correlation(rho ⊗ [[U]]) - temporal_correlation_pair(rho, U, i, j)|.
EquivalenceReport pm_pdm_equivalence_check(const CMatrix& rho, const CMatrix& u);

}  // namespace tempora
