#pragma once

// CHSH, quantum-classical non-local games and signalling games with a quantum memory.

#include <array>
#include <map>
#include <vector>

#include "tempora/channel.hpp"
#include "tempora/qcore.hpp"

namespace tempora {

// Payoff game over classical question indices x < n_x, y < n_y and answer
// indices a < n_a, b < n_b. Answer index = position of the outcome label in
// ascending label order.
struct GameSpec {
  std::size_t n_x = 0, n_y = 0, n_a = 0, n_b = 0;
  std::vector<double> pi;  // [x][y]
  std::vector<double> l;   // [a][b][x][y]

  double prior(std::size_t x, std::size_t y) const { return pi[x * n_y + y]; }
  double payoff(std::size_t a, std::size_t b, std::size_t x, std::size_t y) const {
    return l[((a * n_b + b) * n_x + x) * n_y + y];
  }
  void validate() const;

  // Uniform questions, win iff a xor b = x and y.
  static GameSpec chsh();
};

struct Strategy {
  std::vector<double> lambda_dist;
  std::vector<Instrument> first;                // per lambda, X -> A
  Channel memory;                               // A -> B
  std::vector<std::map<int, Povm>> second;      // per lambda: a -> POVM on B ⊗ Y

  void validate() const;
};

// p(a, b) over outcome labels, row-major in ascending label order.
struct OutcomeTable {
  std::vector<int> a_labels;
  std::vector<int> b_labels;
  std::vector<double> p;

  double at(std::size_t ia, std::size_t ib) const { return p[ia * b_labels.size() + ib]; }
  double sum() const;
};

double chsh_classical_optimum();
// Observables cos(t) Z + sin(t) X; angles = (A_0, A_1, B_0, B_1). Outcome 0 is the +1 eigenvalue.
double chsh_quantum_value(const CMatrix& state, const std::array<double, 4>& angles);
std::array<double, 4> chsh_optimal_angles();

// Tr[(P^a_{XA} ⊗ Q^b_{BY})(tau ⊗ rho_AB ⊗ omega)], state ordered X ⊗ A ⊗ B ⊗ Y.
OutcomeTable qc_nonlocal_prob(const CMatrix& tau_x, const CMatrix& omega_y, const CMatrix& rho_ab,
                              const Povm& povm_a, const Povm& povm_b);

// sum_lambda pi(lambda) Tr[(N(Phi^{a|lambda}(tau)) ⊗ omega) Psi^{b|a,lambda}]
OutcomeTable qcsg_prob(const Strategy& s, const CMatrix& tau_x, const CMatrix& omega_y);

// sum_{x,y} pi(x,y) sum_{a,b} l(a,b|x,y) p(a,b|x,y) with quantum questions taus[x], omegas[y].
double qcsg_payoff(const GameSpec& g, const Strategy& s, const std::vector<CMatrix>& taus,
                   const std::vector<CMatrix>& omegas);

// sum_{a,b} a b p(a,b|x) with a trivial (1x1) late input. Labels must be +/-1.
double qcsg_temporal_correlation(const Strategy& s, const CMatrix& tau_x);

// The optimal CHSH strategy rewritten as a signalling game: classical question
// register X, identity qubit memory, question register Y read by the final POVM.
Strategy chsh_as_signalling_game(const std::array<double, 4>& angles);
std::vector<CMatrix> classical_questions(std::size_t n);

}  // namespace tempora
