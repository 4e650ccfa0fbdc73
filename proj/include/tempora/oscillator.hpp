#pragma once

// Euclidean harmonic oscillator: kernel, partition function, periodic lattice
// two-point function, and the two closed-form correlators.

#include <vector>

namespace tempora {

struct OscParams {
  double m = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double beta = 8.0;
  std::size_t n_lattice = 512;

  // All positive and n_lattice >= 8.
  void validate() const;
};

// <q2| exp(-H tau / hbar) |q1>
double euclidean_propagator(const OscParams& p, double tau, double q1, double q2);

// 1 / (2 sinh(beta hbar omega / 2))
double partition_function_closed(const OscParams& p);

// Eigenvalues of the circulant lattice action, k = 0..N-1.
std::vector<double> lattice_spectrum(const OscParams& p);
// hbar (K^{-1})_{ab} with sites round(t / eps) mod N, eps = hbar beta / N.
double lattice_twopoint(const OscParams& p, double t1, double t2);

enum class Measure { AMPLITUDE, PROBABILITY };

// AMPLITUDE: hbar / (2 omega tanh(omega tau / 2)); PROBABILITY: hbar / (8 m omega sinh^2(omega tau)).
double closed_form_twopoint(const OscParams& p, double tau, Measure measure);

struct DiscrepancyRow {
  double tau;
  double amplitude;
  double probability;
  double lattice;
  double rel_gap;  // |amplitude - probability| / max(|amplitude|, |probability|)
};

std::vector<DiscrepancyRow> measure_discrepancy_report(const OscParams& p, const std::vector<double>& taus);

}  // namespace tempora
