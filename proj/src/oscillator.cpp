#include "tempora/oscillator.hpp"

#include <algorithm>
#include <cmath>

#include "tempora/errors.hpp"

namespace tempora {

namespace {

void require_positive_tau(double tau) {
  if (!(tau > 0) || !std::isfinite(tau)) throw ValidationError("tau must be positive");
}

}  // namespace

void OscParams::validate() const {
  for (double v : {m, omega, hbar, beta})
    if (!(v > 0) || !std::isfinite(v)) throw ValidationError("oscillator parameters must be positive");
  if (n_lattice < 8) throw ValidationError("lattice needs at least 8 sites");
}

double euclidean_propagator(const OscParams& p, double tau, double q1, double q2) {
  p.validate();
  require_positive_tau(tau);
  const double wt = p.omega * tau;
  const double sh = std::sinh(wt);
  const double pref = std::sqrt(p.m * p.omega / (2.0 * M_PI * p.hbar * sh));
  const double expo = -p.m * p.omega / (2.0 * p.hbar * sh) * ((q1 * q1 + q2 * q2) * std::cosh(wt) - 2.0 * q1 * q2);
  return pref * std::exp(expo);
}

double partition_function_closed(const OscParams& p) {
  p.validate();
  return 1.0 / (2.0 * std::sinh(p.beta * p.hbar * p.omega / 2.0));
}

std::vector<double> lattice_spectrum(const OscParams& p) {
  p.validate();
  const std::size_t n = p.n_lattice;
  const double eps = p.hbar * p.beta / double(n);
  std::vector<double> lam(n);
  for (std::size_t k = 0; k < n; ++k)
    lam[k] = 2.0 * p.m / eps * (1.0 - std::cos(2.0 * M_PI * double(k) / double(n))) + eps * p.m * p.omega * p.omega;
  return lam;
}

double lattice_twopoint(const OscParams& p, double t1, double t2) {
  p.validate();
  const double period = p.hbar * p.beta;
  for (double t : {t1, t2})
    if (!(t >= 0) || t > period * (1 + 1e-12)) throw ValidationError("times must lie in [0, hbar beta]");
  const std::size_t n = p.n_lattice;
  const double eps = period / double(n);
  const auto site = [&](double t) { return static_cast<std::size_t>(std::llround(t / eps)) % n; };
  const std::size_t sep = (site(t2) + n - site(t1)) % n;
  const std::vector<double> lam = lattice_spectrum(p);
  if (lam.front() <= 0) throw std::domain_error("lattice action is singular");
  // Circulant inverse: (K^{-1})_{ab} = (1/N) sum_k cos(2 pi k (a - b) / N) / lambda_k.
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += std::cos(2.0 * M_PI * double(k * sep % n) / double(n)) / lam[k];
  return p.hbar * s / double(n);
}

double closed_form_twopoint(const OscParams& p, double tau, Measure measure) {
  p.validate();
  require_positive_tau(tau);
  if (measure == Measure::AMPLITUDE) return p.hbar / (2.0 * p.omega * std::tanh(p.omega * tau / 2.0));
  const double sh = std::sinh(p.omega * tau);
  return p.hbar / (8.0 * p.m * p.omega * sh * sh);
}

std::vector<DiscrepancyRow> measure_discrepancy_report(const OscParams& p, const std::vector<double>& taus) {
  std::vector<DiscrepancyRow> rows;
  for (double tau : taus) {
    DiscrepancyRow r{};
    r.tau = tau;
    r.amplitude = closed_form_twopoint(p, tau, Measure::AMPLITUDE);
    r.probability = closed_form_twopoint(p, tau, Measure::PROBABILITY);
    r.lattice = lattice_twopoint(p, 0.0, tau);
    r.rel_gap = std::abs(r.amplitude - r.probability) / std::max(std::abs(r.amplitude), std::abs(r.probability));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace tempora
