#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "tempora/errors.hpp"
#include "tempora/oscillator.hpp"
#include "tempora/random.hpp"

using namespace tempora;

namespace {

// Dense periodic lattice action, inverted by Cholesky.
Eigen::MatrixXd dense_inverse(const OscParams& p) {
  const std::size_t n = p.n_lattice;
  const double eps = p.hbar * p.beta / double(n);
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    k(i, i) += 2.0 * p.m / eps + eps * p.m * p.omega * p.omega;
    k(i, (i + 1) % n) -= p.m / eps;
    k((i + 1) % n, i) -= p.m / eps;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(k);
  REQUIRE(llt.info() == Eigen::Success);
  return llt.solve(Eigen::MatrixXd::Identity(n, n));
}

std::vector<double> grid() {
  std::vector<double> q(2001);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = -10.0 + 0.01 * double(i);
  return q;
}

double trapezoid(const std::vector<double>& f, double h) {
  double acc = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += f[i];
  return acc * h;
}

}  // namespace

TEST_CASE("propagator") {
  const OscParams p;
  CHECK(euclidean_propagator(p, 1.0, 0.0, 0.0) ==
        doctest::Approx(std::sqrt(1.0 / (2.0 * std::numbers::pi * std::sinh(1.0)))).epsilon(1e-14));

  Rng rng(81);
  std::normal_distribution<double> g(0.0, 1.5);
  for (int t = 0; t < 20; ++t) {
    const double a = g(rng), b = g(rng), tau = 0.2 + std::abs(g(rng));
    CHECK(euclidean_propagator(p, tau, a, b) == doctest::Approx(euclidean_propagator(p, tau, b, a)).epsilon(1e-15));
  }

  // semigroup by trapezoid quadrature
  const auto q = grid();
  for (auto [t1, t2, q1, q2] : {std::array<double, 4>{0.4, 0.7, 0.3, -0.5}, {1.0, 1.0, 0.0, 0.0}, {0.3, 2.0, 1.2, 0.8}}) {
    std::vector<double> f(q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
      f[i] = euclidean_propagator(p, t2, q2, q[i]) * euclidean_propagator(p, t1, q[i], q1);
    CHECK(std::abs(trapezoid(f, 0.01) - euclidean_propagator(p, t1 + t2, q1, q2)) < 1e-4);
  }

  // trace of the kernel at tau = beta hbar against Z0
  for (double beta : {2.0, 4.0}) {
    OscParams pb = p;
    pb.beta = beta;
    std::vector<double> f(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) f[i] = euclidean_propagator(pb, beta * pb.hbar, q[i], q[i]);
    CHECK(std::abs(trapezoid(f, 0.01) - partition_function_closed(pb)) < 1e-6);
  }
  CHECK_THROWS_AS(euclidean_propagator(p, -1.0, 0, 0), ValidationError);
}

TEST_CASE("partition function") {
  OscParams p;
  p.beta = 2.0;
  CHECK(partition_function_closed(p) == doctest::Approx(1.0 / (2.0 * std::sinh(1.0))).epsilon(1e-14));
  CHECK(partition_function_closed(p) == doctest::Approx(0.42546).epsilon(1e-4));
  for (double beta : {0.5, 2.0, 7.0}) {
    p.beta = beta;
    CHECK(std::abs(partition_function_closed(p) - std::exp(-beta / 2) / (1 - std::exp(-beta))) < 1e-12);
  }
  p.beta = 20.0;
  CHECK(std::abs(partition_function_closed(p) / std::exp(-10.0) - 1.0) < 0.01);
}

TEST_CASE("lattice two-point") {
  for (std::size_t n : {8u, 16u, 33u}) {
    OscParams p;
    p.n_lattice = n;
    p.beta = 3.0;
    const Eigen::MatrixXd inv = dense_inverse(p);
    const double eps = p.beta / double(n);
    for (std::size_t a = 0; a < n; a += 3)
      for (std::size_t b = 0; b < n; b += 2)
        CHECK(std::abs(lattice_twopoint(p, eps * a, eps * b) - inv(a, b)) < 1e-12);
    for (double v : lattice_spectrum(p)) CHECK(v > 0);
  }

  OscParams p;
  const double fine = [] {
    OscParams q;
    q.n_lattice = 1024;
    return lattice_twopoint(q, 0.0, 0.0);
  }();
  CHECK(std::abs(lattice_twopoint(p, 0.0, 0.0) - fine) / fine < 1e-3);

  const double eps = p.hbar * p.beta / double(p.n_lattice);
  for (double s : {0.25, 1.5, 7.0})
    CHECK(std::abs(lattice_twopoint(p, 1.0, 2.5) - lattice_twopoint(p, 1.0 + s, std::fmod(2.5 + s, p.beta))) < 1e-12);
  (void)eps;

  OscParams stiff = p;
  stiff.omega = 5.0;
  double prev = lattice_twopoint(stiff, 0.0, 0.0);
  for (double tau = 0.25; tau < stiff.beta / 2; tau += 0.25) {
    const double v = lattice_twopoint(stiff, 0.0, tau);
    CHECK(v < prev);
    prev = v;
  }

  OscParams bad;
  bad.n_lattice = 4;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("closed forms and discrepancy") {
  const OscParams p;
  const double amp = closed_form_twopoint(p, 1.0, Measure::AMPLITUDE);
  const double prob = closed_form_twopoint(p, 1.0, Measure::PROBABILITY);
  CHECK(amp == doctest::Approx(1.0 / (2.0 * std::tanh(0.5))).epsilon(1e-14));
  CHECK(prob == doctest::Approx(1.0 / (8.0 * std::sinh(1.0) * std::sinh(1.0))).epsilon(1e-14));
  CHECK(amp == doctest::Approx(1.0820).epsilon(1e-4));
  CHECK(prob == doctest::Approx(0.09050).epsilon(1e-3));
  CHECK(amp / prob == doctest::Approx(11.96).epsilon(1e-3));

  const auto rows = measure_discrepancy_report(p, {0.5, 1.0, 2.0, 3.0});
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].rel_gap == doctest::Approx(0.916).epsilon(1e-3));
  for (const auto& r : rows) {
    CHECK(r.rel_gap > 0.1);
    CHECK(r.lattice == doctest::Approx(lattice_twopoint(p, 0.0, r.tau)));
  }
  CHECK(measure_discrepancy_report(p, {}).empty());
}
