#include "tempora/siggames.hpp"

#include <cmath>

#include "tempora/errors.hpp"

namespace tempora {

namespace {

CMatrix plane_observable(double t) { return std::cos(t) * pauli(3) + std::sin(t) * pauli(1); }

// Projector onto the +1 (k = 0) or -1 (k = 1) eigenspace.
CMatrix plane_projector(double t, std::size_t k) {
  const CMatrix id = CMatrix::identity(2);
  return 0.5 * (k == 0 ? id + plane_observable(t) : id - plane_observable(t));
}

}  // namespace

void GameSpec::validate() const {
  if (pi.size() != n_x * n_y || l.size() != n_a * n_b * n_x * n_y) throw DimensionError("game table sizes do not match");
  double s = 0.0;
  for (double v : pi) {
    if (v < 0) throw ValidationError("question distribution has a negative entry");
    s += v;
  }
  if (std::abs(s - 1.0) > kInputTol) throw ValidationError("question distribution does not sum to 1");
  for (double v : l)
    if (v < 0 || v > 1) throw ValidationError("payoff entries must lie in [0, 1]");
}

GameSpec GameSpec::chsh() {
  GameSpec g{2, 2, 2, 2, std::vector<double>(4, 0.25), std::vector<double>(16, 0.0)};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) g.l[((a * 2 + b) * 2 + x) * 2 + y] = (a ^ b) == (x & y) ? 1.0 : 0.0;
  return g;
}

void Strategy::validate() const {
  const std::size_t n = lambda_dist.size();
  if (n == 0) throw ValidationError("strategy has no hidden-variable values");
  if (first.size() != n || second.size() != n) throw DimensionError("strategy tables must have one entry per lambda");
  double s = 0.0;
  for (double v : lambda_dist) {
    if (v < 0) throw ValidationError("lambda distribution has a negative entry");
    s += v;
  }
  if (std::abs(s - 1.0) > kInputTol) throw ValidationError("lambda distribution does not sum to 1");
  memory.validate();
  for (std::size_t k = 0; k < n; ++k) {
    first[k].validate();
    if (first[k].dim_out() != memory.dim_in()) throw DimensionError("first instrument output does not feed the memory");
    for (int a : first[k].labels()) {
      const auto it = second[k].find(a);
      if (it == second[k].end()) throw ValidationError("no second-round POVM for outcome " + std::to_string(a));
      it->second.validate();
      if (it->second.dim() % memory.dim_out() != 0) throw DimensionError("second-round POVM does not act on the memory");
    }
  }
}

double OutcomeTable::sum() const {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

double chsh_classical_optimum() {
  double best = 0.0;
  for (unsigned s = 0; s < 16; ++s) {
    const unsigned a[2] = {s & 1u, (s >> 1) & 1u}, b[2] = {(s >> 2) & 1u, (s >> 3) & 1u};
    int wins = 0;
    for (unsigned x = 0; x < 2; ++x)
      for (unsigned y = 0; y < 2; ++y) wins += (a[x] ^ b[y]) == (x & y);
    best = std::max(best, wins / 4.0);
  }
  return best;
}

double chsh_quantum_value(const CMatrix& state, const std::array<double, 4>& angles) {
  if (state.rows() != 4) throw DimensionError("CHSH needs a two-qubit state");
  require_density_matrix(state, "state");
  double win = 0.0;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
          if ((a ^ b) == (x & y))
            win += trace_of_product(state, kron(plane_projector(angles[x], a), plane_projector(angles[2 + y], b))).real();
  return 0.25 * win;
}

std::array<double, 4> chsh_optimal_angles() { return {0.0, M_PI / 2, M_PI / 4, -M_PI / 4}; }

OutcomeTable qc_nonlocal_prob(const CMatrix& tau_x, const CMatrix& omega_y, const CMatrix& rho_ab, const Povm& povm_a,
                              const Povm& povm_b) {
  require_density_matrix(tau_x, "tau_x");
  require_density_matrix(omega_y, "omega_y");
  require_density_matrix(rho_ab, "rho_ab");
  povm_a.validate();
  povm_b.validate();
  const std::size_t dx = tau_x.rows(), dy = omega_y.rows();
  if (povm_a.dim() % dx != 0 || povm_b.dim() % dy != 0) throw DimensionError("POVMs do not act on the question registers");
  const std::size_t da = povm_a.dim() / dx, db = povm_b.dim() / dy;
  if (da * db != rho_ab.rows()) throw DimensionError("shared state does not match the POVMs");
  const CMatrix state = kron({tau_x, rho_ab, omega_y});
  OutcomeTable t{povm_a.labels(), povm_b.labels(), {}};
  for (const auto& [a, pa] : povm_a.effects)
    for (const auto& [b, qb] : povm_b.effects) t.p.push_back(trace_of_product(state, kron(pa, qb)).real());
  return t;
}

OutcomeTable qcsg_prob(const Strategy& s, const CMatrix& tau_x, const CMatrix& omega_y) {
  s.validate();
  require_density_matrix(tau_x, "tau_x");
  require_density_matrix(omega_y, "omega_y");
  OutcomeTable t;
  std::map<std::pair<int, int>, double> acc;
  std::map<int, int> alabels, blabels;
  for (std::size_t k = 0; k < s.lambda_dist.size(); ++k) {
    const Instrument& phi = s.first[k];
    if (phi.dim_in() != tau_x.rows()) throw DimensionError("question state does not match the first instrument");
    for (int a : phi.labels()) {
      alabels[a] = 1;
      const CMatrix mem = s.memory.apply(phi.apply(a, tau_x));
      const CMatrix joint = kron(mem, omega_y);
      const Povm& psi = s.second[k].at(a);
      if (psi.dim() != joint.rows()) throw DimensionError("late question does not match the second POVM");
      for (const auto& [b, e] : psi.effects) {
        blabels[b] = 1;
        acc[{a, b}] += s.lambda_dist[k] * trace_of_product(joint, e).real();
      }
    }
  }
  for (const auto& [a, _] : alabels) t.a_labels.push_back(a);
  for (const auto& [b, _] : blabels) t.b_labels.push_back(b);
  for (int a : t.a_labels)
    for (int b : t.b_labels) {
      const auto it = acc.find({a, b});
      t.p.push_back(it == acc.end() ? 0.0 : it->second);
    }
  return t;
}

double qcsg_payoff(const GameSpec& g, const Strategy& s, const std::vector<CMatrix>& taus,
                   const std::vector<CMatrix>& omegas) {
  g.validate();
  if (taus.size() != g.n_x || omegas.size() != g.n_y) throw DimensionError("question lists do not match the game");
  double total = 0.0;
  for (std::size_t x = 0; x < g.n_x; ++x)
    for (std::size_t y = 0; y < g.n_y; ++y) {
      const OutcomeTable t = qcsg_prob(s, taus[x], omegas[y]);
      if (t.a_labels.size() != g.n_a || t.b_labels.size() != g.n_b)
        throw DimensionError("strategy outcomes do not match the game");
      for (std::size_t a = 0; a < g.n_a; ++a)
        for (std::size_t b = 0; b < g.n_b; ++b) total += g.prior(x, y) * g.payoff(a, b, x, y) * t.at(a, b);
    }
  return total;
}

double qcsg_temporal_correlation(const Strategy& s, const CMatrix& tau_x) {
  for (const auto& in : s.first) in.require_pm_one_labels();
  for (const auto& m : s.second)
    for (const auto& [a, psi] : m)
      for (int b : psi.labels())
        if (b != 1 && b != -1) throw ValidationError("correlation POVMs need outcome labels +1/-1");
  const OutcomeTable t = qcsg_prob(s, tau_x, CMatrix::identity(1));
  double c = 0.0;
  for (std::size_t ia = 0; ia < t.a_labels.size(); ++ia)
    for (std::size_t ib = 0; ib < t.b_labels.size(); ++ib) c += t.a_labels[ia] * t.b_labels[ib] * t.at(ia, ib);
  return c;
}

std::vector<CMatrix> classical_questions(std::size_t n) {
  std::vector<CMatrix> q;
  for (std::size_t x = 0; x < n; ++x) q.push_back(CMatrix::basis_projector(n, x));
  return q;
}

Strategy chsh_as_signalling_game(const std::array<double, 4>& angles) {
  // |Phi+> on (A, B); Kraus K_{a,x} = |v_{a,x}><x| with v = (<e_{a,x}| ⊗ 1)|Phi+>.
  Instrument phi;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t x = 0; x < 2; ++x) {
      const CMatrix pa = plane_projector(angles[x], a);
      const EigenSystem es = eig_hermitian(pa);
      CMatrix v(2, 1);
      // Rank-one projector: the eigenvector with eigenvalue 1 is the last column.
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) v(c, 0) += std::conj(es.vectors(r, 1)) * (r == c ? M_SQRT1_2 : 0.0);
      CMatrix k(2, 2);
      for (std::size_t r = 0; r < 2; ++r) k(r, x) = v(r, 0);
      phi.outcomes[int(a)].push_back(k);
    }
  std::map<int, Povm> psi;
  Povm q;
  for (std::size_t b = 0; b < 2; ++b) {
    CMatrix e(4, 4);
    for (std::size_t y = 0; y < 2; ++y) e += kron(plane_projector(angles[2 + y], b), CMatrix::basis_projector(2, y));
    q.effects[int(b)] = e;
  }
  psi[0] = q;
  psi[1] = q;
  return Strategy{{1.0}, {phi}, Channel::identity(2), {psi}};
}

}  // namespace tempora
