#include "tempora/histories.hpp"

#include <algorithm>
#include <cmath>

#include "tempora/errors.hpp"

namespace tempora {

namespace {

constexpr std::size_t kMaxHistories = 4096;

// Heisenberg-picture projectors, indexed [step][alpha].
std::vector<std::vector<CMatrix>> heisenberg_projectors(const HistoryFamily& f) {
  std::vector<std::vector<CMatrix>> out;
  CMatrix v = CMatrix::identity(f.dim());
  for (const auto& s : f.steps) {
    v = s.unitary * v;
    const CMatrix vd = v.adjoint();
    std::vector<CMatrix> ps;
    for (const auto& p : s.projectors) ps.push_back(vd * p * v);
    out.push_back(std::move(ps));
  }
  return out;
}

// Class operators C_a for every history code.
std::vector<CMatrix> class_operators(const HistoryFamily& f) {
  const auto hp = heisenberg_projectors(f);
  std::vector<CMatrix> ops;
  const std::size_t n = f.history_count();
  ops.reserve(n);
  for (std::size_t code = 0; code < n; ++code) {
    const auto alpha = f.decode(code);
    CMatrix c = CMatrix::identity(f.dim());
    for (std::size_t k = 0; k < alpha.size(); ++k) c = hp[k][alpha[k]] * c;
    ops.push_back(std::move(c));
  }
  return ops;
}

}  // namespace

void HistoryFamily::validate() const {
  require_density_matrix(rho0, "rho0");
  const std::size_t d = dim();
  if (steps.empty()) throw ValidationError("history family has no steps");
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& s = steps[k];
    const std::string where = "step " + std::to_string(k);
    if (s.unitary.rows() != d || !s.unitary.is_square()) throw DimensionError(where + ": unitary dimension mismatch");
    if (!is_unitary(s.unitary, kCheckTol)) throw ValidationError(where + ": evolution is not unitary");
    if (s.projectors.empty()) throw ValidationError(where + ": no projectors");
    CMatrix sum(d, d);
    for (std::size_t a = 0; a < s.projectors.size(); ++a) {
      const CMatrix& pa = s.projectors[a];
      if (pa.rows() != d || !pa.is_square()) throw DimensionError(where + ": projector dimension mismatch");
      if (!is_hermitian(pa, kInputTol)) throw ValidationError(where + ": projector is not Hermitian");
      for (std::size_t b = 0; b < s.projectors.size(); ++b) {
        const CMatrix prod = pa * s.projectors[b];
        const CMatrix expect = a == b ? pa : CMatrix(d, d);
        if (max_abs_diff(prod, expect) > kCheckTol) throw ValidationError(where + ": projectors are not orthogonal");
      }
      sum += pa;
    }
    if (max_abs_diff(sum, CMatrix::identity(d)) > kCheckTol) throw ValidationError(where + ": projectors are not exhaustive");
  }
  if (history_count() > kMaxHistories) throw SizeLimitExceeded("too many histories");
}

std::vector<std::size_t> HistoryFamily::alphabet_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& s : steps) out.push_back(s.projectors.size());
  return out;
}

std::size_t HistoryFamily::history_count() const {
  std::size_t n = 1;
  for (const auto& s : steps) {
    n *= s.projectors.size();
    if (n > kMaxHistories) return n;
  }
  return n;
}

std::vector<std::size_t> HistoryFamily::decode(std::size_t code) const {
  std::vector<std::size_t> alpha(steps.size());
  for (std::size_t k = steps.size(); k-- > 0;) {
    alpha[k] = code % steps[k].projectors.size();
    code /= steps[k].projectors.size();
  }
  return alpha;
}

std::size_t HistoryFamily::encode(const std::vector<std::size_t>& alpha) const {
  if (alpha.size() != steps.size()) throw DimensionError("history length differs from the number of steps");
  std::size_t code = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (alpha[k] >= steps[k].projectors.size()) throw DimensionError("history index out of range");
    code = code * steps[k].projectors.size() + alpha[k];
  }
  return code;
}

cplx decoherence_functional(const HistoryFamily& f, const std::vector<std::size_t>& alpha,
                            const std::vector<std::size_t>& alpha_p) {
  f.validate();
  f.encode(alpha);
  f.encode(alpha_p);
  const auto hp = heisenberg_projectors(f);
  CMatrix c = CMatrix::identity(f.dim()), cp = c;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    c = hp[k][alpha[k]] * c;
    cp = hp[k][alpha_p[k]] * cp;
  }
  return trace_of_product(c * f.rho0, cp.adjoint());
}

CMatrix decoherence_matrix(const HistoryFamily& f) {
  f.validate();
  const auto ops = class_operators(f);
  const std::size_t n = ops.size();
  std::vector<CMatrix> left;
  left.reserve(n);
  for (const auto& c : ops) left.push_back(c * f.rho0);
  CMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = trace_of_product(left[i], ops[j].adjoint());
  return d;
}

HistoryProbabilities history_probabilities(const HistoryFamily& f) {
  f.validate();
  const auto ops = class_operators(f);
  HistoryProbabilities out;
  for (std::size_t code = 0; code < ops.size(); ++code) {
    out.histories.push_back(f.decode(code));
    out.values.push_back(trace_of_product(ops[code] * f.rho0, ops[code].adjoint()).real());
  }
  return out;
}

double max_off_diagonal(const HistoryFamily& f, bool strong) {
  const CMatrix d = decoherence_matrix(f);
  double m = 0.0;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j) m = std::max(m, strong ? std::abs(d(i, j)) : std::abs(d(i, j).real()));
  return m;
}

bool is_consistent(const HistoryFamily& f, bool strong, double tol) { return max_off_diagonal(f, strong) <= tol; }

HistoryFamily pauli_history_family(const CMatrix& rho, const std::vector<CMatrix>& unitaries,
                                   const std::vector<PauliString>& paulis) {
  if (paulis.empty()) throw ValidationError("need at least one measurement");
  if (unitaries.size() + 1 != paulis.size())
    throw DimensionError("need exactly one unitary between consecutive measurements");
  HistoryFamily f;
  f.rho0 = rho;
  const std::size_t d = rho.rows();
  for (std::size_t k = 0; k < paulis.size(); ++k) {
    const CMatrix s = pauli_matrix(paulis[k]);
    if (s.rows() != d) throw DimensionError("Pauli string does not match the state dimension");
    const CMatrix id = CMatrix::identity(d);
    HistoryStep st;
    st.unitary = k == 0 ? id : unitaries[k - 1];
    st.projectors = {0.5 * (id + s), 0.5 * (id - s)};
    f.steps.push_back(std::move(st));
  }
  return f;
}

double correlation_from_histories(const CMatrix& rho, const std::vector<CMatrix>& unitaries,
                                  const std::vector<PauliString>& paulis) {
  const HistoryFamily f = pauli_history_family(rho, unitaries, paulis);
  const HistoryProbabilities hp = history_probabilities(f);
  double acc = 0.0;
  for (std::size_t h = 0; h < hp.values.size(); ++h) {
    int sign = 1;
    for (std::size_t a : hp.histories[h]) sign *= a == 0 ? 1 : -1;
    acc += sign * hp.values[h];
  }
  return acc;
}

double correlation_from_histories(const CMatrix& rho, const std::vector<CMatrix>& unitaries,
                                  const std::vector<int>& paulis) {
  if (rho.rows() != 2) throw DimensionError("expected a single-qubit state");
  std::vector<PauliString> ps;
  for (int i : paulis) ps.push_back(PauliString{i});
  return correlation_from_histories(rho, unitaries, ps);
}

HistoryFamily coarse_grain(const HistoryFamily& f, std::size_t step,
                           const std::vector<std::vector<std::size_t>>& partition) {
  f.validate();
  if (step >= f.steps.size()) throw DimensionError("coarse-graining step out of range");
  const std::size_t b = f.steps[step].projectors.size();
  std::vector<int> seen(b, 0);
  for (const auto& block : partition) {
    if (block.empty()) throw ValidationError("partition has an empty block");
    for (std::size_t a : block) {
      if (a >= b) throw ValidationError("partition index out of range");
      if (seen[a]++) throw ValidationError("partition blocks overlap");
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) throw ValidationError("partition does not cover every projector");

  HistoryFamily g = f;
  std::vector<CMatrix> merged;
  for (const auto& block : partition) {
    CMatrix p(f.dim(), f.dim());
    for (std::size_t a : block) p += f.steps[step].projectors[a];
    merged.push_back(std::move(p));
  }
  g.steps[step].projectors = std::move(merged);
  return g;
}

}  // namespace tempora
