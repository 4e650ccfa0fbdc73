#include "tempora/procmat.hpp"

#include <algorithm>
#include <cmath>

#include "tempora/errors.hpp"
#include "tempora/pdm.hpp"

namespace tempora {

namespace {

bool is_slot(const std::string& label) {
  return std::find(kSlotOrder.begin(), kSlotOrder.end(), label) != kSlotOrder.end();
}

SpaceSpec canonical_spec(const SpaceSpec& s) {
  std::vector<SpaceSpec::Factor> f;
  for (const auto& label : kSlotOrder) f.push_back({label, s.contains(label) ? s.dim_of(label) : 1});
  return SpaceSpec(f);
}

// Luders Kraus operators for outcome a of sigma_i, optionally discarding the system.
std::vector<CMatrix> luders_kraus(int i, int a, std::size_t d_out) {
  const CMatrix p = pauli_projector(i, a);
  if (d_out == 2) return {p};
  if (d_out != 1) throw DimensionError("output slot must have dimension 1 or 2");
  // Discarding after the projection: Kraus operators <e| for an orthonormal basis of range(P).
  std::vector<CMatrix> ks;
  const EigenSystem es = eig_hermitian(p);
  for (std::size_t k = 0; k < 2; ++k) {
    if (es.values[k] < 0.5) continue;
    CMatrix bra(1, 2);
    for (std::size_t c = 0; c < 2; ++c) bra(0, c) = std::conj(es.vectors(c, k));
    ks.push_back(bra);
  }
  return ks;
}

void require_pauli_index(int i) {
  if (i < 0 || i > 3) throw ValidationError("Pauli index must be in 0..3");
}

}  // namespace

void ProcessMatrix::validate_shape() const {
  for (const auto& f : spec.factors())
    if (!is_slot(f.label)) throw ValidationError("unknown process-matrix slot '" + f.label + "'");
  if (!matrix.is_square() || spec.total_dim() != matrix.rows())
    throw DimensionError("slot dimensions do not factorize the process matrix");
  if (!is_hermitian(matrix, kInputTol)) throw ValidationError("process matrix is not Hermitian");
}

ProcessMatrix ProcessMatrix::canonical() const {
  validate_shape();
  std::vector<std::string> present;
  for (const auto& label : kSlotOrder)
    if (spec.contains(label)) present.push_back(label);
  return ProcessMatrix{permute_subsystems(matrix, spec, present), canonical_spec(spec)};
}

std::size_t ProcessMatrix::dim(const std::string& slot) const {
  if (!is_slot(slot)) throw ValidationError("unknown process-matrix slot '" + slot + "'");
  return spec.contains(slot) ? spec.dim_of(slot) : 1;
}

CMatrix choi(const std::vector<CMatrix>& kraus) {
  if (kraus.empty()) throw ValidationError("no Kraus operators");
  const std::size_t din = kraus.front().cols(), dout = kraus.front().rows();
  CMatrix out(din * dout, din * dout);
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j) {
      CMatrix eij(din, din);
      eij(i, j) = 1.0;
      CMatrix img(dout, dout);
      for (const auto& k : kraus) img += k * eij * k.adjoint();
      out += kron(eij, img);
    }
  return out;
}

CMatrix choi(const Channel& ch) {
  ch.validate();
  return choi(ch.kraus);
}

CMatrix choi_apply(const CMatrix& choi_m, const CMatrix& rho) {
  require_square(rho, "rho");
  require_square(choi_m, "Choi operator");
  const std::size_t din = rho.rows();
  if (din == 0 || choi_m.rows() % din != 0) throw DimensionError("Choi operator does not match the input dimension");
  const std::size_t dout = choi_m.rows() / din;
  const SpaceSpec s{{"in", din}, {"out", dout}};
  return partial_trace(kron(rho.transpose(), CMatrix::identity(dout)) * choi_m, s, {"out"});
}

CMatrix lv_project(const ProcessMatrix& w) {
  const ProcessMatrix c = w.canonical();
  auto t = [&](std::vector<std::string> x) { return trace_and_replace(c.matrix, c.spec, x); };
  CMatrix r = c.matrix;
  r -= t({"F"});
  r += t({"A_O", "F"});
  r += t({"B_O", "F"});
  r -= t({"A_O", "B_O", "F"});
  r -= t({"A_I", "A_O", "F"});
  r += t({"A_I", "A_O", "B_O", "F"});
  r -= t({"B_I", "B_O", "F"});
  r += t({"A_O", "B_I", "B_O", "F"});
  r -= t({"A_I", "A_O", "B_I", "B_O", "F"});
  r += t({"P", "A_I", "A_O", "B_I", "B_O", "F"});
  return r;
}

ValidityReport validate_process_matrix(const ProcessMatrix& w) {
  const ProcessMatrix c = w.canonical();
  ValidityReport rep;
  rep.min_eig = min_eigenvalue(c.matrix);
  rep.psd = rep.min_eig >= -kCheckTol;
  rep.trace = c.matrix.trace().real();
  const double expected = static_cast<double>(c.dim("A_O") * c.dim("B_O") * c.dim("P"));
  rep.trace_ok = std::abs(rep.trace - expected) <= kCheckTol;
  rep.lv_residual = frobenius_norm(c.matrix - lv_project(c));
  rep.lv_fixed = rep.lv_residual < kCheckTol;
  return rep;
}

CMatrix pauli_cj_observable(int i) {
  require_pauli_index(i);
  const CMatrix s = pauli(i), id = CMatrix::identity(2);
  return 0.5 * (kron(id, s) + kron(s, id));
}

CMatrix pauli_cj_observable_projector_form(int i) {
  require_pauli_index(i);
  const CMatrix pp = pauli_projector(i, +1), pm = pauli_projector(i, -1);
  return kron(pp, pp) - kron(pm, pm);
}

CMatrix pauli_cj_operation(int i, std::size_t d_out) {
  require_pauli_index(i);
  CMatrix out(2 * d_out, 2 * d_out);
  for (int a : {+1, -1}) {
    const auto ks = luders_kraus(i, a, d_out);
    if (ks.empty()) continue;
    out += double(a) * choi(ks);
  }
  return out;
}

double pm_probability(const ProcessMatrix& w, const CMatrix& a_op, const CMatrix& b_op) {
  const ProcessMatrix c = w.canonical();
  if (c.dim("P") != 1 || c.dim("F") != 1) throw DimensionError("Born rule needs trivial P and F slots");
  const std::size_t da = c.dim("A_I") * c.dim("A_O"), db = c.dim("B_I") * c.dim("B_O");
  if (a_op.rows() != da || !a_op.is_square() || b_op.rows() != db || !b_op.is_square())
    throw DimensionError("operation dimensions do not match the process-matrix slots");
  const CMatrix wt = partial_transpose(c.matrix, c.spec, {"A_I", "A_O", "B_I", "B_O"});
  return trace_of_product(wt, kron(a_op, b_op)).real();
}

double pm_pauli_correlation(const ProcessMatrix& w, int i, int j) {
  const ProcessMatrix c = w.canonical();
  if (c.dim("A_I") != 2 || c.dim("B_I") != 2) throw DimensionError("Pauli correlations need qubit input slots");
  return pm_probability(c, pauli_cj_operation(i, c.dim("A_O")), pauli_cj_operation(j, c.dim("B_O")));
}

HsReport hs_classify(const ProcessMatrix& w, double cutoff) {
  const ProcessMatrix c = w.canonical();
  if (c.dim("P") != 1 || c.dim("F") != 1) throw DimensionError("classification needs trivial P and F slots");
  if (c.dim("A_I") != 2 || c.dim("B_I") != 2) throw DimensionError("classification needs qubit input slots");
  const std::vector<std::string> slots = {"A_I", "A_O", "B_I", "B_O"};
  std::vector<std::size_t> dims;
  for (const auto& s : slots) {
    dims.push_back(c.dim(s));
    if (dims.back() != 1 && dims.back() != 2) throw DimensionError("classification needs qubit or trivial slots");
  }
  const double scale = 4.0 / static_cast<double>(c.matrix.rows());

  HsReport rep;
  for (std::size_t code = 0; code < 256; ++code) {
    const PauliString p = PauliString::from_index(4, code);
    CMatrix op = CMatrix::identity(1);
    bool ok = true;
    for (std::size_t s = 0; s < 4; ++s) {
      if (dims[s] == 1) {
        if (p[s] != 0) ok = false;
        continue;
      }
      op = kron(op, pauli(p[s]));
    }
    if (!ok) continue;
    const double coeff = trace_of_product(c.matrix, op).real() * scale;
    if (p.is_identity()) {
      rep.identity = coeff;
      continue;
    }
    if (std::abs(coeff) <= cutoff) continue;
    // Support as a bitmask over A_I, A_O, B_I, B_O.
    unsigned m = 0;
    for (std::size_t s = 0; s < 4; ++s)
      if (p[s] != 0) m |= 1u << (3 - s);
    constexpr unsigned AI = 8, AO = 4, BI = 2, BO = 1;
    HsTerm term{p, coeff};
    if (m == AI || m == BI || m == (AI | BI)) {
      rep.separate.push_back(term);
    } else if (m == (AO | BI) || m == (AI | AO | BI)) {
      rep.a_to_b.push_back(term);
    } else if (m == (AI | BO) || m == (AI | BI | BO)) {
      rep.b_to_a.push_back(term);
    } else {
      rep.forbidden.push_back(term);
    }
  }
  return rep;
}

ProcessMatrix channel_process(const CMatrix& rho, const CMatrix& u) {
  if (rho.rows() != 2 || u.rows() != 2) throw DimensionError("expected qubit state and unitary");
  require_density_matrix(rho, "rho");
  return ProcessMatrix{kron(rho, choi(Channel::unitary(u))), SpaceSpec{{"A_I", 2}, {"A_O", 2}, {"B_I", 2}}};
}

EquivalenceReport pm_pdm_equivalence_check(const CMatrix& rho, const CMatrix& u) {
  const ProcessMatrix w = channel_process(rho, u);
  const Channel ch = Channel::unitary(u);
  EquivalenceReport rep;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      rep.max_abs_diff = std::max(rep.max_abs_diff,
                                  std::abs(pm_pauli_correlation(w, i, j) - temporal_correlation_pair(rho, ch, i, j)));
  return rep;
}

}  // namespace tempora
