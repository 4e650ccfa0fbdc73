#include "tempora/qcore.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "tempora/errors.hpp"

namespace tempora {

namespace {

using RowMajorXcd = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajorXcd> as_eigen(const CMatrix& m) {
  return {m.entries().data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols())};
}

CMatrix from_eigen(const RowMajorXcd& e) {
  CMatrix out(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  std::copy(e.data(), e.data() + e.size(), out.entries().begin());
  return out;
}

// Splits composite indices into per-factor digits (big-endian).
struct Digits {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> strides;

  explicit Digits(std::vector<std::size_t> d) : dims(std::move(d)), strides(dims.size(), 1) {
    for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  }
  std::size_t digit(std::size_t index, std::size_t k) const { return (index / strides[k]) % dims[k]; }
};

void require_factorizes(const CMatrix& m, const SpaceSpec& spec) {
  if (!m.is_square()) throw DimensionError("matrix must be square to be factorized");
  if (spec.total_dim() != m.rows()) {
    std::ostringstream os;
    os << "space spec of dimension " << spec.total_dim() << " does not factorize a " << m.rows() << "x"
       << m.cols() << " matrix";
    throw DimensionError(os.str());
  }
}

std::vector<bool> label_mask(const SpaceSpec& spec, const std::vector<std::string>& labels) {
  std::vector<bool> mask(spec.count(), false);
  for (const auto& l : labels) mask[spec.index_of(l)] = true;
  return mask;
}

// Composite index restricted to the factors selected by `mask` (selected = true).
std::vector<std::size_t> sub_index_table(const Digits& dg, const std::vector<bool>& mask, bool selected) {
  std::size_t total = dg.dims.empty() ? 1 : dg.dims[0] * dg.strides[0];
  std::vector<std::size_t> out(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dg.dims.size(); ++k) {
      if (mask[k] == selected) idx = idx * dg.dims[k] + dg.digit(i, k);
    }
    out[i] = idx;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// CMatrix

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw ValidationError("entry count " + std::to_string(data_.size()) + " does not match " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ValidationError("matrix entry is not finite");
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

CMatrix CMatrix::column(std::span<const cplx> v) {
  return CMatrix(v.size(), 1, std::vector<cplx>(v.begin(), v.end()));
}

CMatrix CMatrix::diagonal(std::span<const double> d) {
  CMatrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

CMatrix CMatrix::basis_projector(std::size_t n, std::size_t k) {
  CMatrix out(n, n);
  out(k, k) = 1.0;
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

CMatrix CMatrix::conj() const {
  CMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product shape mismatch: " + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()));
  }
  RowMajorXcd prod = as_eigen(a) * as_eigen(b);
  return from_eigen(prod);
}

// ---------------------------------------------------------------------------
// SpaceSpec

SpaceSpec::SpaceSpec(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const auto& f : factors_) {
    if (f.dim == 0) throw ValidationError("subsystem '" + f.label + "' has dimension 0");
    if (!seen.insert(f.label).second) throw ValidationError("duplicate subsystem label '" + f.label + "'");
  }
}

SpaceSpec SpaceSpec::uniform(std::size_t n, std::size_t d) {
  std::vector<Factor> f;
  for (std::size_t i = 0; i < n; ++i) f.push_back({std::to_string(i), d});
  return SpaceSpec(std::move(f));
}

std::size_t SpaceSpec::total_dim() const {
  std::size_t d = 1;
  for (const auto& f : factors_) d *= f.dim;
  return d;
}

std::vector<std::size_t> SpaceSpec::dims() const {
  std::vector<std::size_t> d;
  for (const auto& f : factors_) d.push_back(f.dim);
  return d;
}

bool SpaceSpec::contains(const std::string& label) const {
  return std::any_of(factors_.begin(), factors_.end(), [&](const Factor& f) { return f.label == label; });
}

std::size_t SpaceSpec::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].label == label) return i;
  throw DimensionError("unknown subsystem label '" + label + "'");
}

// ---------------------------------------------------------------------------
// PauliString

PauliString::PauliString(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
  for (auto l : letters_)
    if (l > 3) throw ValidationError("Pauli letter out of range: " + std::to_string(l));
}

PauliString::PauliString(std::initializer_list<int> letters) {
  for (int l : letters) {
    if (l < 0 || l > 3) throw ValidationError("Pauli letter out of range: " + std::to_string(l));
    letters_.push_back(static_cast<std::uint8_t>(l));
  }
}

PauliString PauliString::from_index(std::size_t n, std::size_t code) {
  std::vector<std::uint8_t> l(n);
  for (std::size_t k = n; k-- > 0;) {
    l[k] = static_cast<std::uint8_t>(code % 4);
    code /= 4;
  }
  return PauliString(std::move(l));
}

bool PauliString::is_identity() const {
  return std::all_of(letters_.begin(), letters_.end(), [](auto l) { return l == 0; });
}

std::string PauliString::to_string() const {
  static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  for (auto l : letters_) s.push_back(kNames[l]);
  return s;
}

// ---------------------------------------------------------------------------
// Tensor operations

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const cplx s = a(i1, j1);
      if (s == cplx(0.0)) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) out(i1 * b.rows() + i2, j1 * b.cols() + j2) = s * b(i2, j2);
    }
  return out;
}

CMatrix kron(std::initializer_list<CMatrix> factors) {
  CMatrix out = CMatrix::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

CMatrix partial_trace(const CMatrix& m, const SpaceSpec& spec, const std::vector<std::string>& keep) {
  require_factorizes(m, spec);
  const auto mask = label_mask(spec, keep);
  const Digits dg(spec.dims());
  const auto kept = sub_index_table(dg, mask, true);
  const auto traced = sub_index_table(dg, mask, false);
  std::size_t out_dim = 1;
  for (std::size_t k = 0; k < spec.count(); ++k)
    if (mask[k]) out_dim *= spec.factors()[k].dim;

  CMatrix out(out_dim, out_dim);
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (traced[i] == traced[j]) out(kept[i], kept[j]) += m(i, j);
  return out;
}

CMatrix partial_transpose(const CMatrix& m, const SpaceSpec& spec, const std::vector<std::string>& subset) {
  require_factorizes(m, spec);
  const auto mask = label_mask(spec, subset);
  const Digits dg(spec.dims());
  const std::size_t n = m.rows();
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t ti = 0, tj = 0;
      for (std::size_t k = 0; k < dg.dims.size(); ++k) {
        std::size_t di = dg.digit(i, k), dj = dg.digit(j, k);
        if (mask[k]) std::swap(di, dj);
        ti += di * dg.strides[k];
        tj += dj * dg.strides[k];
      }
      out(ti, tj) = m(i, j);
    }
  return out;
}

CMatrix permute_subsystems(const CMatrix& m, const SpaceSpec& spec, const std::vector<std::string>& order) {
  require_factorizes(m, spec);
  if (order.size() != spec.count()) throw DimensionError("permutation must list every subsystem exactly once");
  std::vector<std::size_t> src;  // src[new position] = old position
  for (const auto& l : order) src.push_back(spec.index_of(l));
  if (std::set<std::size_t>(src.begin(), src.end()).size() != src.size())
    throw DimensionError("permutation repeats a subsystem");

  const Digits old_dg(spec.dims());
  std::vector<std::size_t> new_dims;
  for (auto s : src) new_dims.push_back(spec.factors()[s].dim);
  const Digits new_dg(new_dims);

  const std::size_t n = m.rows();
  std::vector<std::size_t> remap(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < src.size(); ++k) idx += old_dg.digit(i, src[k]) * new_dg.strides[k];
    remap[i] = idx;
  }
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(remap[i], remap[j]) = m(i, j);
  return out;
}

CMatrix trace_and_replace(const CMatrix& m, const SpaceSpec& spec, const std::vector<std::string>& traced) {
  require_factorizes(m, spec);
  const auto mask = label_mask(spec, traced);
  const Digits dg(spec.dims());
  const auto kept_idx = sub_index_table(dg, mask, false);
  const auto traced_idx = sub_index_table(dg, mask, true);
  std::vector<std::string> keep;
  std::size_t d_traced = 1;
  for (std::size_t k = 0; k < spec.count(); ++k) {
    if (mask[k])
      d_traced *= spec.factors()[k].dim;
    else
      keep.push_back(spec.factors()[k].label);
  }
  const CMatrix reduced = partial_trace(m, spec, keep);
  const std::size_t n = m.rows();
  CMatrix out(n, n);
  const double w = 1.0 / static_cast<double>(d_traced);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (traced_idx[i] == traced_idx[j]) out(i, j) = w * reduced(kept_idx[i], kept_idx[j]);
  return out;
}

// ---------------------------------------------------------------------------
// Spectral helpers

EigenSystem eig_hermitian(const CMatrix& m) {
  require_square(m, "eig_hermitian input");
  if (!is_hermitian(m, kInputTol)) throw ValidationError("eig_hermitian: matrix is not Hermitian");
  Eigen::MatrixXcd e = as_eigen(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  EigenSystem out;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  RowMajorXcd v = solver.eigenvectors();
  out.vectors = from_eigen(v);
  return out;
}

double min_eigenvalue(const CMatrix& hermitian) { return eig_hermitian(hermitian).values.front(); }

CMatrix exp_hermitian(const CMatrix& h, cplx scale) {
  const auto es = eig_hermitian(h);
  const std::size_t n = h.rows();
  CMatrix scaled = es.vectors;
  for (std::size_t c = 0; c < n; ++c) {
    const cplx f = std::exp(scale * es.values[c]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= f;
  }
  return scaled * es.vectors.adjoint();
}

double operator_norm(const CMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(as_eigen(m)));
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

// ---------------------------------------------------------------------------
// Pauli algebra

CMatrix pauli(int index) {
  using namespace std::complex_literals;
  switch (index) {
    case 0: return CMatrix::identity(2);
    case 1: return {{0.0, 1.0}, {1.0, 0.0}};
    case 2: return {{0.0, -1i}, {1i, 0.0}};
    case 3: return {{1.0, 0.0}, {0.0, -1.0}};
    default: throw ValidationError("Pauli index out of range: " + std::to_string(index));
  }
}

CMatrix pauli_matrix(const PauliString& p) {
  CMatrix out = CMatrix::identity(1);
  for (auto l : p.letters()) out = kron(out, pauli(l));
  return out;
}

CMatrix pauli_projector(int index, int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("projector sign must be +1 or -1");
  return 0.5 * (CMatrix::identity(2) + static_cast<double>(sign) * pauli(index));
}

// ---------------------------------------------------------------------------
// Norms and predicates

double frobenius_norm(const CMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff shape mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

double max_abs(const CMatrix& m) {
  double d = 0.0;
  for (const auto& z : m.entries()) d = std::max(d, std::abs(z));
  return d;
}

cplx trace_of_product(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw DimensionError("trace_of_product shape mismatch");
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  return t;
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

bool is_unitary(const CMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return max_abs_diff(m.adjoint() * m, CMatrix::identity(m.rows())) <= tol;
}

bool is_density_matrix(const CMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - cplx(1.0)) > tol) return false;
  return min_eigenvalue(m) >= -tol;
}

void require_square(const CMatrix& m, const char* what) {
  if (!m.is_square() || m.rows() == 0) throw DimensionError(std::string(what) + " must be a non-empty square matrix");
  if (m.rows() > kMaxDim) throw DimensionError(std::string(what) + " exceeds the supported dimension");
}

void require_density_matrix(const CMatrix& m, const char* what) {
  require_square(m, what);
  if (!is_density_matrix(m, kInputTol))
    throw ValidationError(std::string(what) + " is not a density matrix (Hermitian, unit trace, PSD)");
}

void require_unitary(const CMatrix& m, const char* what) {
  require_square(m, what);
  if (!is_unitary(m, kCheckTol)) throw ValidationError(std::string(what) + " is not unitary");
}

CMatrix projector_onto(const CMatrix& ket) {
  if (ket.cols() != 1) throw DimensionError("projector_onto expects a column vector");
  return ket * ket.adjoint();
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DimensionError("pearson: sample lengths differ");
  if (xs.size() < 2) throw DimensionError("pearson: need at least two samples");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double cov = 0.0, vx = 0.0, vy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    cov += (xs[i] - mx) * (ys[i] - my);
    vx += (xs[i] - mx) * (xs[i] - mx);
    vy += (ys[i] - my) * (ys[i] - my);
  }
  if (vx == 0.0 || vy == 0.0) throw UndefinedCorrelation("pearson: zero variance sample");
  return std::clamp(cov / std::sqrt(vx * vy), -1.0, 1.0);
}

}  // namespace tempora
