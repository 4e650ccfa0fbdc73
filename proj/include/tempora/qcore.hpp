#pragma once

// Dense complex matrices over small multi-partite Hilbert spaces.
//
// Composite indices are big-endian: the leftmost factor of a SpaceSpec is the
// most significant digit, matching left-to-right tensor products.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tempora {

using cplx = std::complex<double>;

// Tolerances shared across modules.
inline constexpr double kInputTol = 1e-10;  // validation of caller-supplied data
inline constexpr double kCheckTol = 1e-9;   // post-condition checks
inline constexpr std::size_t kMaxDim = 1024;

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  // Throws ValidationError on size mismatch or non-finite entries.
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static CMatrix column(std::span<const cplx> v);
  static CMatrix diagonal(std::span<const double> d);
  // Computational-basis projector |k><k| in dimension n.
  static CMatrix basis_projector(std::size_t n, std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> entries() const { return data_; }
  std::span<cplx> entries() { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conj() const;
  cplx trace() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(CMatrix a, double s) { return a *= cplx(s); }
  friend CMatrix operator*(double s, CMatrix a) { return a *= cplx(s); }
  friend CMatrix operator/(CMatrix a, double s) { return a *= cplx(1.0 / s); }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  // Exact entrywise equality.
  friend bool operator==(const CMatrix& a, const CMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

// Ordered tensor factorization of a Hilbert space.
class SpaceSpec {
 public:
  struct Factor {
    std::string label;
    std::size_t dim;
    bool operator==(const Factor&) const = default;
  };

  SpaceSpec() = default;
  // Throws ValidationError on duplicate labels or zero dimensions.
  explicit SpaceSpec(std::vector<Factor> factors);
  SpaceSpec(std::initializer_list<Factor> factors) : SpaceSpec(std::vector<Factor>(factors)) {}

  // n factors labelled "0", "1", ... each of dimension d.
  static SpaceSpec uniform(std::size_t n, std::size_t d);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t count() const { return factors_.size(); }
  std::size_t total_dim() const;
  std::vector<std::size_t> dims() const;
  bool contains(const std::string& label) const;
  // Throws DimensionError for unknown labels.
  std::size_t index_of(const std::string& label) const;
  std::size_t dim_of(const std::string& label) const { return factors_[index_of(label)].dim; }

  bool operator==(const SpaceSpec&) const = default;

 private:
  std::vector<Factor> factors_;
};

// Letters 0..3 = I, X, Y, Z.
class PauliString {
 public:
  PauliString() = default;
  // Throws ValidationError for letters outside 0..3.
  explicit PauliString(std::vector<std::uint8_t> letters);
  PauliString(std::initializer_list<int> letters);

  static PauliString identity(std::size_t n) { return PauliString(std::vector<std::uint8_t>(n, 0)); }
  // The n-letter string with index `code` read big-endian in base 4.
  static PauliString from_index(std::size_t n, std::size_t code);

  std::size_t length() const { return letters_.size(); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }
  std::uint8_t operator[](std::size_t i) const { return letters_[i]; }
  bool is_identity() const;
  std::string to_string() const;  // e.g. "IXZ"

  auto operator<=>(const PauliString&) const = default;

 private:
  std::vector<std::uint8_t> letters_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix kron(std::initializer_list<CMatrix> factors);

// Traces out every factor not listed in `keep`. Kept factors stay in spec order.
CMatrix partial_trace(const CMatrix& m, const SpaceSpec& spec, const std::vector<std::string>& keep);
CMatrix partial_transpose(const CMatrix& m, const SpaceSpec& spec, const std::vector<std::string>& subset);
// Reorders tensor factors; `order` must be a permutation of the spec's labels.
CMatrix permute_subsystems(const CMatrix& m, const SpaceSpec& spec, const std::vector<std::string>& order);
// (1_X / d_X) ⊗ Tr_X m, with the identity re-inserted in place of the traced factors.
CMatrix trace_and_replace(const CMatrix& m, const SpaceSpec& spec, const std::vector<std::string>& traced);

struct EigenSystem {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns are eigenvectors
};

// Throws ValidationError if m deviates from Hermitian by more than kInputTol.
EigenSystem eig_hermitian(const CMatrix& m);
double min_eigenvalue(const CMatrix& hermitian);
// exp(scale * H) for Hermitian H.
CMatrix exp_hermitian(const CMatrix& h, cplx scale);
// Largest singular value.
double operator_norm(const CMatrix& m);

CMatrix pauli(int index);
CMatrix pauli_matrix(const PauliString& p);
// (1 + sign * sigma_i) / 2. For i = 0 the minus branch is the zero operator.
CMatrix pauli_projector(int index, int sign);

double frobenius_norm(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double max_abs(const CMatrix& m);
// Tr[a b] without forming the product.
cplx trace_of_product(const CMatrix& a, const CMatrix& b);

bool is_hermitian(const CMatrix& m, double tol = kInputTol);
bool is_unitary(const CMatrix& m, double tol = kCheckTol);
// Hermitian, unit trace and PSD (eigenvalue floor -tol).
bool is_density_matrix(const CMatrix& m, double tol = kInputTol);

// Throwing variants used at module boundaries.
void require_square(const CMatrix& m, const char* what);
void require_density_matrix(const CMatrix& m, const char* what);
void require_unitary(const CMatrix& m, const char* what);

// |v><v| for a column vector.
CMatrix projector_onto(const CMatrix& ket);

double pearson(std::span<const double> xs, std::span<const double> ys);

}  // namespace tempora
