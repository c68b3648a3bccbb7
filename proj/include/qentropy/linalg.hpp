#pragma once

// Dense complex Hermitian linear algebra for small dimensions (d <= 64).
//
// Composite systems use the A-major index convention i = i_A * d_B + i_B.

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace qentropy {

using cplx = std::complex<double>;

inline constexpr double kHermTol = 1e-12;  // relative, Hermiticity check
inline constexpr double kRankTol = 1e-10;  // relative, kernel detection
inline constexpr double kPsdTol = 1e-10;   // absolute, negative-eigenvalue slack
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Square dense complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> values);
  /// |v><v|
  static Matrix outer(std::span<const cplx> v);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  std::span<const cplx> data() const { return data_; }

  Matrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(cplx s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// Matrix known to be Hermitian. Construction checks
/// |a_ij - conj(a_ji)| <= kHermTol * max(1, ||A||_F) and then symmetrizes.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(Matrix m);

  static HermitianMatrix identity(std::size_t dim);
  static HermitianMatrix zero(std::size_t dim);
  static HermitianMatrix diagonal(std::span<const double> values);
  static HermitianMatrix diagonal(std::initializer_list<double> values);
  static HermitianMatrix projector(std::span<const cplx> v);

  std::size_t dim() const { return m_.dim(); }
  const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  HermitianMatrix& operator+=(const HermitianMatrix& rhs);
  HermitianMatrix& operator-=(const HermitianMatrix& rhs);
  HermitianMatrix& operator*=(double s);

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

 private:
  struct Unchecked {};
  HermitianMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}
  friend HermitianMatrix congruence(const Matrix&, const HermitianMatrix&);

  Matrix m_;
};

/// X * H * X^dagger, Hermitian by construction.
HermitianMatrix congruence(const Matrix& x, const HermitianMatrix& h);

enum class SortOrder { unsorted, ascending, descending };

struct Spectrum {
  std::vector<double> values;
  SortOrder order = SortOrder::unsorted;

  std::size_t size() const { return values.size(); }
  double min() const;
  double max() const;
  Spectrum ascending() const;
  Spectrum descending() const;
};

struct EigenSystem {
  Spectrum spectrum;  // ascending
  Matrix vectors;     // column j is the eigenvector of spectrum.values[j]

  std::vector<cplx> vector(std::size_t j) const;
  HermitianMatrix reconstruct() const;
};

/// Cyclic complex Jacobi. Stops once the off-diagonal Frobenius mass drops
/// below 1e-13 * ||H||_F.
EigenSystem hermitian_eigensystem(const HermitianMatrix& h);
Spectrum eigenvalues(const HermitianMatrix& h);

double lambda_min(const HermitianMatrix& h);
double lambda_max(const HermitianMatrix& h);

/// Kernel threshold for a spectrum: |lambda| < kRankTol * max(1, max |lambda|).
double rank_threshold(const Spectrum& s);
std::size_t numerical_rank(const HermitianMatrix& h);

/// Schatten p-norm, p in [1, inf]; pass kInfinity for the operator norm.
double schatten_norm(const HermitianMatrix& h, double p);
double operator_norm(const HermitianMatrix& h);
double trace_norm(const HermitianMatrix& h);

/// 1/2 ||a - b||_1
double trace_distance(const HermitianMatrix& a, const HermitianMatrix& b);

/// Applies f to the eigenvalues. With on_support_only, kernel eigenvalues map
/// to 0 and f is never evaluated there.
HermitianMatrix spectral_function(const HermitianMatrix& h, const std::function<double(double)>& f,
                                  bool on_support_only = false);

HermitianMatrix tensor(const HermitianMatrix& a, const HermitianMatrix& b);

struct BipartiteDims {
  std::size_t a = 1;
  std::size_t b = 1;
  std::size_t total() const { return a * b; }
};

enum class Subsystem { A, B };

/// Reduced operator on `keep`, tracing out the other factor.
HermitianMatrix partial_trace(const HermitianMatrix& rho, BipartiteDims dims, Subsystem keep);

/// sum_j P_j tau P_j. Each P_j must be an orthogonal projector.
HermitianMatrix pinch(const HermitianMatrix& tau, std::span<const HermitianMatrix> projectors);

/// Projector onto the span of eigenvectors whose eigenvalue exceeds the rank threshold.
HermitianMatrix support_projector(const HermitianMatrix& h);

/// ||AB - BA||_inf (spectral norm via the Hermitian i[A,B]).
double commutator_norm(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace qentropy
