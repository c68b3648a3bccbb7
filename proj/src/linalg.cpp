#include "qentropy/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qentropy/errors.hpp"

namespace qentropy {

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::outer(std::span<const cplx> v) {
  Matrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

cplx Matrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rhs.dim_ != dim_) throw DimensionError("matrix dimensions differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rhs.dim_ != dim_) throw DimensionError("matrix dimensions differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix dimensions differ");
  const std::size_t n = a.dim();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

// ---------------------------------------------------------------------------
// HermitianMatrix

namespace {

void symmetrize(Matrix& m) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.dim() == 0) throw ValidationError("Hermitian matrix must have dim >= 1");
  const double scale = std::max(1.0, m_.frobenius_norm());
  const std::size_t n = m_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double dev = std::abs(m_(i, j) - std::conj(m_(j, i)));
      if (!(dev <= kHermTol * scale))
        throw ValidationError("matrix is not Hermitian at (" + std::to_string(i) + "," +
                              std::to_string(j) + "), deviation " + std::to_string(dev));
    }
  symmetrize(m_);
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  return HermitianMatrix(Matrix::identity(dim), Unchecked{});
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) { return HermitianMatrix(Matrix(dim), Unchecked{}); }

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  return HermitianMatrix(Matrix::diagonal(values), Unchecked{});
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

HermitianMatrix HermitianMatrix::projector(std::span<const cplx> v) {
  Matrix m = Matrix::outer(v);
  symmetrize(m);
  return HermitianMatrix(std::move(m), Unchecked{});
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& rhs) {
  m_ += rhs.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& rhs) {
  m_ -= rhs.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

HermitianMatrix congruence(const Matrix& x, const HermitianMatrix& h) {
  Matrix r = x * h.matrix() * x.adjoint();
  symmetrize(r);
  return HermitianMatrix(std::move(r), HermitianMatrix::Unchecked{});
}

// ---------------------------------------------------------------------------
// Spectra

double Spectrum::min() const {
  if (values.empty()) return 0.0;
  if (order == SortOrder::ascending) return values.front();
  if (order == SortOrder::descending) return values.back();
  return *std::min_element(values.begin(), values.end());
}

double Spectrum::max() const {
  if (values.empty()) return 0.0;
  if (order == SortOrder::ascending) return values.back();
  if (order == SortOrder::descending) return values.front();
  return *std::max_element(values.begin(), values.end());
}

Spectrum Spectrum::ascending() const {
  Spectrum s{values, SortOrder::ascending};
  std::sort(s.values.begin(), s.values.end());
  return s;
}

Spectrum Spectrum::descending() const {
  Spectrum s{values, SortOrder::descending};
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

std::vector<cplx> EigenSystem::vector(std::size_t j) const {
  std::vector<cplx> v(vectors.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = vectors(i, j);
  return v;
}

HermitianMatrix EigenSystem::reconstruct() const {
  return congruence(vectors, HermitianMatrix::diagonal(spectrum.values));
}

EigenSystem hermitian_eigensystem(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  Matrix a = h.matrix();
  Matrix v = Matrix::identity(n);

  const double target = 1e-13 * a.frobenius_norm();
  auto off_diagonal = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const cplx phase = a(p, q) / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Real Jacobi rotation on the phase-removed 2x2 block [[app, |apq|], [|apq|, aqq]].
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // J = diag(1, conj(phase)) * [[c, s], [-s, c]] restricted to (p, q).
        const cplx jpp = c;
        const cplx jpq = s;
        const cplx jqp = -s * std::conj(phase);
        const cplx jqq = c * std::conj(phase);

        // A <- A J
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        // A <- J^dagger A
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        // V <- V J
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem es;
  es.spectrum.order = SortOrder::ascending;
  es.spectrum.values.resize(n);
  es.vectors = Matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    es.spectrum.values[col] = a(idx[col], idx[col]).real();
    for (std::size_t k = 0; k < n; ++k) es.vectors(k, col) = v(k, idx[col]);
  }
  return es;
}

Spectrum eigenvalues(const HermitianMatrix& h) { return hermitian_eigensystem(h).spectrum; }

double lambda_min(const HermitianMatrix& h) { return eigenvalues(h).min(); }
double lambda_max(const HermitianMatrix& h) { return eigenvalues(h).max(); }

double rank_threshold(const Spectrum& s) {
  double m = 0.0;
  for (double x : s.values) m = std::max(m, std::abs(x));
  return kRankTol * std::max(1.0, m);
}

std::size_t numerical_rank(const HermitianMatrix& h) {
  const Spectrum s = eigenvalues(h);
  const double thr = rank_threshold(s);
  return static_cast<std::size_t>(
      std::count_if(s.values.begin(), s.values.end(), [&](double x) { return std::abs(x) >= thr; }));
}

double schatten_norm(const HermitianMatrix& h, double p) {
  if (!(p >= 1.0)) throw DomainError("Schatten norm requires p >= 1");
  const Spectrum s = eigenvalues(h);
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : s.values) m = std::max(m, std::abs(x));
    return m;
  }
  double acc = 0.0;
  for (double x : s.values) acc += std::pow(std::abs(x), p);
  return std::pow(acc, 1.0 / p);
}

double operator_norm(const HermitianMatrix& h) { return schatten_norm(h, kInfinity); }
double trace_norm(const HermitianMatrix& h) { return schatten_norm(h, 1.0); }

double trace_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace_distance: dimension mismatch");
  return 0.5 * trace_norm(a - b);
}

HermitianMatrix spectral_function(const HermitianMatrix& h, const std::function<double(double)>& f,
                                  bool on_support_only) {
  EigenSystem es = hermitian_eigensystem(h);
  const double thr = rank_threshold(es.spectrum);
  std::vector<double> mapped(es.spectrum.size());
  for (std::size_t j = 0; j < mapped.size(); ++j) {
    const double lam = es.spectrum.values[j];
    if (on_support_only && std::abs(lam) < thr) {
      mapped[j] = 0.0;
      continue;
    }
    const double y = f(lam);
    if (!std::isfinite(y))
      throw DomainError("spectral_function: f undefined at eigenvalue " + std::to_string(lam));
    mapped[j] = y;
  }
  return congruence(es.vectors, HermitianMatrix::diagonal(mapped));
}

HermitianMatrix tensor(const HermitianMatrix& a, const HermitianMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  Matrix m(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) m(i * db + k, j * db + l) = aij * b(k, l);
    }
  return HermitianMatrix(std::move(m));
}

HermitianMatrix partial_trace(const HermitianMatrix& rho, BipartiteDims dims, Subsystem keep) {
  if (dims.a == 0 || dims.b == 0 || rho.dim() != dims.total())
    throw DimensionError("partial_trace: dimension " + std::to_string(rho.dim()) + " does not factor as " +
                         std::to_string(dims.a) + "x" + std::to_string(dims.b));
  if (keep == Subsystem::A) {
    Matrix r(dims.a);
    for (std::size_t i = 0; i < dims.a; ++i)
      for (std::size_t j = 0; j < dims.a; ++j)
        for (std::size_t k = 0; k < dims.b; ++k) r(i, j) += rho(i * dims.b + k, j * dims.b + k);
    return HermitianMatrix(std::move(r));
  }
  Matrix r(dims.b);
  for (std::size_t k = 0; k < dims.b; ++k)
    for (std::size_t l = 0; l < dims.b; ++l)
      for (std::size_t i = 0; i < dims.a; ++i) r(k, l) += rho(i * dims.b + k, i * dims.b + l);
  return HermitianMatrix(std::move(r));
}

HermitianMatrix pinch(const HermitianMatrix& tau, std::span<const HermitianMatrix> projectors) {
  HermitianMatrix out = HermitianMatrix::zero(tau.dim());
  for (const auto& p : projectors) {
    if (p.dim() != tau.dim()) throw DimensionError("pinch: projector dimension mismatch");
    const Matrix sq = p.matrix() * p.matrix();
    if ((sq - p.matrix()).frobenius_norm() > 1e-9 * std::max(1.0, p.matrix().frobenius_norm()))
      throw ValidationError("pinch: operator is not a projector (P^2 != P)");
    out += congruence(p.matrix(), tau);
  }
  return out;
}

HermitianMatrix support_projector(const HermitianMatrix& h) {
  return spectral_function(h, [](double) { return 1.0; }, true);
}

double commutator_norm(const HermitianMatrix& a, const HermitianMatrix& b) {
  Matrix c = a.matrix() * b.matrix() - b.matrix() * a.matrix();
  c *= cplx(0.0, 1.0);
  return operator_norm(HermitianMatrix(std::move(c)));
}

}  // namespace qentropy
