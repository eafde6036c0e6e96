#include "groupsel/matrix.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "groupsel/errors.hpp"
#include "groupsel/tolerances.hpp"

namespace groupsel {

namespace {

using Emat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EmatCol = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;

Eigen::Map<const Emat> emap(const ComplexMatrix& m) {
  return {m.data(), m.rows(), m.cols()};
}

Eigen::Map<Emat> emap(ComplexMatrix& m) { return {m.data(), m.rows(), m.cols()}; }

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
  data_.assign(static_cast<std::size_t>(rows) * cols, cplx(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::real_part() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].real();
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double s = 0.0;
  for (const cplx& v : data_) s = std::max(s, std::abs(v));
  return s;
}

double ComplexMatrix::max_abs_imag() const {
  double s = 0.0;
  for (const cplx& v : data_) s = std::max(s, std::abs(v.imag()));
  return s;
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "shape mismatch in matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "shape mismatch in matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
  for (cplx& v : data_) v *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols() == b.rows(), "shape mismatch in matrix product");
  ComplexMatrix out(a.rows(), b.cols());
  emap(out).noalias() = emap(a) * emap(b);
  return out;
}

ComplexMatrix operator*(cplx scale, ComplexMatrix a) { return a *= scale; }

cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch in inner product");
  cplx s = 0.0;
  const cplx* pa = a.data();
  const cplx* pb = b.data();
  const std::size_t n = static_cast<std::size_t>(a.rows()) * a.cols();
  for (std::size_t k = 0; k < n; ++k) s += std::conj(pa[k]) * pb[k];
  return s;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.square() && b.square() && a.rows() == b.rows(),
          "commutator requires square matrices of equal dimension");
  ComplexMatrix out(a.rows(), a.cols());
  emap(out).noalias() = emap(a) * emap(b);
  emap(out).noalias() -= emap(b) * emap(a);
  return out;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
  require(m_.square(), "Hermitian matrix must be square and non-empty");
  require(m_.all_finite(), "Hermitian matrix must have finite entries");
  double defect_sq = 0.0;
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = i; j < m_.cols(); ++j)
      defect_sq += (i == j ? 1.0 : 2.0) * std::norm(m_(i, j) - std::conj(m_(j, i)));
  const double scale = std::max(1.0, m_.frobenius_norm());
  if (std::sqrt(defect_sq) > kHermTolRel * scale)
    throw ValidationError("matrix is not Hermitian within tolerance");
  for (int i = 0; i < m_.rows(); ++i) {
    m_(i, i) = m_(i, i).real();
    for (int j = i + 1; j < m_.cols(); ++j) {
      const cplx avg = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
      m_(i, j) = avg;
      m_(j, i) = std::conj(avg);
    }
  }
}

ComplexMatrix double_commutator(const HermitianMatrix& r, const ComplexMatrix& b) {
  const ComplexMatrix& rm = r.matrix();
  require(b.square() && b.rows() == rm.rows(),
          "double commutator requires matching square matrices");
  const int n = rm.rows();
  ComplexMatrix r2(n, n), rb(n, n), out(n, n);
  emap(r2).noalias() = emap(rm) * emap(rm);
  emap(rb).noalias() = emap(rm) * emap(b);
  emap(out).noalias() = emap(r2) * emap(b);
  emap(out).noalias() -= 2.0 * (emap(rb) * emap(rm));
  emap(out).noalias() += emap(b) * emap(r2);
  return out;
}

EigenDecomposition hermitian_eig(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<EmatCol> solver(emap(h.matrix()));
  if (solver.info() != Eigen::Success)
    throw NumericalError("Hermitian eigendecomposition failed to converge");
  const int n = h.dim();
  EigenDecomposition out;
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  out.eigenvectors = ComplexMatrix(n, n);
  emap(out.eigenvectors) = solver.eigenvectors();
  return out;
}

GevpResult gevp(const HermitianMatrix& m, const HermitianMatrix& g) {
  require(m.dim() == g.dim(), "pencil matrices must share a dimension");
  const int n = m.dim();
  Eigen::LLT<EmatCol> llt(EmatCol(emap(g.matrix())));
  if (llt.info() != Eigen::Success)
    throw NumericalError("Gram matrix is not positive definite");
  const EmatCol l = llt.matrixL();
  EmatCol t = l.triangularView<Eigen::Lower>().solve(EmatCol(emap(m.matrix())));
  EmatCol s = l.triangularView<Eigen::Lower>().solve(EmatCol(t.adjoint()));
  s = 0.5 * (s + s.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<EmatCol> solver(s);
  if (solver.info() != Eigen::Success)
    throw NumericalError("reduced eigendecomposition failed to converge");
  EmatCol v = l.adjoint().triangularView<Eigen::Upper>().solve(solver.eigenvectors());
  GevpResult out;
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  out.eigenvectors = ComplexMatrix(n, n);
  emap(out.eigenvectors) = v;
  return out;
}

GevpMin gevp_min(const HermitianMatrix& m, const HermitianMatrix& g) {
  const GevpResult full = gevp(m, g);
  const double floor = -1e-10 * m.frobenius_norm();
  if (full.eigenvalues.front() < floor)
    throw NumericalError("pencil is significantly indefinite: lambda_min = " +
                         std::to_string(full.eigenvalues.front()));
  GevpMin out;
  out.spectrum = full.eigenvalues;
  for (double& v : out.spectrum)
    if (v < 0.0) v = 0.0;
  out.lambda_min = out.spectrum.front();
  out.coefficients.resize(m.dim());
  for (int i = 0; i < m.dim(); ++i) out.coefficients[i] = full.eigenvectors(i, 0);
  return out;
}

HermitianMatrix matrix_exp_neg(const HermitianMatrix& h, double beta) {
  const EigenDecomposition eig = hermitian_eig(h);
  const int n = h.dim();
  ComplexMatrix scaled(n, n);
  for (int j = 0; j < n; ++j) {
    const double w = std::exp(-beta * eig.eigenvalues[j]);
    for (int i = 0; i < n; ++i) scaled(i, j) = w * eig.eigenvectors(i, j);
  }
  return HermitianMatrix(scaled * eig.eigenvectors.adjoint());
}

HermitianMatrix shifted_inverse(const HermitianMatrix& h) {
  const EigenDecomposition eig = hermitian_eig(h);
  const int n = h.dim();
  ComplexMatrix scaled(n, n);
  for (int j = 0; j < n; ++j) {
    const double d = 1.0 + eig.eigenvalues[j];
    if (std::abs(d) < 1e-12) throw NumericalError("shifted matrix is numerically singular");
    for (int i = 0; i < n; ++i) scaled(i, j) = eig.eigenvectors(i, j) / d;
  }
  return HermitianMatrix(scaled * eig.eigenvectors.adjoint());
}

double structural_capacity(const HermitianMatrix& r) {
  const EigenDecomposition eig = hermitian_eig(r);
  double trace_norm = 0.0;
  double energy = 0.0;
  for (double lam : eig.eigenvalues) {
    trace_norm += std::abs(lam);
    energy += lam * lam;
  }
  if (energy <= 0.0) throw ValidationError("structural capacity requires a nonzero matrix");
  return 1.0 + trace_norm * trace_norm / energy;
}

HermitianMatrix random_hermitian(int m, Ensemble ensemble, Rng& rng) {
  require(m >= 1, "random Hermitian dimension must be positive");
  ComplexMatrix w(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      w(i, j) = ensemble == Ensemble::RealSymmetric ? cplx(rng.normal(), 0.0)
                                                    : rng.complex_normal();
  ComplexMatrix sym(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sym(i, j) = 0.5 * (w(i, j) + std::conj(w(j, i)));
  return HermitianMatrix(std::move(sym));
}

}  // namespace groupsel
