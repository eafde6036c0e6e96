#pragma once

#include <complex>
#include <vector>

#include "groupsel/rng.hpp"

namespace groupsel {

using cplx = std::complex<double>;

// Dense complex matrix with row-major contiguous storage.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ > 0 && rows_ == cols_; }

  cplx& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix real_part() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  double max_abs_imag() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale);

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, ComplexMatrix a);

// <A, B> = Tr(A^* B), conjugate-linear in the first argument.
cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// [A, B] = AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Square complex matrix certified Hermitian at construction: the defect
// max_ij |M_ij - conj(M_ji)| must not exceed kHermTolRel * max(1, max_ij
// |M_ij|), after which the stored matrix is symmetrized to (M + M^*)/2.
class HermitianMatrix {
public:
  explicit HermitianMatrix(ComplexMatrix m);

  int dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  operator const ComplexMatrix&() const { return m_; }
  const cplx& operator()(int i, int j) const { return m_(i, j); }
  double frobenius_norm() const { return m_.frobenius_norm(); }

private:
  ComplexMatrix m_;
};

// [R, [R, B]] = R^2 B - 2 R B R + B R^2.
ComplexMatrix double_commutator(const HermitianMatrix& r, const ComplexMatrix& b);

// Eigenvalues ascending; eigenvectors stored as the columns of a unitary.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

EigenDecomposition hermitian_eig(const HermitianMatrix& h);

// Generalized problem M c = lambda G c with G positive definite.  Solved by
// Cholesky reduction G = L L^*, a Hermitian solve of L^{-1} M L^{-*}, and
// back substitution; eigenvalues ascend and the columns satisfy V^* G V = I.
struct GevpResult {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

GevpResult gevp(const HermitianMatrix& m, const HermitianMatrix& g);

struct GevpMin {
  double lambda_min = 0.0;
  std::vector<cplx> coefficients;
  std::vector<double> spectrum;
};

GevpMin gevp_min(const HermitianMatrix& m, const HermitianMatrix& g);

// e^{-beta H} through the spectral decomposition.
HermitianMatrix matrix_exp_neg(const HermitianMatrix& h, double beta);

// (I + H)^{-1}; requires every eigenvalue of H to stay away from -1.
HermitianMatrix shifted_inverse(const HermitianMatrix& h);

// kappa(R) = 1 + |R|_tr^2 / Tr(R^2) with |R|_tr the sum of |eigenvalue|.
double structural_capacity(const HermitianMatrix& r);

enum class Ensemble { RealSymmetric, ComplexHermitian };

// (W + W^*)/2 with i.i.d. standard normal entries in W.
HermitianMatrix random_hermitian(int m, Ensemble ensemble, Rng& rng);

}  // namespace groupsel
