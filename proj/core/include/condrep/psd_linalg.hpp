#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace condrep {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense symmetric matrix with value semantics. The wrapped entries are
/// symmetrized as (M + Mᵀ)/2 on construction so that round-off drift through
/// repeated updates cannot accumulate asymmetry. Construction rejects
/// non-square or non-finite input and input whose relative asymmetry exceeds
/// 1e-12 (that would indicate a logic error upstream, not round-off).
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(const Matrix& entries);

  static SymMatrix Zero(Eigen::Index dim) { return SymMatrix(Matrix::Zero(dim, dim)); }
  static SymMatrix Identity(Eigen::Index dim) {
    return SymMatrix(Matrix::Identity(dim, dim));
  }

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& m() const { return entries_; }

  double trace() const { return entries_.trace(); }
  double frobenius_norm() const { return entries_.norm(); }

 private:
  Matrix entries_;
};

/// Eigendecomposition of a SymMatrix: ascending eigenvalues, orthonormal
/// eigenvector columns. V·diag(λ)·Vᵀ reconstructs the source.
struct EigDecomp {
  Vector eigenvalues;
  Matrix eigenvectors;

  /// V diag(f(λ)) Vᵀ for a per-eigenvalue transform.
  template <typename F>
  Matrix rebuild(F&& f) const {
    Vector mapped = eigenvalues.unaryExpr(std::forward<F>(f));
    return eigenvectors * mapped.asDiagonal() * eigenvectors.transpose();
  }

  /// V diag(f(λ)) Vᵀ x without forming the matrix.
  template <typename F>
  Vector apply(F&& f, const Vector& x) const {
    Vector coeffs = eigenvectors.transpose() * x;
    coeffs.array() *= eigenvalues.unaryExpr(std::forward<F>(f)).array();
    return eigenvectors * coeffs;
  }
};

/// Relative eigenvalue cutoff shared by the pseudoinverse-style operations.
inline constexpr double kDefaultRankTol = 1e-10;

/// Full symmetric eigendecomposition (dense direct solver).
EigDecomp sym_eig(const SymMatrix& m);

/// Frobenius-nearest positive semidefinite matrix (eigenvalue clipping at
/// zero). A PSD input is returned unchanged, so the operation is an exact
/// fixed point on the cone.
SymMatrix psd_project(const SymMatrix& m);

/// psd_project for matrices whose negative part is known to have rank at most
/// `max_neg_rank` (e.g. a PSD matrix minus a low-rank PSD update). Only the
/// lowest eigenpairs are extracted; falls back to the full projection if the
/// rank bound turns out wrong.
SymMatrix psd_project_bounded(const SymMatrix& m, int max_neg_rank);

/// Moore-Penrose pseudoinverse of a PSD matrix. Eigenvalues below
/// rtol·λ_max are treated as zero. Rejects matrices with an eigenvalue below
/// -rtol·λ_max.
SymMatrix pinv_psd(const SymMatrix& m, double rtol = kDefaultRankTol);

/// PSD square root; sqrt_psd(M)² = M.
SymMatrix sqrt_psd(const SymMatrix& m, double rtol = kDefaultRankTol);

/// pinv_psd(sqrt_psd(M)).
SymMatrix pinv_sqrt_psd(const SymMatrix& m, double rtol = kDefaultRankTol);

/// The dk×d lift of a feature vector: column i equals vec(φ·e_iᵀ) under
/// column-major vec, i.e. entry (i·k + h, i) = φ_h and zero elsewhere.
Matrix kron_id_lift(const Vector& phi, Eigen::Index d);

/// Σ|λ_i| of a symmetric matrix.
double trace_norm(const SymMatrix& m);

/// max|λ_i| of a symmetric matrix.
double op_norm(const SymMatrix& m);

/// True iff every eigenvector of A with eigenvalue above rtol·λ_max(A) lies
/// in the span of B's eigenvectors with eigenvalue above rtol·λ_max(B),
/// up to a 1e-8 directional residual.
bool range_contains(const SymMatrix& a, const SymMatrix& b,
                    double rtol = kDefaultRankTol);

}  // namespace condrep
