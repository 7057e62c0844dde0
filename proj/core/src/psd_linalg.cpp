#include "condrep/psd_linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace condrep {

namespace {

// Below this dimension Eigen's solver beats the LAPACK call overhead.
constexpr Eigen::Index kEigenSolverMaxDim = 64;

void check_finite(const Matrix& m, const char* who) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
  }
}

}  // namespace

SymMatrix::SymMatrix(const Matrix& entries) {
  if (entries.rows() != entries.cols()) {
    throw std::invalid_argument("SymMatrix: input is not square");
  }
  check_finite(entries, "SymMatrix");
  const double scale = entries.cwiseAbs().maxCoeff();
  const double asym = (entries - entries.transpose()).cwiseAbs().maxCoeff();
  if (scale > 0.0 && asym > 1e-12 * scale) {
    throw std::invalid_argument("SymMatrix: relative asymmetry " +
                                std::to_string(asym / scale) + " exceeds 1e-12");
  }
  entries_ = 0.5 * (entries + entries.transpose());
}

EigDecomp sym_eig(const SymMatrix& m) {
  const Eigen::Index n = m.dim();
  EigDecomp out;
  if (n <= kEigenSolverMaxDim) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m.m());
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("sym_eig: eigensolver failed");
    }
    out.eigenvalues = es.eigenvalues();
    out.eigenvectors = es.eigenvectors();
    return out;
  }
  Matrix v = m.m();
  Vector w(n);
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L',
                                         static_cast<lapack_int>(n), v.data(),
                                         static_cast<lapack_int>(n), w.data());
  if (info != 0) {
    throw std::runtime_error("sym_eig: dsyevd failed with info " +
                             std::to_string(info));
  }
  out.eigenvalues = std::move(w);
  out.eigenvectors = std::move(v);
  return out;
}

SymMatrix psd_project(const SymMatrix& m) {
  const EigDecomp eig = sym_eig(m);
  if (eig.eigenvalues.size() == 0 || eig.eigenvalues(0) >= 0.0) {
    return m;  // already PSD: the projection is the identity map
  }
  return SymMatrix(eig.rebuild([](double l) { return std::max(l, 0.0); }));
}

SymMatrix psd_project_bounded(const SymMatrix& m, int max_neg_rank) {
  const Eigen::Index n = m.dim();
  const lapack_int want =
      std::min<lapack_int>(static_cast<lapack_int>(n), max_neg_rank + 2);
  if (n <= kEigenSolverMaxDim || want >= n) {
    return psd_project(m);
  }
  Matrix a = m.m();
  Vector w(n);
  Matrix z(n, want);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(want));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsyevr(
      LAPACK_COL_MAJOR, 'V', 'I', 'L', static_cast<lapack_int>(n), a.data(),
      static_cast<lapack_int>(n), 0.0, 0.0, 1, want, 0.0, &found, w.data(),
      z.data(), static_cast<lapack_int>(n), isuppz.data());
  if (info != 0) {
    throw std::runtime_error("psd_project_bounded: dsyevr failed with info " +
                             std::to_string(info));
  }
  lapack_int neg = 0;
  while (neg < found && w(neg) < 0.0) ++neg;
  if (neg == found) {
    // every extracted eigenvalue is negative: the rank bound was wrong
    return psd_project(m);
  }
  if (neg == 0) {
    return m;
  }
  Matrix out = m.m();
  for (lapack_int i = 0; i < neg; ++i) {
    out.noalias() -= w(i) * z.col(i) * z.col(i).transpose();
  }
  return SymMatrix(out);
}

namespace {

// Shared validation for the spectral-function operations: reject a matrix
// whose spectrum dips below -rtol·λ_max.
EigDecomp checked_psd_eig(const SymMatrix& m, double rtol, const char* who) {
  if (!(rtol > 0.0)) {
    throw std::invalid_argument(std::string(who) + ": rtol must be positive");
  }
  EigDecomp eig = sym_eig(m);
  const Eigen::Index n = eig.eigenvalues.size();
  const double lmax = n > 0 ? eig.eigenvalues(n - 1) : 0.0;
  const double floor = -rtol * std::max(lmax, 0.0);
  if (n > 0 && (eig.eigenvalues(0) < floor || lmax < 0.0)) {
    throw std::invalid_argument(std::string(who) + ": matrix is not PSD (λ_min = " +
                                std::to_string(n > 0 ? eig.eigenvalues(0) : 0.0) + ")");
  }
  return eig;
}

}  // namespace

SymMatrix pinv_psd(const SymMatrix& m, double rtol) {
  const EigDecomp eig = checked_psd_eig(m, rtol, "pinv_psd");
  const Eigen::Index n = eig.eigenvalues.size();
  const double cutoff = rtol * std::max(n > 0 ? eig.eigenvalues(n - 1) : 0.0, 0.0);
  return SymMatrix(
      eig.rebuild([cutoff](double l) { return l > cutoff ? 1.0 / l : 0.0; }));
}

SymMatrix sqrt_psd(const SymMatrix& m, double rtol) {
  const EigDecomp eig = checked_psd_eig(m, rtol, "sqrt_psd");
  return SymMatrix(
      eig.rebuild([](double l) { return std::sqrt(std::max(l, 0.0)); }));
}

SymMatrix pinv_sqrt_psd(const SymMatrix& m, double rtol) {
  return pinv_psd(sqrt_psd(m, rtol), rtol);
}

Matrix kron_id_lift(const Vector& phi, Eigen::Index d) {
  if (d < 1) {
    throw std::invalid_argument("kron_id_lift: d must be at least 1");
  }
  const Eigen::Index k = phi.size();
  Matrix lift = Matrix::Zero(d * k, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    lift.block(i * k, i, k, 1) = phi;
  }
  return lift;
}

double trace_norm(const SymMatrix& m) {
  return sym_eig(m).eigenvalues.cwiseAbs().sum();
}

double op_norm(const SymMatrix& m) {
  const Vector& ev = sym_eig(m).eigenvalues;
  return ev.size() > 0 ? ev.cwiseAbs().maxCoeff() : 0.0;
}

bool range_contains(const SymMatrix& a, const SymMatrix& b, double rtol) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("range_contains: dimension mismatch");
  }
  const EigDecomp ea = sym_eig(a);
  const EigDecomp eb = sym_eig(b);
  const Eigen::Index n = a.dim();
  const double cut_a = rtol * std::max(ea.eigenvalues.cwiseAbs().maxCoeff(), 0.0);
  const double cut_b = rtol * std::max(eb.eigenvalues.cwiseAbs().maxCoeff(), 0.0);

  std::vector<Eigen::Index> basis_b;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (eb.eigenvalues(j) > cut_b) basis_b.push_back(j);
  }
  Matrix vb(n, static_cast<Eigen::Index>(basis_b.size()));
  for (std::size_t j = 0; j < basis_b.size(); ++j) {
    vb.col(static_cast<Eigen::Index>(j)) = eb.eigenvectors.col(basis_b[j]);
  }

  constexpr double kResidualTol = 1e-8;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (ea.eigenvalues(j) <= cut_a) continue;
    const Vector v = ea.eigenvectors.col(j);
    const Vector residual = v - vb * (vb.transpose() * v);
    if (residual.norm() > kResidualTol) return false;
  }
  return true;
}

}  // namespace condrep
