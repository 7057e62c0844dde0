#include "condrep/conditioner.hpp"

#include <stdexcept>
#include <string>

namespace condrep {

Conditioner::Conditioner(SymMatrix h, SymMatrix c, Eigen::Index dim,
                         Eigen::Index feat)
    : H(std::move(h)), C(std::move(c)), d(dim), k(feat) {
  if (H.dim() != d * k || C.dim() != d) {
    throw std::invalid_argument("Conditioner: H must be dk x dk and C d x d");
  }
}

SymMatrix conditioned_representation(const Conditioner& cond, const Vector& phi) {
  if (phi.size() != cond.k) {
    throw std::invalid_argument("conditioned_representation: phi has size " +
                                std::to_string(phi.size()) + ", expected " +
                                std::to_string(cond.k));
  }
  const Eigen::Index d = cond.d;
  const Eigen::Index k = cond.k;
  // u_j = H[:, block j]·φ, then Q_ij = φᵀ·u_j[block i].
  Matrix u(d * k, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    u.col(j).noalias() = cond.H.m().middleCols(j * k, k) * phi;
  }
  Matrix q(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      q(i, j) = phi.dot(u.col(j).segment(i * k, k));
    }
  }
  return SymMatrix(q + cond.C.m());
}

SymMatrix lift_congruence(const SymMatrix& core, const Vector& phi) {
  const Eigen::Index d = core.dim();
  const Eigen::Index k = phi.size();
  const Matrix outer = phi * phi.transpose();
  Matrix out(d * k, d * k);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      out.block(i * k, j * k, k, k) = core.m()(i, j) * outer;
    }
  }
  return SymMatrix(out);
}

}  // namespace condrep
