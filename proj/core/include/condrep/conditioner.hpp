#pragma once

#include "condrep/psd_linalg.hpp"

namespace condrep {

/// Parameters (H, C) of the feature-conditioned representation
/// φ ↦ liftᵀ(φ)·H·lift(φ) + C with H ∈ S₊^{dk} and C ∈ S₊^d.
struct Conditioner {
  SymMatrix H;  // dk×dk
  SymMatrix C;  // d×d
  Eigen::Index d = 0;
  Eigen::Index k = 0;

  Conditioner() = default;
  Conditioner(SymMatrix h, SymMatrix c, Eigen::Index dim, Eigen::Index feat);

  static Conditioner Zero(Eigen::Index d, Eigen::Index k) {
    return Conditioner(SymMatrix::Zero(d * k), SymMatrix::Zero(d), d, k);
  }
};

/// The d×d representation at a feature vector φ. The quadratic form in H is
/// evaluated blockwise, without materializing the dk×d lift; the result is
/// PSD whenever (H, C) are.
SymMatrix conditioned_representation(const Conditioner& cond, const Vector& phi);

/// lift(φ)·G·liftᵀ(φ) for a d×d symmetric core G: the dk×dk matrix whose
/// (i,j) block is G_ij·φφᵀ. This is how a d×d gradient core is pushed to the
/// H parameter.
SymMatrix lift_congruence(const SymMatrix& core, const Vector& phi);

}  // namespace condrep
