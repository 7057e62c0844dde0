#pragma once

#include <functional>
#include <string>

namespace condrep {

/// Convex loss on (prediction, label) with a declared Lipschitz constant in
/// the first argument. `conjugate` is the Fenchel conjugate of
/// ℓ(·, label) evaluated at a dual value; it is what lets the batch solver
/// certify its optimality gap. Losses without a conjugate still work, with a
/// weaker certificate.
struct Loss {
  std::string name;
  double lipschitz = 1.0;
  std::function<double(double, double)> value;        // (prediction, label)
  std::function<double(double, double)> subgradient;  // (prediction, label)
  std::function<double(double, double)> conjugate;    // (dual, label); optional

  bool has_conjugate() const { return static_cast<bool>(conjugate); }
};

/// |p - y|, L = 1, subgradient sign(p - y) with sign(0) = 0.
Loss absolute_loss();

/// (p - y)²/2, subgradient p - y. The declared constant bounds the
/// subgradient on the |p - y| ≤ lipschitz range only; callers are expected to
/// keep residuals inside it.
Loss squared_loss(double lipschitz = 2.0);

Loss loss_by_name(const std::string& name);

}  // namespace condrep
