#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "condrep/conditioner.hpp"
#include "condrep/dataset.hpp"
#include "condrep/feature_map.hpp"
#include "condrep/inner_solver.hpp"
#include "condrep/loss.hpp"

namespace condrep {

/// How the within-task vector entering the meta-subgradient is obtained:
/// the batch minimizer, or the last iterate of the online solver (the cheap
/// approximation used in the experiments).
enum class InnerMode { batch, last_iterate };

InnerMode inner_mode_by_name(const std::string& name);
std::string to_string(InnerMode mode);

/// Subgradient of the surrogate meta-loss, reported against both parameters.
/// grad_C is the d×d core ∇̂; grad_H is its congruence under the feature
/// lift, so the two share the same spectrum signs.
struct MetaGradient {
  SymMatrix grad_H;
  SymMatrix grad_C;
};

/// ∇̂ = -(1/2)·(θ†w)(θ†w)ᵀ + 2L²·XᵀX/n².
SymMatrix gradient_core(const SymMatrix& theta, const Vector& w,
                        const LabeledDataset& data, double lipschitz);

/// Surrogate meta-loss at one task: the regularized empirical risk of the
/// batch solution under θ = conditioned_representation(cond, φ), plus the
/// trace penalty (2L²/n)·Tr(θ·XᵀX/n).
double surrogate_meta_loss(const Conditioner& cond, const Vector& phi,
                           const LabeledDataset& data, const Loss& loss,
                           double batch_tol = 1e-8,
                           long batch_max_iter = 200000);

/// The meta-subgradient at (H, C) for one task.
MetaGradient meta_subgradient(const Conditioner& cond, const Vector& phi,
                              const LabeledDataset& data, const Loss& loss,
                              InnerMode mode, double batch_tol = 1e-6,
                              long batch_max_iter = 50000);

/// One meta-training example: side information and training data of a task.
struct MetaExample {
  const LabeledDataset* side = nullptr;
  const LabeledDataset* train = nullptr;
  std::string id;
};

/// State visible to the per-step hook: the pre-update iterate at step t and
/// the running sums of iterates 1..t.
struct MetaState {
  Conditioner current;
  Matrix H_sum;
  Matrix C_sum;
  long t = 0;
  double gamma = 0.0;
  std::uint64_t rng_seed = 0;

  Conditioner average() const;
};

struct MetaSgdOptions {
  double gamma = 0.0;
  long steps = 0;
  InnerMode inner_mode = InnerMode::last_iterate;
  /// Keep H pinned at its start value and update only C. With the constant
  /// feature map this turns the loop into the unconditional method.
  bool freeze_H = false;
  double batch_tol = 1e-6;
  long batch_max_iter = 50000;
  std::uint64_t rng_seed = 0;
  /// Called once per step, after the iterate has been folded into the
  /// running averages and before the parameters move.
  std::function<void(const MetaState&)> on_step;
};

/// Projected stochastic meta-subgradient descent: per step evaluate
/// θ_t at the task's features, solve the inner problem, form both
/// subgradients at (H_t, C_t), take a γ step, and project each parameter
/// back onto the PSD cone. Returns the average of the iterates 1..T.
Conditioner meta_sgd(const std::function<MetaExample(long)>& stream,
                     const FeatureMap& map, const Loss& loss,
                     const MetaSgdOptions& opts, const Conditioner& init);

/// State hook for the dedicated single-matrix loop below.
struct UnconditionalState {
  SymMatrix current;
  Matrix C_sum;
  long t = 0;
  double gamma = 0.0;

  SymMatrix average() const;
};

/// The unconditional method as its own plain SGD over one d×d matrix
/// (θ_t = C_t, no feature lift). Step for step it reproduces meta_sgd with
/// the constant feature map and frozen H = 0 bit for bit.
SymMatrix unconditional_sgd(
    const std::function<MetaExample(long)>& stream, const Loss& loss,
    const MetaSgdOptions& opts, const SymMatrix& init,
    const std::function<void(const UnconditionalState&)>& on_step = {});

/// γ = ‖(H-H₀, C-C₀)‖_F / ((1+K²)(LR)²) · (1/2 + 2/n)⁻¹ · 1/√T.
double theoretical_step_size(double distance, double feature_bound,
                             double lipschitz, double input_bound, long n,
                             long steps);

}  // namespace condrep
