#pragma once

#include "condrep/dataset.hpp"
#include "condrep/loss.hpp"
#include "condrep/psd_linalg.hpp"

namespace condrep {

/// Output of a within-task solve. `averaged` is the algorithm output used for
/// prediction; `last` is the final iterate, kept because the meta-level
/// subgradient approximation substitutes it for the exact minimizer.
struct InnerSolution {
  Vector averaged;
  Vector last;
  double trajectory_empirical_risk = 0.0;

  // Batch-solver report. `gap_bound` is a certified upper bound on
  // R_{Z,θ}(averaged) - min R_{Z,θ}; `converged` is false when max_iter ran
  // out before the bound dropped below tol.
  double gap_bound = 0.0;
  long iterations = 0;
  bool converged = true;
};

/// Preconditioned online subgradient descent on the regularized empirical
/// risk: w_1 = 0, s_i ∈ ∂ℓ(·, y_i)(⟨x_i, w_i⟩), p_i = s_i·x_i + θ†w_i,
/// w_{i+1} = w_i - θ·p_i/i. Returns the average of the pre-update iterates
/// w_1..w_n and the final iterate w_{n+1}. Data is consumed in stored order.
InnerSolution solve_online(const SymMatrix& theta, const LabeledDataset& data,
                           const Loss& loss);

/// Batch regularized empirical risk minimizer over Ran(θ): argmin of
/// (1/n)Σℓ(⟨x_i,w⟩,y_i) + ⟨w,θ†w⟩/2. Realized by the substitution
/// w = θ^{1/2}v and subgradient descent with step c/√t and suffix averaging
/// on the resulting 1-strongly-convex objective. Stops once the certified
/// optimality gap is below tol; otherwise reports the achieved gap.
InnerSolution solve_batch(const SymMatrix& theta, const LabeledDataset& data,
                          const Loss& loss, double tol = 1e-6,
                          long max_iter = 50000);

/// (1/n) Σ ℓ(⟨x_i, w⟩, y_i).
double empirical_risk(const Vector& w, const LabeledDataset& data,
                      const Loss& loss);

}  // namespace condrep
