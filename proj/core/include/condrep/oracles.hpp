#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "condrep/psd_linalg.hpp"

namespace condrep {

/// Population moments of an environment as seen from some side information:
/// W is the second moment of the per-task target vectors, Cv the input
/// second moment, n the within-task sample size and L the loss Lipschitz
/// constant. Ran(W) ⊆ Ran(Cv) always holds for moments of a real
/// environment, so a violation is rejected as bad input.
struct EnvMoments {
  SymMatrix W;
  SymMatrix Cv;
  long n = 0;
  double L = 1.0;

  EnvMoments(SymMatrix w, SymMatrix cv, long samples, double lipschitz);
};

/// The representation minimizing the two-term risk bound:
/// (√n/2L)·Cv^{†/2}(Cv^{1/2}·W·Cv^{1/2})^{1/2}·Cv^{†/2}.
SymMatrix conditional_oracle(const EnvMoments& m);

/// Same formula applied to unconditional (marginal) moments.
SymMatrix unconditional_oracle(const EnvMoments& m);

/// The earlier trace-constrained choice W^{1/2}/Tr(W^{1/2}); unit trace.
SymMatrix legacy_oracle(const SymMatrix& w);

/// ‖A^{1/2}·B^{1/2}‖_* computed as Tr((A^{1/2}·B·A^{1/2})^{1/2}).
double root_product_trace_norm(const SymMatrix& a, const SymMatrix& b);

/// Monte-Carlo average over side samples of
/// Tr(θ(s)†·W(s))/2 + (2L²/n)·Tr(θ(s)·C(s)). Requires
/// Ran(W(s)) ⊆ Ran(θ(s)) for every sample; a violation reports the sample.
double bound_rhs(const std::function<SymMatrix(std::size_t)>& theta_of,
                 const std::function<EnvMoments(std::size_t)>& moments_of,
                 std::size_t num_samples);

/// Closed form of min over PSD θ with Ran(A) ⊆ Ran(θ) of
/// Tr(θ⁻¹A) + Tr(θB): minimizer B^{†/2}(B^{1/2}AB^{1/2})^{1/2}B^{†/2},
/// minimum 2‖B^{1/2}A^{1/2}‖_*. Requires Ran(A) ⊆ Ran(B).
struct VariationalSolution {
  SymMatrix minimizer;
  double minimum = 0.0;
};
VariationalSolution variational_tracenorm(const SymMatrix& a, const SymMatrix& b);

/// Independent numerical route for the same problem: projected gradient with
/// Armijo backtracking on Tr(θ⁻¹A) + Tr(θB) over the positive-definite cone.
/// Exists as a diagnostic cross-check of the closed form; it shares no code
/// path with variational_tracenorm.
struct PsdMinimizeResult {
  SymMatrix argmin;
  double value = 0.0;
  long iterations = 0;
};
PsdMinimizeResult minimize_inverse_trace_objective(const SymMatrix& a,
                                                   const SymMatrix& b,
                                                   long max_iter = 100000);

/// Both sides of the cluster-mixture trace identity for a constructed
/// m-cluster environment with C = I and per-cluster target covariances on
/// mutually orthogonal coordinate blocks (lhs/rhs = 1/√m exactly when
/// orthogonal; strictly above 1/√m when the blocks are drawn overlapping).
struct ClusterGap {
  double lhs = 0.0;
  double rhs = 0.0;
};
ClusterGap cluster_mixture_gap(int m, int d, std::uint64_t seed,
                               int block_rank = 2, bool orthogonal = true);

/// Empirical moments from sampled target vectors and per-task input second
/// moments.
EnvMoments moments_from_samples(const std::vector<Vector>& targets,
                                const std::vector<SymMatrix>& input_moments,
                                long n, double lipschitz);

/// One row of the oracle-check report.
struct IdentityCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Runs the closed-form identity battery (Moore-Penrose, projector order,
/// variational trace norm, cluster identity, norm dualities, oracle bound
/// attainment) on seeded random instances.
std::vector<IdentityCheck> run_identity_checks(std::uint64_t seed,
                                               int num_samples = 50);

}  // namespace condrep
