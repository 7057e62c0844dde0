#include "condrep/meta_learner.hpp"

#include <cmath>
#include <stdexcept>

namespace condrep {

InnerMode inner_mode_by_name(const std::string& name) {
  if (name == "batch") return InnerMode::batch;
  if (name == "last_iterate") return InnerMode::last_iterate;
  throw std::invalid_argument("unknown inner mode: " + name);
}

std::string to_string(InnerMode mode) {
  return mode == InnerMode::batch ? "batch" : "last_iterate";
}

SymMatrix gradient_core(const SymMatrix& theta, const Vector& w,
                        const LabeledDataset& data, double lipschitz) {
  const double n = static_cast<double>(data.size());
  const Vector u = pinv_psd(theta).m() * w;
  Matrix core = (2.0 * lipschitz * lipschitz / (n * n)) *
                (data.inputs.transpose() * data.inputs);
  core.noalias() -= 0.5 * u * u.transpose();
  return SymMatrix(core);
}

namespace {

Vector inner_vector(const SymMatrix& theta, const LabeledDataset& data,
                    const Loss& loss, InnerMode mode, double batch_tol,
                    long batch_max_iter) {
  if (mode == InnerMode::batch) {
    return solve_batch(theta, data, loss, batch_tol, batch_max_iter).averaged;
  }
  return solve_online(theta, data, loss).last;
}

}  // namespace

double surrogate_meta_loss(const Conditioner& cond, const Vector& phi,
                           const LabeledDataset& data, const Loss& loss,
                           double batch_tol, long batch_max_iter) {
  const SymMatrix theta = conditioned_representation(cond, phi);
  const InnerSolution sol =
      solve_batch(theta, data, loss, batch_tol, batch_max_iter);
  const double n = static_cast<double>(data.size());
  const double reg = 0.5 * sol.averaged.dot(pinv_psd(theta).m() * sol.averaged);
  const double trace_term =
      (2.0 * loss.lipschitz * loss.lipschitz / (n * n)) *
      (data.inputs * theta.m()).cwiseProduct(data.inputs).sum();
  return empirical_risk(sol.averaged, data, loss) + reg + trace_term;
}

MetaGradient meta_subgradient(const Conditioner& cond, const Vector& phi,
                              const LabeledDataset& data, const Loss& loss,
                              InnerMode mode, double batch_tol,
                              long batch_max_iter) {
  const SymMatrix theta = conditioned_representation(cond, phi);
  const Vector w =
      inner_vector(theta, data, loss, mode, batch_tol, batch_max_iter);
  const SymMatrix core = gradient_core(theta, w, data, loss.lipschitz);
  MetaGradient g;
  g.grad_C = core;
  g.grad_H = lift_congruence(core, phi);
  return g;
}

Conditioner MetaState::average() const {
  if (t == 0) return current;
  const double inv = 1.0 / static_cast<double>(t);
  return Conditioner(SymMatrix(H_sum * inv), SymMatrix(C_sum * inv), current.d,
                     current.k);
}

SymMatrix UnconditionalState::average() const {
  if (t == 0) return current;
  return SymMatrix(C_sum / static_cast<double>(t));
}

Conditioner meta_sgd(const std::function<MetaExample(long)>& stream,
                     const FeatureMap& map, const Loss& loss,
                     const MetaSgdOptions& opts, const Conditioner& init) {
  if (!(opts.gamma >= 0.0)) {
    throw std::invalid_argument("meta_sgd: gamma must be non-negative");
  }
  if (opts.steps < 0) {
    throw std::invalid_argument("meta_sgd: steps must be non-negative");
  }

  MetaState state;
  state.current = init;
  state.H_sum = Matrix::Zero(init.H.dim(), init.H.dim());
  state.C_sum = Matrix::Zero(init.C.dim(), init.C.dim());
  state.gamma = opts.gamma;
  state.rng_seed = opts.rng_seed;
  const int neg_rank_bound = static_cast<int>(init.d);

  for (long t = 1; t <= opts.steps; ++t) {
    const MetaExample ex = stream(t - 1);
    state.H_sum += state.current.H.m();
    state.C_sum += state.current.C.m();
    state.t = t;
    if (opts.on_step) opts.on_step(state);

    const Vector phi = map.eval(*ex.side);
    const SymMatrix theta = conditioned_representation(state.current, phi);
    const Vector w = inner_vector(theta, *ex.train, loss, opts.inner_mode,
                                  opts.batch_tol, opts.batch_max_iter);
    const SymMatrix core = gradient_core(theta, w, *ex.train, loss.lipschitz);
    if (!core.m().allFinite()) {
      throw std::runtime_error("meta_sgd: non-finite gradient at step " +
                               std::to_string(t) + " (task " + ex.id + ")");
    }

    if (!opts.freeze_H) {
      const SymMatrix grad_h = lift_congruence(core, phi);
      state.current.H = psd_project_bounded(
          SymMatrix(state.current.H.m() - opts.gamma * grad_h.m()),
          neg_rank_bound);
    }
    state.current.C =
        psd_project(SymMatrix(state.current.C.m() - opts.gamma * core.m()));
  }

  if (opts.steps == 0) return init;
  return state.average();
}

SymMatrix unconditional_sgd(
    const std::function<MetaExample(long)>& stream, const Loss& loss,
    const MetaSgdOptions& opts, const SymMatrix& init,
    const std::function<void(const UnconditionalState&)>& on_step) {
  if (!(opts.gamma >= 0.0)) {
    throw std::invalid_argument("unconditional_sgd: gamma must be non-negative");
  }

  UnconditionalState state;
  state.current = init;
  state.C_sum = Matrix::Zero(init.dim(), init.dim());
  state.gamma = opts.gamma;

  for (long t = 1; t <= opts.steps; ++t) {
    const MetaExample ex = stream(t - 1);
    state.C_sum += state.current.m();
    state.t = t;
    if (on_step) on_step(state);

    const SymMatrix theta = state.current;
    const Vector w = inner_vector(theta, *ex.train, loss, opts.inner_mode,
                                  opts.batch_tol, opts.batch_max_iter);
    const SymMatrix core = gradient_core(theta, w, *ex.train, loss.lipschitz);
    if (!core.m().allFinite()) {
      throw std::runtime_error("unconditional_sgd: non-finite gradient at step " +
                               std::to_string(t) + " (task " + ex.id + ")");
    }
    state.current =
        psd_project(SymMatrix(state.current.m() - opts.gamma * core.m()));
  }

  if (opts.steps == 0) return init;
  return state.average();
}

double theoretical_step_size(double distance, double feature_bound,
                             double lipschitz, double input_bound, long n,
                             long steps) {
  if (!(distance > 0.0) || !(lipschitz > 0.0) || !(input_bound > 0.0) ||
      n < 1 || steps < 1 || feature_bound < 0.0) {
    throw std::invalid_argument("theoretical_step_size: arguments must be positive");
  }
  const double lr = lipschitz * input_bound;
  const double scale = (1.0 + feature_bound * feature_bound) * lr * lr;
  const double n_term = 0.5 + 2.0 / static_cast<double>(n);
  return distance / scale / n_term / std::sqrt(static_cast<double>(steps));
}

}  // namespace condrep
