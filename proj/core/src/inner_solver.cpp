#include "condrep/inner_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace condrep {

namespace {

void check_dims(const SymMatrix& theta, const LabeledDataset& data,
                const char* who) {
  if (theta.dim() != data.dim()) {
    throw std::invalid_argument(std::string(who) + ": theta is " +
                                std::to_string(theta.dim()) + "x" +
                                std::to_string(theta.dim()) + " but inputs have " +
                                std::to_string(data.dim()) + " columns");
  }
}

}  // namespace

InnerSolution solve_online(const SymMatrix& theta, const LabeledDataset& data,
                           const Loss& loss) {
  check_dims(theta, data, "solve_online");
  const Eigen::Index n = data.size();
  const EigDecomp eig = sym_eig(theta);
  const double lmax = std::max(eig.eigenvalues.maxCoeff(), 0.0);
  const double cutoff = kDefaultRankTol * lmax;
  const auto fwd = [](double l) { return std::max(l, 0.0); };
  const auto inv = [cutoff](double l) { return l > cutoff ? 1.0 / l : 0.0; };

  Vector w = Vector::Zero(data.dim());
  Vector sum = Vector::Zero(data.dim());
  double risk_acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    sum += w;
    const double pred = data.inputs.row(i).dot(w);
    risk_acc += loss.value(pred, data.labels(i));
    const double s = loss.subgradient(pred, data.labels(i));
    const Vector p = s * data.inputs.row(i).transpose() + eig.apply(inv, w);
    w -= eig.apply(fwd, p) / static_cast<double>(i + 1);
  }

  InnerSolution out;
  out.averaged = sum / static_cast<double>(n);
  out.last = w;
  out.trajectory_empirical_risk = risk_acc / static_cast<double>(n);
  return out;
}

InnerSolution solve_batch(const SymMatrix& theta, const LabeledDataset& data,
                          const Loss& loss, double tol, long max_iter) {
  check_dims(theta, data, "solve_batch");
  const Eigen::Index n = data.size();
  const Eigen::Index d = data.dim();
  const double nn = static_cast<double>(n);

  const SymMatrix root = sqrt_psd(theta);
  // Inputs mapped through the square root; the objective in v is
  // (1/n)Σℓ(⟨x̃_i, v⟩, y_i) + ‖v‖²/2, which is 1-strongly convex.
  const Matrix xin = data.inputs * root.m();

  // Step scale: 1/(1 + smoothness bound), so the smooth losses contract from
  // the first iteration and the non-smooth ones keep a bounded step.
  const double smooth = xin.rowwise().squaredNorm().sum() / nn;
  const double c = 1.0 / (1.0 + smooth);

  if (max_iter < 1) {
    throw std::invalid_argument("solve_batch: max_iter must be at least 1");
  }

  Vector v = Vector::Zero(d);
  Vector window_v = Vector::Zero(d);   // running suffix sums, doubling restart
  Vector window_s = Vector::Zero(n);
  long window_start = 1;
  long window_count = 0;

  Vector best_v = v;
  double best_gap = std::numeric_limits<double>::infinity();

  const auto objective = [&](const Vector& vv) {
    double acc = 0.0;
    const Vector preds = xin * vv;
    for (Eigen::Index i = 0; i < n; ++i) {
      acc += loss.value(preds(i), data.labels(i));
    }
    return acc / nn + 0.5 * vv.squaredNorm();
  };

  // Certified gap at the candidate point: strong convexity gives
  // gap ≤ ‖g‖²/2 for any subgradient g; when the loss exposes its conjugate,
  // the duality gap against the averaged dual variables is usually tighter.
  const auto certify = [&](const Vector& vv, const Vector& dual) {
    Vector subs(n);
    const Vector preds = xin * vv;
    for (Eigen::Index i = 0; i < n; ++i) {
      subs(i) = loss.subgradient(preds(i), data.labels(i));
    }
    const Vector g = xin.transpose() * subs / nn + vv;
    double gap = 0.5 * g.squaredNorm();
    if (loss.has_conjugate()) {
      double dual_val = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        dual_val -= loss.conjugate(dual(i), data.labels(i));
      }
      dual_val /= nn;
      dual_val -= (xin.transpose() * dual).squaredNorm() / (2.0 * nn * nn);
      gap = std::min(gap, objective(vv) - dual_val);
    }
    return std::max(gap, 0.0);
  };

  long t = 1;
  bool converged = false;
  for (; t <= max_iter; ++t) {
    const Vector preds = xin * v;
    Vector subs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      subs(i) = loss.subgradient(preds(i), data.labels(i));
    }
    const Vector g = xin.transpose() * subs / nn + v;
    v -= (c / std::sqrt(static_cast<double>(t))) * g;

    window_v += v;
    window_s += subs;
    ++window_count;
    if (t == 2 * window_start) {
      window_start = t;
      window_v = v;
      window_s = subs;
      window_count = 1;
    }

    if (t == 1 || t % 64 == 0 || t == max_iter) {
      const Vector cand = window_v / static_cast<double>(window_count);
      const Vector dual = window_s / static_cast<double>(window_count);
      const double gap = certify(cand, dual);
      if (gap < best_gap) {
        best_gap = gap;
        best_v = cand;
      }
      if (best_gap <= tol) {
        converged = true;
        break;
      }
    }
  }

  InnerSolution out;
  out.averaged = root.m() * best_v;
  out.last = out.averaged;
  out.trajectory_empirical_risk = empirical_risk(out.averaged, data, loss);
  out.gap_bound = best_gap;
  out.iterations = std::min(t, max_iter);
  out.converged = converged;
  return out;
}

double empirical_risk(const Vector& w, const LabeledDataset& data,
                      const Loss& loss) {
  if (w.size() != data.dim()) {
    throw std::invalid_argument("empirical_risk: dimension mismatch");
  }
  const Vector preds = data.inputs * w;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    acc += loss.value(preds(i), data.labels(i));
  }
  return acc / static_cast<double>(data.size());
}

}  // namespace condrep
