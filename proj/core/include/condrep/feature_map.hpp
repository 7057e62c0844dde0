#pragma once

#include <functional>
#include <string>
#include <vector>

#include "condrep/dataset.hpp"

namespace condrep {

/// Named map from a dataset (the task's side information) to a k-vector.
/// `bound` is the norm bound K used in the step-size formula; it is measured
/// per environment rather than assumed, so it starts out unset.
struct FeatureMap {
  std::string name;
  Eigen::Index k = 0;
  double bound = 0.0;  // 0 means not yet measured
  std::function<Vector(const LabeledDataset&)> eval;
};

/// Mean of vec(x_i (y_i, 1)ᵀ) over the dataset, with column-major vec:
/// the first d entries average y_i·x_i, the last d average x_i. k = 2d.
FeatureMap mean_embedding_map(Eigen::Index d);

/// Solution of (X̂ᵀX̂ + I)w = X̂ᵀy where X̂ appends a ones column to X.
/// k = d + 1.
FeatureMap ridge_solution_map(Eigen::Index d);

/// Angle-encoded rating map for recommendation data: with
/// a = Σ x_i·(π/4)(M - y_i)/(M - m) and c = Σ x_i, returns
/// (cos(a)⊙c, sin(a)⊙c, 1) with elementwise cos/sin. k = 2d + 1.
FeatureMap trig_map(Eigen::Index d, double rating_max, double rating_min);

/// Constant map to (1); with k = 1 the conditioner collapses to a single
/// fixed matrix, which is how the unconditional method is expressed inside
/// the conditional machinery. k = 1.
FeatureMap constant_map();

/// Lookup by the config name: one of mean_embedding, ridge, trig, constant.
FeatureMap feature_map_by_name(const std::string& name, Eigen::Index d,
                               double rating_max, double rating_min);

/// Realized max ‖Φ(side info)‖ over a collection of side-information
/// datasets.
double measure_feature_bound(const FeatureMap& map,
                             const std::vector<const LabeledDataset*>& sides);

}  // namespace condrep
