#pragma once

#include "condrep/psd_linalg.hpp"

namespace condrep {

/// One task's labelled sample: input rows X (n×d) and labels y (n).
struct LabeledDataset {
  Matrix inputs;  // rows x_i
  Vector labels;

  LabeledDataset() = default;
  LabeledDataset(Matrix x, Vector y);

  Eigen::Index size() const { return inputs.rows(); }
  Eigen::Index dim() const { return inputs.cols(); }

  double max_input_norm() const { return inputs.rowwise().norm().maxCoeff(); }

  /// Ingestion check for a declared input-norm bound.
  void require_input_bound(double bound) const;
};

}  // namespace condrep
