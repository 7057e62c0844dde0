#include "condrep/dataset.hpp"

#include <stdexcept>
#include <string>

namespace condrep {

LabeledDataset::LabeledDataset(Matrix x, Vector y)
    : inputs(std::move(x)), labels(std::move(y)) {
  if (inputs.rows() < 1) {
    throw std::invalid_argument("LabeledDataset: needs at least one point");
  }
  if (inputs.rows() != labels.size()) {
    throw std::invalid_argument("LabeledDataset: rows of X (" +
                                std::to_string(inputs.rows()) +
                                ") != labels (" + std::to_string(labels.size()) +
                                ")");
  }
  if (!inputs.allFinite() || !labels.allFinite()) {
    throw std::invalid_argument("LabeledDataset: non-finite entries");
  }
}

void LabeledDataset::require_input_bound(double bound) const {
  const double realized = max_input_norm();
  if (realized > bound * (1.0 + 1e-12)) {
    throw std::invalid_argument("LabeledDataset: input norm " +
                                std::to_string(realized) +
                                " exceeds declared bound " + std::to_string(bound));
  }
}

}  // namespace condrep
