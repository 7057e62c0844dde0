#include "condrep/feature_map.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace condrep {

FeatureMap mean_embedding_map(Eigen::Index d) {
  FeatureMap map;
  map.name = "mean_embedding";
  map.k = 2 * d;
  map.eval = [d](const LabeledDataset& z) {
    if (z.dim() != d) {
      throw std::invalid_argument("mean_embedding: dataset dimension mismatch");
    }
    const double n = static_cast<double>(z.size());
    Vector out(2 * d);
    out.head(d) = z.inputs.transpose() * z.labels / n;
    out.tail(d) = z.inputs.colwise().mean();
    return out;
  };
  return map;
}

FeatureMap ridge_solution_map(Eigen::Index d) {
  FeatureMap map;
  map.name = "ridge";
  map.k = d + 1;
  map.eval = [d](const LabeledDataset& z) {
    if (z.dim() != d) {
      throw std::invalid_argument("ridge map: dataset dimension mismatch");
    }
    Matrix xh(z.size(), d + 1);
    xh.leftCols(d) = z.inputs;
    xh.col(d).setOnes();
    const Matrix a =
        xh.transpose() * xh + Matrix::Identity(d + 1, d + 1);
    return Vector(a.ldlt().solve(xh.transpose() * z.labels));
  };
  return map;
}

FeatureMap trig_map(Eigen::Index d, double rating_max, double rating_min) {
  if (!(rating_max > rating_min)) {
    throw std::invalid_argument("trig map: rating_max must exceed rating_min");
  }
  FeatureMap map;
  map.name = "trig";
  map.k = 2 * d + 1;
  map.eval = [d, rating_max, rating_min](const LabeledDataset& z) {
    if (z.dim() != d) {
      throw std::invalid_argument("trig map: dataset dimension mismatch");
    }
    const double span = rating_max - rating_min;
    Vector angle = Vector::Zero(d);
    Vector count = Vector::Zero(d);
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      const double scale =
          (std::numbers::pi / 4.0) * (rating_max - z.labels(i)) / span;
      angle += scale * z.inputs.row(i).transpose();
      count += z.inputs.row(i).transpose();
    }
    Vector out(2 * d + 1);
    out.head(d) = angle.array().cos() * count.array();
    out.segment(d, d) = angle.array().sin() * count.array();
    out(2 * d) = 1.0;
    return out;
  };
  return map;
}

FeatureMap constant_map() {
  FeatureMap map;
  map.name = "constant";
  map.k = 1;
  map.eval = [](const LabeledDataset&) { return Vector::Ones(1); };
  return map;
}

FeatureMap feature_map_by_name(const std::string& name, Eigen::Index d,
                               double rating_max, double rating_min) {
  if (name == "mean_embedding") return mean_embedding_map(d);
  if (name == "ridge") return ridge_solution_map(d);
  if (name == "trig") return trig_map(d, rating_max, rating_min);
  if (name == "constant") return constant_map();
  throw std::invalid_argument("unknown feature map: " + name);
}

double measure_feature_bound(const FeatureMap& map,
                             const std::vector<const LabeledDataset*>& sides) {
  double k = 0.0;
  for (const LabeledDataset* z : sides) {
    k = std::max(k, map.eval(*z).norm());
  }
  return k;
}

}  // namespace condrep
