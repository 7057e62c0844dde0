#include "condrep/checkpoint.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>
#include <vector>

namespace condrep {

namespace {

constexpr const char* kSchema = "condrep-checkpoint-v1";

std::vector<double> to_row_major(const Matrix& m) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out.push_back(m(i, j));
    }
  }
  return out;
}

Matrix from_row_major(const std::vector<double>& v, Eigen::Index n) {
  if (static_cast<Eigen::Index>(v.size()) != n * n) {
    throw std::invalid_argument("checkpoint: matrix payload has wrong size");
  }
  Matrix m(n, n);
  std::size_t idx = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = v[idx++];
    }
  }
  return m;
}

}  // namespace

std::string checkpoint_to_json(const Checkpoint& ckpt) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["d"] = ckpt.conditioner.d;
  j["k"] = ckpt.conditioner.k;
  j["feature_map"] = ckpt.feature_map;
  j["gamma"] = ckpt.gamma;
  j["steps"] = ckpt.steps;
  j["seed"] = ckpt.seed;
  j["H"] = to_row_major(ckpt.conditioner.H.m());
  j["C"] = to_row_major(ckpt.conditioner.C.m());
  return j.dump(2);
}

Checkpoint checkpoint_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("schema", "") != kSchema) {
    throw std::invalid_argument("checkpoint: unknown schema");
  }
  const Eigen::Index d = j.at("d").get<Eigen::Index>();
  const Eigen::Index k = j.at("k").get<Eigen::Index>();
  Checkpoint out;
  out.feature_map = j.at("feature_map").get<std::string>();
  out.gamma = j.at("gamma").get<double>();
  out.steps = j.at("steps").get<long>();
  out.seed = j.at("seed").get<std::uint64_t>();
  out.conditioner = Conditioner(
      SymMatrix(from_row_major(j.at("H").get<std::vector<double>>(), d * k)),
      SymMatrix(from_row_major(j.at("C").get<std::vector<double>>(), d)), d, k);
  return out;
}

void save_checkpoint(const Checkpoint& ckpt, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << checkpoint_to_json(ckpt) << '\n';
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return checkpoint_from_json(text);
}

}  // namespace condrep
