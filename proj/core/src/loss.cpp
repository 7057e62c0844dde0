#include "condrep/loss.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace condrep {

Loss absolute_loss() {
  Loss l;
  l.name = "absolute";
  l.lipschitz = 1.0;
  l.value = [](double p, double y) { return std::abs(p - y); };
  l.subgradient = [](double p, double y) {
    const double r = p - y;
    return r > 0.0 ? 1.0 : (r < 0.0 ? -1.0 : 0.0);
  };
  // ℓ*(a) = a·y on [-1, 1], +inf outside.
  l.conjugate = [](double a, double y) {
    if (std::abs(a) > 1.0 + 1e-12) {
      return std::numeric_limits<double>::infinity();
    }
    return a * y;
  };
  return l;
}

Loss squared_loss(double lipschitz) {
  Loss l;
  l.name = "squared";
  l.lipschitz = lipschitz;
  l.value = [](double p, double y) { return 0.5 * (p - y) * (p - y); };
  l.subgradient = [](double p, double y) { return p - y; };
  // ℓ*(a) = a·y + a²/2.
  l.conjugate = [](double a, double y) { return a * y + 0.5 * a * a; };
  return l;
}

Loss loss_by_name(const std::string& name) {
  if (name == "absolute") return absolute_loss();
  if (name == "squared") return squared_loss();
  throw std::invalid_argument("unknown loss: " + name);
}

}  // namespace condrep
