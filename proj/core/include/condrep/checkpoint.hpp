#pragma once

#include <cstdint>
#include <string>

#include "condrep/conditioner.hpp"

namespace condrep {

/// A trained conditioner plus the provenance needed to reuse it.
struct Checkpoint {
  Conditioner conditioner;
  std::string feature_map;
  double gamma = 0.0;
  long steps = 0;
  std::uint64_t seed = 0;
};

/// JSON serialization; doubles survive a round trip bit-exactly.
std::string checkpoint_to_json(const Checkpoint& ckpt);
Checkpoint checkpoint_from_json(const std::string& text);

void save_checkpoint(const Checkpoint& ckpt, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace condrep
