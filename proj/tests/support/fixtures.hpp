#pragma once

#include "dvs/dvs.hpp"

namespace fixtures {

/// 2048/256-bit group from a fixed seed, generated once per test binary.
inline const dvs::GroupParams& full_size_group() {
  static const dvs::GroupParams gp = [] {
    dvs::SeededRandom rng("fixtures:full-size-group");
    return dvs::generate_params(256, 2048, rng);
  }();
  return gp;
}

inline dvs::KeyPair toy_signer() { return dvs::keypair_from_secret(dvs::toy23(), 3, "signer"); }
inline dvs::KeyPair toy_verifier() { return dvs::keypair_from_secret(dvs::toy23(), 5, "verifier"); }

}  // namespace fixtures
