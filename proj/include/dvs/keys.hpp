#pragma once

#include <string>

#include "dvs/error.hpp"
#include "dvs/group.hpp"
#include "dvs/modmath.hpp"

namespace dvs {

struct PublicKey {
  Int y;
  friend bool operator==(const PublicKey& a, const PublicKey& b) { return a.y == b.y; }
};

struct SecretKey {
  Int x;
  friend bool operator==(const SecretKey& a, const SecretKey& b) { return a.x == b.x; }
};

struct KeyPair {
  Int x;
  Int y;
  std::string role;

  PublicKey public_key() const { return {y}; }
  SecretKey secret_key() const { return {x}; }
};

inline Int derive_public(const GroupParams& gp, const Int& x) {
  if (x < 1 || x >= gp.q) throw Error(ErrorCode::out_of_range, "secret exponent must lie in [1, q-1]");
  return mod_exp(gp.g, x, gp.p);
}

inline PublicKey derive_public(const GroupParams& gp, const SecretKey& sk) {
  return {derive_public(gp, sk.x)};
}

inline KeyPair keypair_from_secret(const GroupParams& gp, const Int& x, std::string role = {}) {
  return KeyPair{x, derive_public(gp, x), std::move(role)};
}

inline KeyPair keygen(const GroupParams& gp, RandomSource& rng, std::string role = {}) {
  return keypair_from_secret(gp, sample_uniform(gp.q, true, rng), std::move(role));
}

/// A public element is usable when it lies in the subgroup and is not 1.
inline bool valid_public(const GroupParams& gp, const PublicKey& pk) {
  return pk.y != 1 && in_subgroup(gp, pk.y);
}

}  // namespace dvs
