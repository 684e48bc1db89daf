#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dvs/group.hpp"
#include "dvs/modmath.hpp"

namespace dvs {

/// Wire tag of each scheme's signature blob.
enum class SchemeTag : std::uint8_t {
  saeednia = 0x01,
  lee_chang = 0x02,
  pv = 0x03,
  udvs = 0x04,
};

constexpr std::string_view to_string(SchemeTag tag) {
  switch (tag) {
    case SchemeTag::saeednia: return "saeednia";
    case SchemeTag::lee_chang: return "leechang";
    case SchemeTag::pv: return "pv";
    case SchemeTag::udvs: return "udvs";
  }
  return "unknown";
}

struct SaeedniaSignature {
  Int r, s, t;
  std::vector<Int> fields() const { return {r, s, t}; }
  friend bool operator==(const SaeedniaSignature& a, const SaeedniaSignature& b) {
    return a.fields() == b.fields();
  }
};

/// Lee-Chang strong DVS with message recovery.
struct RecoverySignature {
  Int t, c, r, s;
  std::vector<Int> fields() const { return {t, c, r, s}; }
  friend bool operator==(const RecoverySignature& a, const RecoverySignature& b) {
    return a.fields() == b.fields();
  }
};

/// Publicly verifiable signature Omega.
struct PVSignature {
  Int t, c, r, s;
  std::vector<Int> fields() const { return {t, c, r, s}; }
  friend bool operator==(const PVSignature& a, const PVSignature& b) {
    return a.fields() == b.fields();
  }
};

/// Designated signature delta; w = c * y_B^d and e = g^-d blind the PV part.
struct DVSignature {
  Int t, w, r, s, e;
  std::vector<Int> fields() const { return {t, w, r, s, e}; }
  friend bool operator==(const DVSignature& a, const DVSignature& b) {
    return a.fields() == b.fields();
  }
};

struct SaeedniaNonces {
  Int k;
  Int t;
};

struct RecoveryNonces {
  Int k1;
  Int k2;
};

struct SaeedniaSimulation {
  Int s_prime;
  Int r_prime;
};

struct RecoverySimulation {
  Int w1;
  Int w2;
};

struct SimulatorRandomness {
  Int w1;
  Int w2;
  Int d_prime;
};

namespace detail {

inline bool in_zq(const GroupParams& gp, const Int& v) { return v >= 0 && v < gp.q; }
inline bool in_zq_star(const GroupParams& gp, const Int& v) { return v >= 1 && v < gp.q; }
inline bool in_zp_star(const GroupParams& gp, const Int& v) { return v >= 1 && v < gp.p; }

}  // namespace detail

inline bool in_range(const GroupParams& gp, const SaeedniaSignature& sig) {
  return detail::in_zq(gp, sig.r) && detail::in_zq(gp, sig.s) && detail::in_zq_star(gp, sig.t);
}

inline bool in_range(const GroupParams& gp, const RecoverySignature& sig) {
  return sig.t != 1 && in_subgroup(gp, sig.t) && detail::in_zp_star(gp, sig.c) &&
         detail::in_zq(gp, sig.r) && detail::in_zq(gp, sig.s);
}

inline bool in_range(const GroupParams& gp, const PVSignature& sig) {
  return in_range(gp, RecoverySignature{sig.t, sig.c, sig.r, sig.s});
}

inline bool in_range(const GroupParams& gp, const DVSignature& sig) {
  return sig.t != 1 && in_subgroup(gp, sig.t) && detail::in_zp_star(gp, sig.w) &&
         detail::in_zp_star(gp, sig.e) && detail::in_zq(gp, sig.r) && detail::in_zq(gp, sig.s);
}

}  // namespace dvs
