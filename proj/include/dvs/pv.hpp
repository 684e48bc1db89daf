#pragma once

#include "dvs/context.hpp"
#include "dvs/error.hpp"
#include "dvs/keys.hpp"
#include "dvs/signatures.hpp"

// Probabilistic publicly verifiable signature Omega = (t, c, r, s). Anyone
// holding y_A recovers m; no secret enters verification.
namespace dvs::pv {

inline PVSignature sign(const Context& ctx, const SecretKey& signer, const Message& msg,
                        const RecoveryNonces& nonces) {
  const auto& gp = ctx.group;
  if (!detail::in_zq_star(gp, nonces.k1) || !detail::in_zq(gp, nonces.k2)) {
    throw Error(ErrorCode::invalid_nonce, "need k1 in Z_q* and k2 in Z_q");
  }
  const Int g_k2 = g_pow(gp, nonces.k2);
  const Int t = g_pow(gp, nonces.k1);
  const Int c = msg.m * g_k2 % gp.p;
  const Int r = ctx.H(msg.m, g_k2);
  const Int s = reduce(mod_inv(nonces.k1, gp.q) * (signer.x * r - nonces.k2), gp.q);
  return {t, c, r, s};
}

inline PVSignature sign(const Context& ctx, const SecretKey& signer, const Message& msg, RandomSource& rng) {
  RecoveryNonces nonces{sample_uniform(ctx.group.q, true, rng), sample_uniform(ctx.group.q, false, rng)};
  return sign(ctx, signer, msg, nonces);
}

struct Opening {
  Int m;
  bool hash_ok = false;
};

/// m = c * t^s * y_A^-r and r =? H(m, t^-s * y_A^r).
inline Opening open(const Context& ctx, const PublicKey& signer, const PVSignature& sig) {
  const auto& gp = ctx.group;
  if (!in_range(gp, sig)) return {};
  const Int m = sig.c * subgroup_pow(gp, sig.t, sig.s) % gp.p * subgroup_pow(gp, signer.y, -sig.r) % gp.p;
  const Int commitment = subgroup_pow(gp, sig.t, -sig.s) * subgroup_pow(gp, signer.y, sig.r) % gp.p;
  return {m, ctx.H(m, commitment) == sig.r};
}

/// Public verification; returns the recovered message or throws InvalidSignature.
inline Message verify(const Context& ctx, const PublicKey& signer, const PVSignature& sig) {
  const Opening o = open(ctx, signer, sig);
  if (!o.hash_ok) throw Error(ErrorCode::invalid_signature, "PV hash check failed");
  return ctx.recovered(o.m);
}

/// Verification against a caller-supplied message.
inline bool matches(const Context& ctx, const PublicKey& signer, const PVSignature& sig, const Message& claimed) {
  const Opening o = open(ctx, signer, sig);
  return o.hash_ok && o.m == claimed.m;
}

}  // namespace dvs::pv
