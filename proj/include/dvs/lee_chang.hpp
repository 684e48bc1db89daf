#pragma once

#include "dvs/context.hpp"
#include "dvs/error.hpp"
#include "dvs/keys.hpp"
#include "dvs/signatures.hpp"

// Lee-Chang strong DVS with message recovery: (t, c, r, s) where c carries m
// blinded by y_B^k2, so only x_B unblinds it.
namespace dvs::lee_chang {

inline RecoverySignature sign(const Context& ctx, const SecretKey& signer, const PublicKey& verifier,
                              const Message& msg, const RecoveryNonces& nonces) {
  const auto& gp = ctx.group;
  if (!detail::in_zq_star(gp, nonces.k1) || !detail::in_zq(gp, nonces.k2)) {
    throw Error(ErrorCode::invalid_nonce, "need k1 in Z_q* and k2 in Z_q");
  }
  const Int t = g_pow(gp, nonces.k1);
  const Int c = msg.m * subgroup_pow(gp, verifier.y, nonces.k2) % gp.p;
  const Int r = ctx.H(msg.m, g_pow(gp, nonces.k2));
  const Int s = reduce(mod_inv(nonces.k1, gp.q) * (signer.x * r - nonces.k2), gp.q);
  return {t, c, r, s};
}

inline RecoverySignature sign(const Context& ctx, const SecretKey& signer, const PublicKey& verifier,
                              const Message& msg, RandomSource& rng) {
  RecoveryNonces nonces{sample_uniform(ctx.group.q, true, rng), sample_uniform(ctx.group.q, false, rng)};
  return sign(ctx, signer, verifier, msg, nonces);
}

/// Result of running the recovery equations, before any accept/reject policy.
struct Opening {
  Int m;
  bool hash_ok = false;
};

/// m = c * (t^s * y_A^-r)^x_B, then r =? H(m, y_A^r * t^-s). Both check
/// expressions are evaluated as written rather than derived from each other.
inline Opening open(const Context& ctx, const PublicKey& signer, const SecretKey& verifier,
                    const RecoverySignature& sig) {
  const auto& gp = ctx.group;
  if (!in_range(gp, sig)) return {};
  const Int unblind = subgroup_pow(gp, sig.t, sig.s) * subgroup_pow(gp, signer.y, -sig.r) % gp.p;
  const Int m = sig.c * subgroup_pow(gp, unblind, verifier.x) % gp.p;
  const Int commitment = subgroup_pow(gp, signer.y, sig.r) * subgroup_pow(gp, sig.t, -sig.s) % gp.p;
  return {m, ctx.H(m, commitment) == sig.r};
}

inline Message recover_verify(const Context& ctx, const PublicKey& signer, const SecretKey& verifier,
                              const RecoverySignature& sig) {
  const Opening o = open(ctx, signer, verifier, sig);
  if (!o.hash_ok) throw Error(ErrorCode::invalid_signature, "recovery hash check failed");
  return ctx.recovered(o.m);
}

/// Verifier-side transcript: t = y_A^(1/w1), c = m * y_A^(x_B*w2/w1),
/// r = H(m, y_A^(w2/w1)), s = w1*r - w2.
inline RecoverySignature simulate(const Context& ctx, const PublicKey& signer, const SecretKey& verifier,
                                  const Message& msg, const RecoverySimulation& rands) {
  const auto& gp = ctx.group;
  if (!detail::in_zq_star(gp, rands.w1) || !detail::in_zq(gp, rands.w2)) {
    throw Error(ErrorCode::invalid_randomness, "need w1 in Z_q* and w2 in Z_q");
  }
  const Int w1_inv = mod_inv(rands.w1, gp.q);
  const Int t = subgroup_pow(gp, signer.y, w1_inv);
  const Int c = msg.m * subgroup_pow(gp, signer.y, verifier.x * w1_inv * rands.w2) % gp.p;
  const Int r = ctx.H(msg.m, subgroup_pow(gp, signer.y, w1_inv * rands.w2));
  const Int s = reduce(rands.w1 * r - rands.w2, gp.q);
  return {t, c, r, s};
}

inline RecoverySignature simulate(const Context& ctx, const PublicKey& signer, const SecretKey& verifier,
                                  const Message& msg, RandomSource& rng) {
  RecoverySimulation rands{sample_uniform(ctx.group.q, true, rng), sample_uniform(ctx.group.q, false, rng)};
  return simulate(ctx, signer, verifier, msg, rands);
}

}  // namespace dvs::lee_chang
