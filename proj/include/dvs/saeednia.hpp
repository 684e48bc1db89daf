#pragma once

#include "dvs/context.hpp"
#include "dvs/error.hpp"
#include "dvs/keys.hpp"
#include "dvs/signatures.hpp"

// Saeednia-style strong designated verifier signature (r, s, t). Checking a
// signature needs the verifier's secret x_B, and the verifier can produce
// identically distributed transcripts on its own.
namespace dvs::saeednia {

/// The signing equations without the r != 0 policy:
///   c = y_B^k, r = H(m, c), s = k/t - r*x_A (mod q).
inline SaeedniaSignature compute_signature(const Context& ctx, const SecretKey& signer,
                                           const PublicKey& verifier, const Message& msg,
                                           const SaeedniaNonces& nonces) {
  const auto& gp = ctx.group;
  if (!detail::in_zq(gp, nonces.k) || !detail::in_zq_star(gp, nonces.t)) {
    throw Error(ErrorCode::invalid_nonce, "need k in Z_q and t in Z_q*");
  }
  const Int c = subgroup_pow(gp, verifier.y, nonces.k);
  const Int r = ctx.H(msg.m, c);
  const Int s = reduce(nonces.k * mod_inv(nonces.t, gp.q) - r * signer.x, gp.q);
  return {r, s, nonces.t};
}

/// Explicit-nonce signing. r = 0 is refused since the simulator can never
/// produce it.
inline SaeedniaSignature sign(const Context& ctx, const SecretKey& signer, const PublicKey& verifier,
                              const Message& msg, const SaeedniaNonces& nonces) {
  auto sig = compute_signature(ctx, signer, verifier, msg, nonces);
  if (sig.r == 0) throw Error(ErrorCode::degenerate_hash, "nonces give r = 0");
  return sig;
}

/// Random-nonce signing; resamples while r = 0.
inline SaeedniaSignature sign(const Context& ctx, const SecretKey& signer, const PublicKey& verifier,
                              const Message& msg, RandomSource& rng) {
  for (;;) {
    SaeedniaNonces nonces{sample_uniform(ctx.group.q, false, rng),
                          sample_uniform(ctx.group.q, true, rng)};
    auto sig = compute_signature(ctx, signer, verifier, msg, nonces);
    if (sig.r != 0) return sig;
  }
}

/// H(m, (g^s * y_A^r)^(t*x_B)) == r
inline bool verify(const Context& ctx, const PublicKey& signer, const SecretKey& verifier,
                   const Message& msg, const SaeedniaSignature& sig) {
  const auto& gp = ctx.group;
  if (!in_range(gp, sig)) return false;
  const Int base = g_pow(gp, sig.s) * subgroup_pow(gp, signer.y, sig.r) % gp.p;
  const Int c = subgroup_pow(gp, base, sig.t * verifier.x);
  return ctx.H(msg.m, c) == sig.r;
}

/// Transcript simulation by the designated verifier:
///   c = g^s' y_A^r', r = H(m, c), l = r'/r, s = s'/l, t = l/x_B (mod q).
inline SaeedniaSignature simulate(const Context& ctx, const PublicKey& signer, const SecretKey& verifier,
                                  const Message& msg, const SaeedniaSimulation& rands) {
  const auto& gp = ctx.group;
  if (!detail::in_zq(gp, rands.s_prime) || !detail::in_zq_star(gp, rands.r_prime)) {
    throw Error(ErrorCode::invalid_randomness, "need s' in Z_q and r' in Z_q*");
  }
  const Int c = g_pow(gp, rands.s_prime) * subgroup_pow(gp, signer.y, rands.r_prime) % gp.p;
  const Int r = ctx.H(msg.m, c);
  if (r == 0) throw Error(ErrorCode::degenerate_hash, "r = 0 has no inverse");
  const Int ell = reduce(rands.r_prime * mod_inv(r, gp.q), gp.q);
  if (ell == 0) throw Error(ErrorCode::invalid_randomness, "l = 0");
  const Int s = reduce(rands.s_prime * mod_inv(ell, gp.q), gp.q);
  const Int t = reduce(ell * mod_inv(verifier.x, gp.q), gp.q);
  return {r, s, t};
}

inline SaeedniaSignature simulate(const Context& ctx, const PublicKey& signer, const SecretKey& verifier,
                                  const Message& msg, RandomSource& rng) {
  for (;;) {
    SaeedniaSimulation rands{sample_uniform(ctx.group.q, false, rng),
                             sample_uniform(ctx.group.q, true, rng)};
    try {
      return simulate(ctx, signer, verifier, msg, rands);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::degenerate_hash) throw;
    }
  }
}

}  // namespace dvs::saeednia
