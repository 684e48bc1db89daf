#pragma once

#include "dvs/context.hpp"
#include "dvs/error.hpp"
#include "dvs/keys.hpp"
#include "dvs/pv.hpp"
#include "dvs/signatures.hpp"

// Universal designation. A holder of a valid Omega turns it into
// delta = (t, w, r, s, e) for one verifier, without any secret of its own.
// Only that verifier's x_B removes the y_B^d blinder from w.
namespace dvs::udvs {

/// e = g^-d, w = c * y_B^d. Omega is checked with the signer's public key
/// first; d = 0 is allowed.
inline DVSignature designate(const Context& ctx, const PublicKey& signer, const PublicKey& verifier,
                             const PVSignature& omega, const Int& d) {
  const auto& gp = ctx.group;
  if (!detail::in_zq(gp, d)) throw Error(ErrorCode::invalid_nonce, "need d in Z_q");
  if (!pv::open(ctx, signer, omega).hash_ok) {
    throw Error(ErrorCode::invalid_pv_signature, "Omega fails public verification");
  }
  const Int e = g_pow(gp, -d);
  const Int w = omega.c * subgroup_pow(gp, verifier.y, d) % gp.p;
  return {omega.t, w, omega.r, omega.s, e};
}

inline DVSignature designate(const Context& ctx, const PublicKey& signer, const PublicKey& verifier,
                             const PVSignature& omega, RandomSource& rng) {
  return designate(ctx, signer, verifier, omega, sample_uniform(ctx.group.q, false, rng));
}

struct Opening {
  Int m;
  bool hash_ok = false;
};

/// m = w * t^s * y_A^-r * e^x_B and r =? H(m, t^-s * y_A^r).
inline Opening open(const Context& ctx, const PublicKey& signer, const SecretKey& verifier,
                    const DVSignature& sig) {
  const auto& gp = ctx.group;
  if (!in_range(gp, sig)) return {};
  Int m = sig.w * subgroup_pow(gp, sig.t, sig.s) % gp.p;
  m = m * subgroup_pow(gp, signer.y, -sig.r) % gp.p;
  m = m * mod_exp(sig.e, reduce(verifier.x, gp.q), gp.p) % gp.p;
  const Int commitment = subgroup_pow(gp, sig.t, -sig.s) * subgroup_pow(gp, signer.y, sig.r) % gp.p;
  return {m, ctx.H(m, commitment) == sig.r};
}

inline Message verify_recover(const Context& ctx, const PublicKey& signer, const SecretKey& verifier,
                              const DVSignature& sig) {
  const Opening o = open(ctx, signer, verifier, sig);
  if (!o.hash_ok) throw Error(ErrorCode::invalid_signature, "designated hash check failed");
  return ctx.recovered(o.m);
}

/// Verifier-side transcript:
///   t' = y_A^(1/w1), u = y_A^(w2/w1), c' = m*u, r' = H(m, u), s' = w1*r' - w2,
///   e' = g^-d', w' = c' * y_B^d'.
/// The blinding is applied to c' the same way the designator applies it to c,
/// which is what makes the output open under the verification equations.
inline DVSignature simulate(const Context& ctx, const PublicKey& signer, const SecretKey& verifier,
                            const Message& msg, const SimulatorRandomness& rands) {
  const auto& gp = ctx.group;
  if (!detail::in_zq_star(gp, rands.w1) || !detail::in_zq(gp, rands.w2) || !detail::in_zq(gp, rands.d_prime)) {
    throw Error(ErrorCode::invalid_randomness, "need w1 in Z_q*, w2 and d' in Z_q");
  }
  const Int y_b = derive_public(gp, verifier.x);
  const Int w1_inv = mod_inv(rands.w1, gp.q);
  const Int t = subgroup_pow(gp, signer.y, w1_inv);
  const Int u = subgroup_pow(gp, signer.y, w1_inv * rands.w2);
  const Int c = msg.m * u % gp.p;
  const Int r = ctx.H(msg.m, u);
  const Int s = reduce(rands.w1 * r - rands.w2, gp.q);
  const Int e = g_pow(gp, -rands.d_prime);
  const Int w = c * subgroup_pow(gp, y_b, rands.d_prime) % gp.p;
  return {t, w, r, s, e};
}

inline DVSignature simulate(const Context& ctx, const PublicKey& signer, const SecretKey& verifier,
                            const Message& msg, RandomSource& rng) {
  const auto& q = ctx.group.q;
  SimulatorRandomness rands{sample_uniform(q, true, rng), sample_uniform(q, false, rng),
                            sample_uniform(q, false, rng)};
  return simulate(ctx, signer, verifier, msg, rands);
}

}  // namespace dvs::udvs
