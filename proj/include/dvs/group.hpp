#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dvs/error.hpp"
#include "dvs/modmath.hpp"
#include "dvs/random.hpp"

namespace dvs {

/// Order-q subgroup of Z_p^* generated by g.
struct GroupParams {
  Int p;
  Int q;
  Int g;

  friend bool operator==(const GroupParams& a, const GroupParams& b) {
    return a.p == b.p && a.q == b.q && a.g == b.g;
  }
};

inline constexpr int kPrimalityRounds = 64;

inline bool is_probable_prime(const Int& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), kPrimalityRounds) > 0;
}

enum class ParamDefect {
  p_not_prime,
  q_not_prime,
  q_not_dividing_p_minus_1,
  g_out_of_range,
  g_order_not_q,
  g_identity,
};

constexpr std::string_view to_string(ParamDefect d) {
  switch (d) {
    case ParamDefect::p_not_prime: return "p is not prime";
    case ParamDefect::q_not_prime: return "q is not prime";
    case ParamDefect::q_not_dividing_p_minus_1: return "q does not divide p-1";
    case ParamDefect::g_out_of_range: return "g is not in (1, p)";
    case ParamDefect::g_order_not_q: return "g^q mod p is not 1";
    case ParamDefect::g_identity: return "generator is identity";
  }
  return "unknown defect";
}

struct ValidationReport {
  std::vector<ParamDefect> defects;

  bool valid() const { return defects.empty(); }
  bool has(ParamDefect d) const {
    for (auto x : defects) {
      if (x == d) return true;
    }
    return false;
  }
};

inline ValidationReport validate_params(const GroupParams& gp) {
  ValidationReport report;
  auto fail = [&](ParamDefect d) { report.defects.push_back(d); };

  if (!is_probable_prime(gp.p)) fail(ParamDefect::p_not_prime);
  if (!is_probable_prime(gp.q)) fail(ParamDefect::q_not_prime);
  if (gp.q <= 0 || gp.p < 2 || reduce(gp.p - 1, gp.q) != 0) {
    fail(ParamDefect::q_not_dividing_p_minus_1);
  }
  if (!(gp.g > 1 && gp.g < gp.p)) fail(ParamDefect::g_out_of_range);
  if (gp.p >= 2 && gp.q >= 0 && mod_exp(reduce(gp.g, gp.p), gp.q, gp.p) != 1) {
    fail(ParamDefect::g_order_not_q);
  }
  if (gp.g == 1) fail(ParamDefect::g_identity);
  return report;
}

/// p=23, q=11, g=4: small enough for exhaustive enumeration.
inline GroupParams toy23() { return GroupParams{Int(23), Int(11), Int(4)}; }

inline std::optional<GroupParams> preset(std::string_view name) {
  if (name == "toy23") return toy23();
  return std::nullopt;
}

struct GenerationLimits {
  std::uint64_t max_candidates = 2'000'000;
};

/// Schnorr group search: a q_bits prime q first, then p = 2kq + 1 with exactly
/// p_bits bits, then g = h^((p-1)/q) for random h until g != 1. Deterministic
/// for a deterministic rng.
inline GroupParams generate_params(std::size_t q_bits, std::size_t p_bits, RandomSource& rng,
                                   GenerationLimits limits = {}) {
  if (q_bits < 4 || p_bits <= q_bits) {
    throw Error(ErrorCode::out_of_range, "need q_bits >= 4 and p_bits > q_bits");
  }
  std::uint64_t budget = limits.max_candidates;
  auto spend = [&] {
    if (budget == 0) throw Error(ErrorCode::generation_timeout, "candidate budget exhausted");
    --budget;
  };

  const Int p_low = Int(1) << static_cast<mp_bitcnt_t>(p_bits - 1);
  const Int p_high = Int(1) << static_cast<mp_bitcnt_t>(p_bits);
  const std::size_t p_tries_per_q = 16 * p_bits;

  for (;;) {
    spend();
    Int q = sample_bits(q_bits, rng);
    q |= 1;
    if (!is_probable_prime(q)) continue;

    // k range that keeps p = 2kq + 1 inside [2^(p_bits-1), 2^p_bits).
    const Int two_q = 2 * q;
    Int k_min = (p_low - 1 + two_q - 1) / two_q;
    Int k_max = (p_high - 2) / two_q;
    if (k_min < 1) k_min = 1;
    if (k_max < k_min) continue;
    const Int k_span = k_max - k_min + 1;

    for (std::size_t i = 0; i < p_tries_per_q; ++i) {
      spend();
      Int k = k_min + (k_span >= 2 ? sample_uniform(k_span, false, rng) : Int(0));
      Int p = two_q * k + 1;
      if (!is_probable_prime(p)) continue;

      const Int cofactor = (p - 1) / q;
      for (;;) {
        spend();
        Int h = 2 + sample_uniform(p - 3, false, rng);
        Int g = mod_exp(h, cofactor, p);
        if (g != 1) return GroupParams{p, q, g};
      }
    }
  }
}

/// base^e inside the order-q subgroup. Negative exponents use the inverse base;
/// the exponent is reduced mod q first.
inline Int subgroup_pow(const GroupParams& gp, const Int& base, const Int& exponent) {
  if (exponent < 0) {
    return mod_exp(mod_inv(base, gp.p), reduce(-exponent, gp.q), gp.p);
  }
  return mod_exp(base, reduce(exponent, gp.q), gp.p);
}

inline Int g_pow(const GroupParams& gp, const Int& exponent) {
  return subgroup_pow(gp, gp.g, exponent);
}

inline bool in_subgroup(const GroupParams& gp, const Int& element) {
  return element >= 1 && element < gp.p && mod_exp(element, gp.q, gp.p) == 1;
}

}  // namespace dvs
