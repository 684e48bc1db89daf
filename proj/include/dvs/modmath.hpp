#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "dvs/error.hpp"
#include "dvs/random.hpp"

namespace dvs {

using Int = mpz_class;

inline std::size_t bit_length(const Int& value) {
  return value == 0 ? 0 : mpz_sizeinbase(value.get_mpz_t(), 2);
}

/// Minimal big-endian magnitude; zero encodes as the empty string.
inline Bytes to_bytes(const Int& value) {
  if (value < 0) throw Error(ErrorCode::out_of_range, "negative integer has no magnitude encoding");
  if (value == 0) return {};
  Bytes out((bit_length(value) + 7) / 8);
  std::size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, value.get_mpz_t());
  out.resize(written);
  return out;
}

inline Int from_bytes(std::span<const std::uint8_t> bytes) {
  Int value;
  if (!bytes.empty()) mpz_import(value.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return value;
}

/// Least non-negative residue of a mod n.
inline Int reduce(const Int& a, const Int& n) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Int mod_exp(const Int& base, const Int& exponent, const Int& modulus) {
  if (exponent < 0) throw Error(ErrorCode::out_of_range, "mod_exp takes a non-negative exponent");
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

inline Int mod_inv(const Int& a, const Int& modulus) {
  Int r;
  if (reduce(a, modulus) == 0 ||
      mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw Error(ErrorCode::non_invertible, a.get_str() + " mod " + modulus.get_str());
  }
  return r;
}

/// Exactly uniform draw from [0, bound), or [1, bound) with exclude_zero.
/// Rejection sampling on fixed-width draws, so there is no modulo bias.
inline Int sample_uniform(const Int& bound, bool exclude_zero, RandomSource& rng) {
  if (bound < 2) throw Error(ErrorCode::out_of_range, "sample_uniform needs bound >= 2");
  const Int offset = exclude_zero ? 1 : 0;
  const Int range = bound - offset;
  if (range == 1) return offset;

  const std::size_t bits = bit_length(range - 1);
  Bytes buf((bits + 7) / 8);
  const unsigned excess = static_cast<unsigned>(buf.size() * 8 - bits);
  for (;;) {
    rng.fill(buf);
    buf[0] &= static_cast<std::uint8_t>(0xFFu >> excess);
    Int candidate = from_bytes(buf);
    if (candidate < range) return candidate + offset;
  }
}

/// Uniform integer with exactly `bits` bits (top bit forced).
inline Int sample_bits(std::size_t bits, RandomSource& rng) {
  Bytes buf((bits + 7) / 8);
  rng.fill(buf);
  const unsigned excess = static_cast<unsigned>(buf.size() * 8 - bits);
  buf[0] &= static_cast<std::uint8_t>(0xFFu >> excess);
  buf[0] |= static_cast<std::uint8_t>(0x80u >> excess);
  return from_bytes(buf);
}

inline std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0F]);
  }
  return out;
}

}  // namespace dvs
