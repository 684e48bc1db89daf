#pragma once

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dvs/error.hpp"

namespace dvs {

using Bytes = std::vector<std::uint8_t>;

/// Source of uniformly random bytes. Passed explicitly to every randomized
/// operation; the library keeps no hidden generator state.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

/// Operating-system entropy through OpenSSL's DRBG.
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override {
    if (out.empty()) return;
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
      throw std::runtime_error("RAND_bytes failed");
    }
  }
};

namespace detail {

inline std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, 32> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != digest.size()) {
    throw std::runtime_error("SHA-256 failed");
  }
  return digest;
}

}  // namespace detail

/// Deterministic stream: block i = SHA-256("DVS-DRBG" || seed || i as 8 bytes BE).
/// Used for reproducible transcripts and tests; the seed is the whole secret.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::string_view seed) : seed_(seed.begin(), seed.end()) {}
  explicit SeededRandom(std::uint64_t seed) : SeededRandom(std::to_string(seed)) {}

  void fill(std::span<std::uint8_t> out) override {
    for (auto& byte : out) {
      if (offset_ == block_.size()) refill();
      byte = block_[offset_++];
    }
  }

 private:
  void refill() {
    static constexpr std::string_view kTag = "DVS-DRBG";
    Bytes input(kTag.begin(), kTag.end());
    input.insert(input.end(), seed_.begin(), seed_.end());
    for (int shift = 56; shift >= 0; shift -= 8) {
      input.push_back(static_cast<std::uint8_t>(counter_ >> shift));
    }
    ++counter_;
    block_ = detail::sha256(input);
    offset_ = 0;
  }

  Bytes seed_;
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t offset_ = 32;
};

}  // namespace dvs
