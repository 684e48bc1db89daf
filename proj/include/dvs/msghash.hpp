#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "dvs/error.hpp"
#include "dvs/group.hpp"
#include "dvs/modmath.hpp"
#include "dvs/random.hpp"

namespace dvs {

enum class HashMode { production, test_stub };

/// framed: m = 0x01 || payload, big-endian. raw: m is supplied as a residue
/// directly (toy groups, where p is too small to frame anything).
enum class MessageEncoding { framed, raw };

struct Message {
  Int m;
  std::optional<Bytes> payload;

  friend bool operator==(const Message& a, const Message& b) { return a.m == b.m; }
};

/// Largest payload, in bytes, that encode_message accepts for this group.
inline std::ptrdiff_t message_capacity(const GroupParams& gp) {
  return static_cast<std::ptrdiff_t>(bit_length(gp.p) / 8) - 2;
}

inline Message encode_message(std::span<const std::uint8_t> payload, const GroupParams& gp) {
  if (static_cast<std::ptrdiff_t>(payload.size()) > message_capacity(gp)) {
    throw Error(ErrorCode::message_too_long,
                std::to_string(payload.size()) + " bytes exceeds capacity " +
                    std::to_string(message_capacity(gp)));
  }
  Bytes framed;
  framed.reserve(payload.size() + 1);
  framed.push_back(0x01);
  framed.insert(framed.end(), payload.begin(), payload.end());
  return Message{from_bytes(framed), Bytes(payload.begin(), payload.end())};
}

inline Bytes decode_message(const Int& m, const GroupParams& gp) {
  if (m < 1 || m >= gp.p) throw Error(ErrorCode::malformed_encoding, "residue outside [1, p)");
  Bytes bytes = to_bytes(m);
  if (bytes.empty() || bytes.front() != 0x01) {
    throw Error(ErrorCode::malformed_encoding, "missing 0x01 prefix byte");
  }
  return Bytes(bytes.begin() + 1, bytes.end());
}

/// Raw-residue message; m = 0 is refused because it would erase the message
/// from the c component.
inline Message raw_message(const Int& m, const GroupParams& gp) {
  if (m < 1 || m >= gp.p) throw Error(ErrorCode::out_of_range, "raw message residue must lie in [1, p)");
  return Message{m, std::nullopt};
}

/// H: (m, u) -> Z_q. Production is SHA-256 over
/// "DVS-H1" || len32(m) || m || len32(u) || u with minimal big-endian magnitudes.
inline Int hash_to_zq(const Int& m, const Int& u, const GroupParams& gp, HashMode mode) {
  if (mode == HashMode::test_stub) return reduce(m + u, gp.q);

  static constexpr std::string_view kTag = "DVS-H1";
  Bytes input(kTag.begin(), kTag.end());
  auto append = [&input](const Int& v) {
    const Bytes mag = to_bytes(v);
    const auto n = static_cast<std::uint32_t>(mag.size());
    for (int shift = 24; shift >= 0; shift -= 8) input.push_back(static_cast<std::uint8_t>(n >> shift));
    input.insert(input.end(), mag.begin(), mag.end());
  };
  append(m);
  append(u);
  const auto digest = detail::sha256(input);
  return reduce(from_bytes(digest), gp.q);
}

}  // namespace dvs
