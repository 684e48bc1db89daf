#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "dvs/error.hpp"
#include "dvs/group.hpp"
#include "dvs/keys.hpp"
#include "dvs/modmath.hpp"
#include "dvs/signatures.hpp"

// Blob layout: version (0x01) | kind | fields, each field a 4-byte big-endian
// length followed by the minimal big-endian magnitude. Decoding is strict:
// one byte string per value.
namespace dvs::wire {

inline constexpr std::uint8_t kVersion = 0x01;

enum class Kind : std::uint8_t {
  saeednia = 0x01,
  lee_chang = 0x02,
  pv = 0x03,
  udvs = 0x04,
  params = 0x10,
  public_key = 0x11,
  secret_key = 0x12,
};

using Value = std::variant<GroupParams, PublicKey, SecretKey, SaeedniaSignature, RecoverySignature,
                           PVSignature, DVSignature>;

namespace detail {

template <class T> struct KindOf;
template <> struct KindOf<GroupParams> { static constexpr Kind value = Kind::params; };
template <> struct KindOf<PublicKey> { static constexpr Kind value = Kind::public_key; };
template <> struct KindOf<SecretKey> { static constexpr Kind value = Kind::secret_key; };
template <> struct KindOf<SaeedniaSignature> { static constexpr Kind value = Kind::saeednia; };
template <> struct KindOf<RecoverySignature> { static constexpr Kind value = Kind::lee_chang; };
template <> struct KindOf<PVSignature> { static constexpr Kind value = Kind::pv; };
template <> struct KindOf<DVSignature> { static constexpr Kind value = Kind::udvs; };

inline std::vector<Int> fields_of(const GroupParams& v) { return {v.p, v.q, v.g}; }
inline std::vector<Int> fields_of(const PublicKey& v) { return {v.y}; }
inline std::vector<Int> fields_of(const SecretKey& v) { return {v.x}; }
template <class Sig>
std::vector<Int> fields_of(const Sig& v) { return v.fields(); }

inline std::size_t field_count(Kind kind) {
  switch (kind) {
    case Kind::params: return 3;
    case Kind::public_key: return 1;
    case Kind::secret_key: return 1;
    case Kind::saeednia: return 3;
    case Kind::lee_chang: return 4;
    case Kind::pv: return 4;
    case Kind::udvs: return 5;
  }
  return 0;
}

inline bool known_kind(std::uint8_t raw) {
  return (raw >= 0x01 && raw <= 0x04) || (raw >= 0x10 && raw <= 0x12);
}

[[noreturn]] inline void malformed(const std::string& why) { throw Error(ErrorCode::malformed, why); }

}  // namespace detail

template <class T>
constexpr Kind kind_of() { return detail::KindOf<T>::value; }

inline Kind kind_of(const Value& v) {
  return std::visit([](const auto& x) { return kind_of<std::decay_t<decltype(x)>>(); }, v);
}

inline void append_int(Bytes& out, const Int& v) {
  const Bytes mag = to_bytes(v);
  const auto n = static_cast<std::uint32_t>(mag.size());
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(n >> shift));
  out.insert(out.end(), mag.begin(), mag.end());
}

template <class T>
Bytes encode(const T& value) {
  Bytes out{kVersion, static_cast<std::uint8_t>(kind_of<T>())};
  for (const auto& f : detail::fields_of(value)) append_int(out, f);
  return out;
}

inline Bytes encode(const Value& value) {
  return std::visit([](const auto& x) { return encode(x); }, value);
}

/// Reads the blob's kind byte without decoding the body.
inline Kind peek_kind(std::span<const std::uint8_t> blob) {
  if (blob.size() < 2) detail::malformed("truncated header");
  if (blob[0] != kVersion) detail::malformed("unknown version " + std::to_string(blob[0]));
  if (!detail::known_kind(blob[1])) detail::malformed("unknown kind " + std::to_string(blob[1]));
  return static_cast<Kind>(blob[1]);
}

inline Value decode(std::span<const std::uint8_t> blob) {
  const Kind kind = peek_kind(blob);
  std::vector<Int> f;
  std::size_t pos = 2;
  for (std::size_t i = 0; i < detail::field_count(kind); ++i) {
    if (blob.size() - pos < 4) detail::malformed("truncated length prefix");
    std::uint32_t len = 0;
    for (int j = 0; j < 4; ++j) len = (len << 8) | blob[pos + j];
    pos += 4;
    if (blob.size() - pos < len) detail::malformed("truncated magnitude");
    if (len > 0 && blob[pos] == 0x00) detail::malformed("non-minimal magnitude");
    f.push_back(from_bytes(blob.subspan(pos, len)));
    pos += len;
  }
  if (pos != blob.size()) detail::malformed("trailing bytes");

  switch (kind) {
    case Kind::params: return GroupParams{f[0], f[1], f[2]};
    case Kind::public_key: return PublicKey{f[0]};
    case Kind::secret_key: return SecretKey{f[0]};
    case Kind::saeednia: return SaeedniaSignature{f[0], f[1], f[2]};
    case Kind::lee_chang: return RecoverySignature{f[0], f[1], f[2], f[3]};
    case Kind::pv: return PVSignature{f[0], f[1], f[2], f[3]};
    case Kind::udvs: return DVSignature{f[0], f[1], f[2], f[3], f[4]};
  }
  detail::malformed("unreachable kind");
}

template <class T>
T decode_as(std::span<const std::uint8_t> blob) {
  Value v = decode(blob);
  if (auto* x = std::get_if<T>(&v)) return *x;
  detail::malformed("unexpected blob kind");
}

}  // namespace dvs::wire
