#pragma once

#include <openssl/evp.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dvs/error.hpp"
#include "dvs/random.hpp"
#include "dvs/wire.hpp"

// PEM-like text armor for wire blobs:
//
//   -----BEGIN DVS PUBLIC KEY-----
//   Role: signer                      (optional "Name: value" headers)
//                                     (blank line after headers)
//   base64 body, 64 columns
//   -----END DVS PUBLIC KEY-----
namespace dvs::armor {

struct Block {
  std::string label;
  std::vector<std::pair<std::string, std::string>> headers;
  Bytes data;

  std::string header(std::string_view name) const {
    for (const auto& [k, v] : headers) {
      if (k == name) return v;
    }
    return {};
  }
};

inline std::string_view label_for(wire::Kind kind) {
  switch (kind) {
    case wire::Kind::params: return "DVS PARAMS";
    case wire::Kind::public_key: return "DVS PUBLIC KEY";
    case wire::Kind::secret_key: return "DVS SECRET KEY";
    default: return "DVS SIGNATURE";
  }
}

inline std::string base64_encode(std::span<const std::uint8_t> data) {
  std::string out(4 * ((data.size() + 2) / 3) + 1, '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), data.data(),
                                static_cast<int>(data.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

/// Strict: the input must be the canonical encoding of whatever it decodes to.
inline Bytes base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) throw Error(ErrorCode::malformed, "base64 length not a multiple of 4");
  Bytes out(3 * (text.size() / 4));
  const int n = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char*>(text.data()),
                                static_cast<int>(text.size()));
  if (n < 0) throw Error(ErrorCode::malformed, "invalid base64");
  std::size_t pad = 0;
  if (!text.empty() && text.back() == '=') ++pad;
  if (text.size() >= 2 && text[text.size() - 2] == '=') ++pad;
  out.resize(static_cast<std::size_t>(n) - pad);
  if (base64_encode(out) != text) throw Error(ErrorCode::malformed, "non-canonical base64");
  return out;
}

inline std::string wrap(const Block& block) {
  std::ostringstream os;
  os << "-----BEGIN " << block.label << "-----\n";
  for (const auto& [k, v] : block.headers) os << k << ": " << v << "\n";
  if (!block.headers.empty()) os << "\n";
  const std::string body = base64_encode(block.data);
  for (std::size_t i = 0; i < body.size(); i += 64) os << body.substr(i, 64) << "\n";
  os << "-----END " << block.label << "-----\n";
  return os.str();
}

inline std::string wrap(wire::Kind kind, std::span<const std::uint8_t> blob,
                        std::vector<std::pair<std::string, std::string>> headers = {}) {
  return wrap(Block{std::string(label_for(kind)), std::move(headers), Bytes(blob.begin(), blob.end())});
}

inline bool looks_armored(std::span<const std::uint8_t> bytes) {
  static constexpr std::string_view kBegin = "-----BEGIN ";
  std::size_t i = 0;
  while (i < bytes.size() && (bytes[i] == ' ' || bytes[i] == '\n' || bytes[i] == '\r' || bytes[i] == '\t')) ++i;
  if (bytes.size() - i < kBegin.size()) return false;
  return std::string_view(reinterpret_cast<const char*>(bytes.data() + i), kBegin.size()) == kBegin;
}

inline Block unwrap(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  std::size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;

  static constexpr std::string_view kBegin = "-----BEGIN ";
  static constexpr std::string_view kEnd = "-----END ";
  static constexpr std::string_view kDashes = "-----";
  auto marker_label = [](std::string_view line, std::string_view prefix) -> std::string {
    if (line.size() <= prefix.size() + kDashes.size() || line.substr(0, prefix.size()) != prefix ||
        line.substr(line.size() - kDashes.size()) != kDashes) {
      throw Error(ErrorCode::malformed, "bad armor marker line");
    }
    return std::string(line.substr(prefix.size(), line.size() - prefix.size() - kDashes.size()));
  };

  if (i == lines.size()) throw Error(ErrorCode::malformed, "empty armor");
  Block block;
  block.label = marker_label(lines[i++], kBegin);

  // Headers run until a blank line; a body line never contains ':'.
  if (i < lines.size() && lines[i].find(':') != std::string::npos) {
    while (i < lines.size() && !lines[i].empty()) {
      const auto colon = lines[i].find(": ");
      if (colon == std::string::npos) throw Error(ErrorCode::malformed, "bad armor header");
      block.headers.emplace_back(lines[i].substr(0, colon), lines[i].substr(colon + 2));
      ++i;
    }
    if (i == lines.size()) throw Error(ErrorCode::malformed, "missing blank line after headers");
    ++i;
  }

  std::string body;
  for (;; ++i) {
    if (i == lines.size()) throw Error(ErrorCode::malformed, "missing END marker");
    if (lines[i].rfind(kEnd, 0) == 0) break;
    body += lines[i];
  }
  if (marker_label(lines[i++], kEnd) != block.label) throw Error(ErrorCode::malformed, "END label mismatch");
  for (; i < lines.size(); ++i) {
    if (!lines[i].empty()) throw Error(ErrorCode::malformed, "trailing text after END marker");
  }
  block.data = base64_decode(body);
  return block;
}

}  // namespace dvs::armor
