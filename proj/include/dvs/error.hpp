#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dvs {

enum class ErrorCode {
  non_invertible,
  out_of_range,
  invalid_nonce,
  invalid_randomness,
  degenerate_hash,
  invalid_signature,
  invalid_pv_signature,
  message_too_long,
  malformed_encoding,
  malformed,
  generation_timeout,
  group_too_large,
  scheme_mismatch,
  unsupported,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::non_invertible: return "NonInvertible";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::invalid_nonce: return "InvalidNonce";
    case ErrorCode::invalid_randomness: return "InvalidRandomness";
    case ErrorCode::degenerate_hash: return "DegenerateHash";
    case ErrorCode::invalid_signature: return "InvalidSignature";
    case ErrorCode::invalid_pv_signature: return "InvalidPVSignature";
    case ErrorCode::message_too_long: return "MessageTooLong";
    case ErrorCode::malformed_encoding: return "MalformedEncoding";
    case ErrorCode::malformed: return "Malformed";
    case ErrorCode::generation_timeout: return "GenerationTimeout";
    case ErrorCode::group_too_large: return "GroupTooLarge";
    case ErrorCode::scheme_mismatch: return "SchemeMismatch";
    case ErrorCode::unsupported: return "Unsupported";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dvs
