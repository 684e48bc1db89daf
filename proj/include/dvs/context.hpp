#pragma once

#include "dvs/group.hpp"
#include "dvs/msghash.hpp"

namespace dvs {

/// Everything a scheme operation needs besides keys and randomness.
struct Context {
  GroupParams group;
  HashMode hash = HashMode::production;
  MessageEncoding encoding = MessageEncoding::framed;

  Int H(const Int& m, const Int& u) const { return hash_to_zq(m, u, group, hash); }

  /// Production hash, framed messages unless the group is too small to frame.
  static Context for_group(GroupParams gp, HashMode mode = HashMode::production) {
    const auto enc = message_capacity(gp) >= 1 ? MessageEncoding::framed : MessageEncoding::raw;
    return Context{std::move(gp), mode, enc};
  }

  /// Stub hash and raw residues: the hand-checkable configuration.
  static Context toy(GroupParams gp) {
    return Context{std::move(gp), HashMode::test_stub, MessageEncoding::raw};
  }

  /// Turns a recovered residue back into a Message under this encoding.
  Message recovered(const Int& m) const {
    if (encoding == MessageEncoding::raw) return Message{m, std::nullopt};
    return Message{m, decode_message(m, group)};
  }

  bool decodes(const Int& m) const {
    if (encoding == MessageEncoding::raw) return m >= 1 && m < group.p;
    try {
      decode_message(m, group);
      return true;
    } catch (const Error&) {
      return false;
    }
  }
};

}  // namespace dvs
