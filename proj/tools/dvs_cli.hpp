#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dvs/dvs.hpp"

// Command-line front end. Exit codes: 0 success/accept, 1 verification
// reject, 2 usage error, 3 malformed input.
namespace dvs::cli {

enum ExitCode : int { kOk = 0, kReject = 1, kUsage = 2, kMalformed = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  // shared
  std::string hash = "production";
  bool allow_insecure = false;
  std::string seed;
  std::string params_path;
  std::string key_path;
  std::string signer_path;
  std::string verifier_path;
  std::string in_path;
  std::string out_path;
  std::string public_out_path;
  std::string scheme;
  std::vector<std::string> nonces;
  // message input
  std::string message_hex;
  std::string message_file;
  std::string residue;
  std::string expect_hex;
  std::string expect_residue;
  // params gen / keygen
  std::string preset;
  std::size_t q_bits = 256;
  std::size_t p_bits = 2048;
  std::string secret;
  std::string role;
  // oracle
  long signer_secret = 3;
  long verifier_secret = 5;
  long oracle_residue = 7;
  unsigned workers = 1;
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(std::vector<std::string> args);

 private:
  // ---- I/O --------------------------------------------------------------

  Bytes read_all(const std::string& path) {
    if (path.empty()) throw UsageError("missing input path");
    if (path == "-") {
      return Bytes(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path);
    return Bytes(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }

  /// Armored text or a raw blob; the armor label must agree with the kind.
  Bytes read_blob(const std::string& path, armor::Block* block_out = nullptr) {
    Bytes bytes = read_all(path);
    if (!armor::looks_armored(bytes)) return bytes;
    armor::Block block = armor::unwrap(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    if (block.label != armor::label_for(wire::peek_kind(block.data))) {
      throw Error(ErrorCode::malformed, "armor label " + block.label + " does not match blob kind");
    }
    if (block_out) *block_out = block;
    return block.data;
  }

  template <class T>
  void write_value(const std::string& path, const T& value,
                   std::vector<std::pair<std::string, std::string>> headers = {}) {
    if (path.empty()) throw UsageError("missing output path (--out)");
    const Bytes blob = wire::encode(value);
    if (path == "-") {
      out_.write(reinterpret_cast<const char*>(blob.data()), static_cast<std::streamsize>(blob.size()));
      return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + path);
    f << armor::wrap(wire::kind_of<T>(), blob, std::move(headers));
  }

  GroupParams load_params() {
    if (opt_.params_path.empty()) throw UsageError("--params is required");
    auto gp = wire::decode_as<GroupParams>(read_blob(opt_.params_path));
    if (!validate_params(gp).valid()) throw Error(ErrorCode::malformed, "params fail validation");
    return gp;
  }

  SecretKey load_secret(const GroupParams& gp, const std::string& path, const char* flag) {
    if (path.empty()) throw UsageError(std::string(flag) + " is required");
    auto sk = wire::decode_as<SecretKey>(read_blob(path));
    if (sk.x < 1 || sk.x >= gp.q) throw Error(ErrorCode::malformed, "secret key out of range");
    return sk;
  }

  PublicKey load_public(const GroupParams& gp, const std::string& path, const char* flag) {
    if (path.empty()) throw UsageError(std::string(flag) + " is required");
    auto pk = wire::decode_as<PublicKey>(read_blob(path));
    if (!valid_public(gp, pk)) throw Error(ErrorCode::malformed, "public key is not a subgroup element");
    return pk;
  }

  Context context(const GroupParams& gp) {
    HashMode mode = HashMode::production;
    if (opt_.hash == "stub") {
      if (!opt_.allow_insecure) throw UsageError("--hash=stub requires --allow-insecure");
      mode = HashMode::test_stub;
    }
    return Context::for_group(gp, mode);
  }

  std::unique_ptr<RandomSource> rng(std::string_view purpose) {
    if (opt_.seed.empty()) return std::make_unique<SystemRandom>();
    return std::make_unique<SeededRandom>(std::string(purpose) + ":" + opt_.seed);
  }

  static Bytes parse_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw UsageError("hex string has odd length");
    Bytes out;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
      auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw UsageError("invalid hex digit");
      };
      out.push_back(static_cast<std::uint8_t>(nib(hex[i]) << 4 | nib(hex[i + 1])));
    }
    return out;
  }

  static Int parse_int(const std::string& text) {
    Int v;
    if (text.empty() || v.set_str(text, 10) != 0 || v < 0) throw UsageError("not a non-negative integer: " + text);
    return v;
  }

  Message make_message(const Context& ctx, const std::string& hex, const std::string& file, const std::string& residue,
                       bool required = true) {
    const int given = !hex.empty() + !file.empty() + !residue.empty();
    if (given == 0 && !required) return Message{};
    if (given != 1) throw UsageError("give exactly one of --message, --message-file, --residue");
    if (ctx.encoding == MessageEncoding::raw) {
      if (residue.empty()) throw UsageError("group too small for payloads; use --residue");
      return raw_message(parse_int(residue), ctx.group);
    }
    if (!residue.empty()) throw UsageError("--residue is only for toy groups; use --message");
    const Bytes payload = hex.empty() ? read_all(file) : parse_hex(hex);
    return encode_message(payload, ctx.group);
  }

  Message message(const Context& ctx) { return make_message(ctx, opt_.message_hex, opt_.message_file, opt_.residue); }

  std::vector<Int> nonce_list(std::size_t expected) {
    if (opt_.nonces.empty()) return {};
    if (opt_.nonces.size() != expected) {
      throw UsageError("--nonces takes " + std::to_string(expected) + " values");
    }
    std::vector<Int> out;
    for (const auto& n : opt_.nonces) out.push_back(parse_int(n));
    return out;
  }

  void print_recovered(const Context& ctx, const Message& msg) {
    out_ << "ACCEPT\n";
    if (ctx.encoding == MessageEncoding::raw) {
      out_ << "message " << msg.m.get_str() << "\n";
    } else {
      out_ << "payload " << to_hex(*msg.payload) << "\n";
    }
  }

  // ---- subcommands ------------------------------------------------------

  int params_gen() {
    GroupParams gp;
    if (!opt_.preset.empty()) {
      auto p = preset(opt_.preset);
      if (!p) throw UsageError("unknown preset " + opt_.preset);
      gp = *p;
    } else {
      auto r = rng("params");
      gp = generate_params(opt_.q_bits, opt_.p_bits, *r);
    }
    write_value(opt_.out_path, gp);
    return kOk;
  }

  int params_check() {
    if (opt_.params_path.empty()) throw UsageError("--params is required");
    auto gp = wire::decode_as<GroupParams>(read_blob(opt_.params_path));
    const auto report = validate_params(gp);
    out_ << "p bits " << bit_length(gp.p) << "\nq bits " << bit_length(gp.q) << "\n";
    for (auto d : report.defects) out_ << "defect " << to_string(d) << "\n";
    out_ << (report.valid() ? "valid" : "invalid") << "\n";
    return report.valid() ? kOk : kReject;
  }

  int keygen() {
    const auto gp = load_params();
    if (opt_.public_out_path.empty()) throw UsageError("--public-out is required");
    KeyPair kp;
    if (!opt_.secret.empty()) {
      kp = keypair_from_secret(gp, parse_int(opt_.secret), opt_.role);
    } else {
      auto r = rng("keygen");
      kp = dvs::keygen(gp, *r, opt_.role);
    }
    std::vector<std::pair<std::string, std::string>> headers;
    if (!kp.role.empty()) headers.emplace_back("Role", kp.role);
    write_value(opt_.out_path, kp.secret_key(), headers);
    write_value(opt_.public_out_path, kp.public_key(), headers);
    return kOk;
  }

  int sign() {
    const auto gp = load_params();
    const auto ctx = context(gp);
    const auto xa = load_secret(gp, opt_.key_path, "--key");
    const auto msg = message(ctx);
    const auto nonces = nonce_list(2);
    auto r = rng("sign");

    if (opt_.scheme == "saeednia") {
      const auto yb = load_public(gp, opt_.verifier_path, "--verifier");
      write_value(opt_.out_path, nonces.empty() ? saeednia::sign(ctx, xa, yb, msg, *r)
                                                : saeednia::sign(ctx, xa, yb, msg, {nonces[0], nonces[1]}));
    } else if (opt_.scheme == "leechang") {
      const auto yb = load_public(gp, opt_.verifier_path, "--verifier");
      write_value(opt_.out_path, nonces.empty() ? lee_chang::sign(ctx, xa, yb, msg, *r)
                                                : lee_chang::sign(ctx, xa, yb, msg, {nonces[0], nonces[1]}));
    } else {
      write_value(opt_.out_path, nonces.empty() ? pv::sign(ctx, xa, msg, *r)
                                                : pv::sign(ctx, xa, msg, {nonces[0], nonces[1]}));
    }
    return kOk;
  }

  /// Shared by verify, recover and dverify. `allowed` filters blob kinds.
  int check(const std::vector<wire::Kind>& allowed) {
    const auto gp = load_params();
    const auto ctx = context(gp);
    const auto ya = load_public(gp, opt_.signer_path, "--signer");
    const auto value = wire::decode(read_blob(opt_.in_path));
    const auto kind = wire::kind_of(value);
    if (std::find(allowed.begin(), allowed.end(), kind) == allowed.end()) {
      throw Error(ErrorCode::malformed, "signature kind not accepted by this subcommand");
    }
    const Message expected =
        make_message(ctx, opt_.expect_hex, "", opt_.expect_residue, /*required=*/false);
    const bool has_expected = !opt_.expect_hex.empty() || !opt_.expect_residue.empty();

    auto finish = [&](const Message& recovered) {
      if (has_expected && !(recovered == expected)) {
        out_ << "REJECT\nmessage mismatch\n";
        return static_cast<int>(kReject);
      }
      print_recovered(ctx, recovered);
      return static_cast<int>(kOk);
    };

    try {
      switch (kind) {
        case wire::Kind::saeednia: {
          const auto xb = load_secret(gp, opt_.key_path, "--key");
          const auto msg = message(ctx);
          const bool ok = saeednia::verify(ctx, ya, xb, msg, std::get<SaeedniaSignature>(value));
          out_ << (ok ? "ACCEPT\n" : "REJECT\n");
          return ok ? kOk : kReject;
        }
        case wire::Kind::lee_chang: {
          const auto xb = load_secret(gp, opt_.key_path, "--key");
          return finish(lee_chang::recover_verify(ctx, ya, xb, std::get<RecoverySignature>(value)));
        }
        case wire::Kind::pv:
          return finish(pv::verify(ctx, ya, std::get<PVSignature>(value)));
        case wire::Kind::udvs: {
          const auto xb = load_secret(gp, opt_.key_path, "--key");
          return finish(udvs::verify_recover(ctx, ya, xb, std::get<DVSignature>(value)));
        }
        default:
          throw Error(ErrorCode::malformed, "not a signature blob");
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::invalid_signature && e.code() != ErrorCode::malformed_encoding) throw;
      out_ << "REJECT\n";
      return kReject;
    }
  }

  int designate() {
    const auto gp = load_params();
    const auto ctx = context(gp);
    const auto ya = load_public(gp, opt_.signer_path, "--signer");
    const auto yb = load_public(gp, opt_.verifier_path, "--verifier");
    const auto omega = wire::decode_as<PVSignature>(read_blob(opt_.in_path));
    const auto nonces = nonce_list(1);
    auto r = rng("designate");
    try {
      write_value(opt_.out_path, nonces.empty() ? udvs::designate(ctx, ya, yb, omega, *r)
                                                : udvs::designate(ctx, ya, yb, omega, nonces[0]));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::invalid_pv_signature) throw;
      out_ << "REJECT\n";
      return kReject;
    }
    return kOk;
  }

  int simulate() {
    const auto gp = load_params();
    const auto ctx = context(gp);
    const auto xb = load_secret(gp, opt_.key_path, "--key");
    const auto ya = load_public(gp, opt_.signer_path, "--signer");
    const auto msg = message(ctx);
    auto r = rng("simulate");

    if (opt_.scheme == "saeednia") {
      const auto n = nonce_list(2);
      write_value(opt_.out_path, n.empty() ? saeednia::simulate(ctx, ya, xb, msg, *r)
                                           : saeednia::simulate(ctx, ya, xb, msg, {n[0], n[1]}));
    } else if (opt_.scheme == "leechang") {
      const auto n = nonce_list(2);
      write_value(opt_.out_path, n.empty() ? lee_chang::simulate(ctx, ya, xb, msg, *r)
                                           : lee_chang::simulate(ctx, ya, xb, msg, {n[0], n[1]}));
    } else {
      const auto n = nonce_list(3);
      write_value(opt_.out_path, n.empty() ? udvs::simulate(ctx, ya, xb, msg, *r)
                                           : udvs::simulate(ctx, ya, xb, msg, {n[0], n[1], n[2]}));
    }
    return kOk;
  }

  int run_oracle() {
    GroupParams gp = toy23();
    if (!opt_.params_path.empty()) gp = load_params();
    SchemeTag tag = SchemeTag::saeednia;
    if (opt_.scheme == "leechang") tag = SchemeTag::lee_chang;
    if (opt_.scheme == "udvs") tag = SchemeTag::udvs;

    const oracle::Parties keys{keypair_from_secret(gp, opt_.signer_secret, "signer"),
                               keypair_from_secret(gp, opt_.verifier_secret, "verifier")};
    const Int m(opt_.oracle_residue);
    const auto real = oracle::enumerate_real(gp, keys, m, tag, opt_.workers);
    const auto sim = oracle::enumerate_simulated(gp, keys, m, tag, opt_.workers);
    const auto report = oracle::check_indistinguishable(real, sim);
    out_ << "group p=" << gp.p.get_str() << " q=" << gp.q.get_str() << " g=" << gp.g.get_str() << "\n";
    out_ << "verified real " << oracle::count_verifying(gp, keys, m, real) << "/" << real.total << "\n";
    out_ << "verified simulated " << oracle::count_verifying(gp, keys, m, sim) << "/" << sim.total << "\n";
    out_ << oracle::format_report(real, sim, report);
    return report.identical ? kOk : kReject;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  Options opt_;
};

inline int Runner::run(std::vector<std::string> args) {
  CLI::App app{"Designated verifier signatures over Schnorr groups", "dvs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--hash", opt_.hash, "Hash H: production (SHA-256) or stub (m+u mod q)")
      ->check(CLI::IsMember({"production", "stub"}));
  app.add_flag("--allow-insecure", opt_.allow_insecure, "Permit --hash=stub");
  app.add_option("--seed", opt_.seed, "Derive all randomness deterministically from this seed");
  app.add_option("--params", opt_.params_path, "Group parameter file");
  app.add_option("--key", opt_.key_path, "Own secret key file");
  app.add_option("--in", opt_.in_path, "Input blob ('-' for stdin)");
  app.add_option("--out", opt_.out_path, "Output blob ('-' for raw stdout)");

  auto add_message = [&](CLI::App* sub) {
    sub->add_option("--message", opt_.message_hex, "Payload as hex");
    sub->add_option("--message-file", opt_.message_file, "Payload file");
    sub->add_option("--residue", opt_.residue, "Message residue (toy groups)");
  };

  auto* cmd_params = app.add_subcommand("params", "Generate or check group parameters");
  cmd_params->require_subcommand(1);
  auto* cmd_params_gen = cmd_params->add_subcommand("gen", "Generate a Schnorr group");
  cmd_params_gen->add_option("--preset", opt_.preset, "Named group (toy23)");
  cmd_params_gen->add_option("--q-bits", opt_.q_bits, "Subgroup order size")->check(CLI::Range(4, 4096));
  cmd_params_gen->add_option("--p-bits", opt_.p_bits, "Modulus size")->check(CLI::Range(5, 16384));
  auto* cmd_params_check = cmd_params->add_subcommand("check", "Validate a parameter file");

  auto* cmd_keygen = app.add_subcommand("keygen", "Generate a key pair");
  cmd_keygen->add_option("--public-out", opt_.public_out_path, "Public key output file");
  cmd_keygen->add_option("--secret", opt_.secret, "Use this secret exponent instead of sampling");
  cmd_keygen->add_option("--role", opt_.role, "Free-form role label");

  auto* cmd_sign = app.add_subcommand("sign", "Sign a message");
  cmd_sign->add_option("--scheme", opt_.scheme)->required()->check(CLI::IsMember({"saeednia", "leechang", "pv"}));
  cmd_sign->add_option("--verifier", opt_.verifier_path, "Designated verifier public key");
  cmd_sign->add_option("--nonces", opt_.nonces, "Explicit signing randomness")->delimiter(',');
  add_message(cmd_sign);

  auto add_check_flags = [&](CLI::App* sub) {
    sub->add_option("--signer", opt_.signer_path, "Signer public key");
    sub->add_option("--expect-message", opt_.expect_hex, "Compare the recovered payload (hex)");
    sub->add_option("--expect-residue", opt_.expect_residue, "Compare the recovered residue");
  };
  auto* cmd_verify = app.add_subcommand("verify", "Verify any signature kind");
  add_check_flags(cmd_verify);
  add_message(cmd_verify);
  auto* cmd_recover = app.add_subcommand("recover", "Recover and verify a message-recovery signature");
  add_check_flags(cmd_recover);
  auto* cmd_dverify = app.add_subcommand("dverify", "Verify a designated signature and recover the message");
  add_check_flags(cmd_dverify);

  auto* cmd_designate = app.add_subcommand("designate", "Turn a PV signature into a designated one");
  cmd_designate->add_option("--signer", opt_.signer_path, "Signer public key");
  cmd_designate->add_option("--verifier", opt_.verifier_path, "Designated verifier public key");
  cmd_designate->add_option("--nonces", opt_.nonces, "Explicit designation exponent d")->delimiter(',');

  auto* cmd_simulate = app.add_subcommand("simulate", "Produce a transcript as the designated verifier");
  cmd_simulate->add_option("--scheme", opt_.scheme)->required()->check(CLI::IsMember({"saeednia", "leechang", "udvs"}));
  cmd_simulate->add_option("--signer", opt_.signer_path, "Signer public key");
  cmd_simulate->add_option("--nonces", opt_.nonces, "Explicit simulator randomness")->delimiter(',');
  add_message(cmd_simulate);

  auto* cmd_oracle = app.add_subcommand("oracle", "Exhaustive real-vs-simulated comparison on a toy group");
  cmd_oracle->add_option("--scheme", opt_.scheme)->required()->check(CLI::IsMember({"saeednia", "leechang", "udvs"}));
  cmd_oracle->add_option("--signer-secret", opt_.signer_secret);
  cmd_oracle->add_option("--verifier-secret", opt_.verifier_secret);
  cmd_oracle->add_option("--residue", opt_.oracle_residue);
  cmd_oracle->add_option("--workers", opt_.workers)->check(CLI::Range(1, 256));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err_ << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (cmd_params_gen->parsed()) return this->params_gen();
    if (cmd_params_check->parsed()) return this->params_check();
    if (cmd_keygen->parsed()) return this->keygen();
    if (cmd_sign->parsed()) return this->sign();
    if (cmd_verify->parsed()) {
      return check({wire::Kind::saeednia, wire::Kind::lee_chang, wire::Kind::pv, wire::Kind::udvs});
    }
    if (cmd_recover->parsed()) return check({wire::Kind::lee_chang, wire::Kind::pv, wire::Kind::udvs});
    if (cmd_dverify->parsed()) return check({wire::Kind::udvs});
    if (cmd_designate->parsed()) return this->designate();
    if (cmd_simulate->parsed()) return this->simulate();
    if (cmd_oracle->parsed()) return run_oracle();
  } catch (const UsageError& e) {
    err_ << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err_ << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::malformed:
      case ErrorCode::malformed_encoding:
        return kMalformed;
      case ErrorCode::invalid_signature:
      case ErrorCode::invalid_pv_signature:
        return kReject;
      default:
        return kUsage;
    }
  }
  err_ << app.help();
  return kUsage;
}

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  return Runner(in, out, err).run(std::move(args));
}

}  // namespace dvs::cli
