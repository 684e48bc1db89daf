// Signer -> designator -> designated verifier, at full size.
#include <iostream>
#include <string_view>

#include "dvs/dvs.hpp"

int main() {
  dvs::SystemRandom rng;
  std::cout << "generating 2048/256-bit group...\n";
  const auto gp = dvs::generate_params(256, 2048, rng);
  const auto ctx = dvs::Context::for_group(gp);

  const auto alice = dvs::keygen(gp, rng, "signer");
  const auto bob = dvs::keygen(gp, rng, "verifier");

  constexpr std::string_view text = "patient record #1729";
  const auto msg = dvs::encode_message({reinterpret_cast<const std::uint8_t*>(text.data()), text.size()}, gp);

  // Signer: publicly verifiable Omega.
  const auto omega = dvs::pv::sign(ctx, alice.secret_key(), msg, rng);

  // Designator: checks Omega, then blinds it for Bob.
  const auto delta = dvs::udvs::designate(ctx, alice.public_key(), bob.public_key(), omega, rng);

  // Bob: recovers the message with his secret key.
  const auto recovered = dvs::udvs::verify_recover(ctx, alice.public_key(), bob.secret_key(), delta);
  std::cout << "recovered: " << std::string(recovered.payload->begin(), recovered.payload->end()) << "\n";

  // Bob can produce an equally valid delta himself.
  const auto fake = dvs::udvs::simulate(ctx, alice.public_key(), bob.secret_key(), msg, rng);
  dvs::udvs::verify_recover(ctx, alice.public_key(), bob.secret_key(), fake);
  std::cout << "simulated transcript also verifies\n";
}
