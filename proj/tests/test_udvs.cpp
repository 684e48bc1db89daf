#include <gtest/gtest.h>

#include "dvs/udvs.hpp"
#include "support/fixtures.hpp"
#include "support/toy_arith.hpp"

using dvs::DVSignature;

class UDVSToy : public ::testing::Test {
 protected:
  const dvs::GroupParams gp = dvs::toy23();
  const dvs::Context ctx = dvs::Context::toy(gp);
  const dvs::KeyPair alice = fixtures::toy_signer();
  const dvs::KeyPair bob = fixtures::toy_verifier();
  const dvs::Message m7 = dvs::raw_message(7, gp);
  const dvs::PVSignature omega{16, 11, 3, 3};
};

TEST_F(UDVSToy, WorkedDesignation) {
  auto delta = dvs::udvs::designate(ctx, alice.public_key(), bob.public_key(), omega, 4);
  EXPECT_EQ(delta, (DVSignature{16, 5, 3, 3, 8}));
  auto ref = toy::designate(toy::kToy23, 12, {16, 11, 3, 3}, 4);
  EXPECT_EQ(delta, (DVSignature{ref.t, ref.w, ref.r, ref.s, ref.e}));
}

TEST_F(UDVSToy, ZeroDesignationIsIdentityBlinder) {
  auto delta = dvs::udvs::designate(ctx, alice.public_key(), bob.public_key(), omega, 0);
  EXPECT_EQ(delta, (DVSignature{16, 11, 3, 3, 1}));
  EXPECT_EQ(dvs::udvs::verify_recover(ctx, alice.public_key(), bob.secret_key(), delta).m, 7);
}

TEST_F(UDVSToy, TamperedOmegaIsNotDesignated) {
  try {
    dvs::udvs::designate(ctx, alice.public_key(), bob.public_key(), {16, 11, 4, 3}, 4);
    FAIL();
  } catch (const dvs::Error& e) {
    EXPECT_EQ(e.code(), dvs::ErrorCode::invalid_pv_signature);
  }
}

TEST_F(UDVSToy, WorkedVerification) {
  EXPECT_EQ(dvs::udvs::verify_recover(ctx, alice.public_key(), bob.secret_key(), {16, 5, 3, 3, 8}).m, 7);
  EXPECT_EQ(toy::pow_slow(8, 5, 23), 16u);
}

TEST_F(UDVSToy, TamperedAndWrongKey) {
  for (auto [sig, key] : {std::pair{DVSignature{16, 6, 3, 3, 8}, dvs::SecretKey{5}},
                          std::pair{DVSignature{16, 5, 3, 3, 8}, dvs::SecretKey{4}}}) {
    try {
      dvs::udvs::verify_recover(ctx, alice.public_key(), key, sig);
      FAIL();
    } catch (const dvs::Error& e) {
      EXPECT_EQ(e.code(), dvs::ErrorCode::invalid_signature);
    }
    EXPECT_FALSE(toy::dv_open(toy::kToy23, 18, key.x.get_ui(),
                              {sig.t.get_ui(), sig.w.get_ui(), sig.r.get_ui(), sig.s.get_ui(), sig.e.get_ui()})
                     .ok);
  }
}

TEST_F(UDVSToy, WorkedSimulation) {
  auto sim = dvs::udvs::simulate(ctx, alice.public_key(), bob.secret_key(), m7, {2, 5, 4});
  EXPECT_EQ(sim, (DVSignature{8, 7, 1, 8, 8}));
  EXPECT_EQ(dvs::udvs::verify_recover(ctx, alice.public_key(), bob.secret_key(), sim).m, 7);
  EXPECT_TRUE(toy::dv_open(toy::kToy23, 18, 5, {8, 7, 1, 8, 8}).ok);
}

TEST_F(UDVSToy, ZeroW1) {
  try {
    dvs::udvs::simulate(ctx, alice.public_key(), bob.secret_key(), m7, {0, 5, 4});
    FAIL();
  } catch (const dvs::Error& e) {
    EXPECT_EQ(e.code(), dvs::ErrorCode::invalid_randomness);
  }
}

// The simulator with c' = m * y_A^(x_B*w2/w1) and e' = c' * y_B^d' (no w')
// does not open under the verification equations; the same check against
// the implemented simulator succeeds for every input.
TEST_F(UDVSToy, LiteralSimulatorFailsVerification) {
  int literal_ok = 0;
  int total = 0;
  for (unsigned w1 = 1; w1 < 11; ++w1) {
    for (unsigned w2 = 0; w2 < 11; ++w2) {
      for (unsigned d = 0; d < 11; ++d) {
        const auto& G = toy::kToy23;
        const auto w1i = toy::inv(w1, 11);
        const auto t = toy::pow_slow(18, w1i, 23);
        const auto c = 7 * toy::pow_slow(18, 5 * w1i * w2 % 11, 23) % 23;
        const auto r = G.H(7, toy::pow_slow(18, w1i * w2 % 11, 23));
        const auto s = G.modq(static_cast<long long>(w1 * r) - static_cast<long long>(w2));
        const auto e = c * toy::pow_slow(12, d, 23) % 23;
        literal_ok += toy::dv_open(G, 18, 5, {t, c, r, s, e}).ok;
        ++total;
        auto sim = dvs::udvs::simulate(ctx, alice.public_key(), bob.secret_key(), m7, {w1, w2, d});
        ASSERT_TRUE(dvs::udvs::open(ctx, alice.public_key(), bob.secret_key(), sim).hash_ok);
      }
    }
  }
  EXPECT_LT(literal_ok, total);
}

TEST_F(UDVSToy, ExhaustiveEndToEnd) {
  for (unsigned k1 = 1; k1 < 11; ++k1) {
    for (unsigned k2 = 0; k2 < 11; ++k2) {
      auto om = dvs::pv::sign(ctx, alice.secret_key(), m7, {k1, k2});
      ASSERT_EQ(dvs::pv::verify(ctx, alice.public_key(), om).m, 7);
      for (unsigned d = 0; d < 11; ++d) {
        auto delta = dvs::udvs::designate(ctx, alice.public_key(), bob.public_key(), om, d);
        auto ref = toy::designate(toy::kToy23, 12, {om.t.get_ui(), om.c.get_ui(), om.r.get_ui(), om.s.get_ui()}, d);
        ASSERT_EQ(delta, (DVSignature{ref.t, ref.w, ref.r, ref.s, ref.e}));
        ASSERT_EQ(toy::dv_open(toy::kToy23, 18, 5, ref).m, 7u);
        ASSERT_EQ(dvs::udvs::verify_recover(ctx, alice.public_key(), bob.secret_key(), delta).m, 7);
      }
    }
  }
}

TEST(UDVSFull, RandomFlow) {
  const auto& gp = fixtures::full_size_group();
  const auto ctx = dvs::Context::for_group(gp);
  dvs::SeededRandom rng("udvs-full");
  auto a = dvs::keygen(gp, rng), b = dvs::keygen(gp, rng), eve = dvs::keygen(gp, rng);
  for (int i = 0; i < 10; ++i) {
    dvs::Bytes payload{0x68, 0x69, static_cast<std::uint8_t>(i)};
    auto msg = dvs::encode_message(payload, gp);
    auto omega = dvs::pv::sign(ctx, a.secret_key(), msg, rng);
    auto delta = dvs::udvs::designate(ctx, a.public_key(), b.public_key(), omega, rng);
    EXPECT_EQ(*dvs::udvs::verify_recover(ctx, a.public_key(), b.secret_key(), delta).payload, payload);
    EXPECT_THROW(dvs::udvs::verify_recover(ctx, a.public_key(), eve.secret_key(), delta), dvs::Error);
    auto sim = dvs::udvs::simulate(ctx, a.public_key(), b.secret_key(), msg, rng);
    EXPECT_EQ(*dvs::udvs::verify_recover(ctx, a.public_key(), b.secret_key(), sim).payload, payload);
  }
}
