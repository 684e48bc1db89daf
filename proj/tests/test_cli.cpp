#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dvs_cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_data = {}) {
  std::istringstream in(stdin_data);
  std::ostringstream out, err;
  int code = dvs::cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dvs-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Toy group with the worked keys x_A = 3, x_B = 5.
  void toy_setup() {
    ASSERT_EQ(run({"params", "gen", "--preset", "toy23", "--out", path("params")}).code, 0);
    ASSERT_EQ(run({"keygen", "--params", path("params"), "--secret", "3", "--role", "signer", "--out",
                   path("a.sec"), "--public-out", path("a.pub")})
                  .code,
              0);
    ASSERT_EQ(run({"keygen", "--params", path("params"), "--secret", "5", "--out", path("b.sec"), "--public-out",
                   path("b.pub")})
                  .code,
              0);
  }

  std::vector<std::string> stub() const { return {"--hash", "stub", "--allow-insecure"}; }

  std::vector<std::string> with_stub(std::vector<std::string> args) const {
    for (auto& s : stub()) args.push_back(s);
    return args;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ToyPipelineReproducesWorkedVectors) {
  toy_setup();
  EXPECT_NE(slurp(path("a.sec")).find("Role: signer"), std::string::npos);

  auto r = run(with_stub({"sign", "--scheme", "pv", "--params", path("params"), "--key", path("a.sec"), "--residue",
                          "7", "--nonces", "2,3", "--out", path("omega")}));
  ASSERT_EQ(r.code, 0) << r.err;
  r = run(with_stub({"verify", "--params", path("params"), "--signer", path("a.pub"), "--in", path("omega")}));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "ACCEPT\nmessage 7\n");

  r = run(with_stub({"designate", "--params", path("params"), "--signer", path("a.pub"), "--verifier", path("b.pub"),
                     "--in", path("omega"), "--nonces", "4", "--out", path("delta")}));
  ASSERT_EQ(r.code, 0) << r.err;
  r = run(with_stub({"dverify", "--params", path("params"), "--signer", path("a.pub"), "--key", path("b.sec"), "--in",
                     path("delta")}));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "ACCEPT\nmessage 7\n");

  // The blob is exactly delta = (16, 5, 3, 3, 8).
  auto raw = run(with_stub({"designate", "--params", path("params"), "--signer", path("a.pub"), "--verifier",
                            path("b.pub"), "--in", path("omega"), "--nonces", "4", "--out", "-"}));
  ASSERT_EQ(raw.code, 0);
  const dvs::Bytes blob(raw.out.begin(), raw.out.end());
  EXPECT_EQ(dvs::wire::decode_as<dvs::DVSignature>(blob), (dvs::DVSignature{16, 5, 3, 3, 8}));
}

TEST_F(CliTest, RawBlobsThroughStdin) {
  toy_setup();
  auto sig = run(with_stub({"sign", "--scheme", "leechang", "--params", path("params"), "--key", path("a.sec"),
                            "--verifier", path("b.pub"), "--residue", "7", "--nonces", "2,3", "--out", "-"}));
  ASSERT_EQ(sig.code, 0) << sig.err;
  auto r = run(with_stub({"recover", "--params", path("params"), "--signer", path("a.pub"), "--key", path("b.sec"),
                          "--in", "-"}),
               sig.out);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "ACCEPT\nmessage 7\n");
}

TEST_F(CliTest, SaeedniaAndSimulation) {
  toy_setup();
  ASSERT_EQ(run(with_stub({"sign", "--scheme", "saeednia", "--params", path("params"), "--key", path("a.sec"),
                           "--verifier", path("b.pub"), "--residue", "7", "--out", path("s"), "--seed", "1"}))
                .code,
            0);
  auto ok = run(with_stub({"verify", "--params", path("params"), "--signer", path("a.pub"), "--key", path("b.sec"),
                           "--residue", "7", "--in", path("s")}));
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "ACCEPT\n");
  auto wrong = run(with_stub({"verify", "--params", path("params"), "--signer", path("a.pub"), "--key",
                              path("a.sec"), "--residue", "7", "--in", path("s")}));
  EXPECT_EQ(wrong.code, 1);

  for (std::string scheme : {"saeednia", "leechang", "udvs"}) {
    auto sim = run(with_stub({"simulate", "--scheme", scheme, "--params", path("params"), "--key", path("b.sec"),
                              "--signer", path("a.pub"), "--residue", "7", "--seed", "x", "--out", path(scheme)}));
    ASSERT_EQ(sim.code, 0) << sim.err;
    std::vector<std::string> v{"verify", "--params", path("params"), "--signer", path("a.pub"), "--key",
                               path("b.sec"), "--in", path(scheme)};
    if (scheme == "saeednia") {
      v.push_back("--residue");
      v.push_back("7");
    }
    EXPECT_EQ(run(with_stub(v)).code, 0) << scheme;
  }

  auto sim = run(with_stub({"simulate", "--scheme", "udvs", "--params", path("params"), "--key", path("b.sec"),
                            "--signer", path("a.pub"), "--residue", "7", "--nonces", "2,5,4", "--out", "-"}));
  EXPECT_EQ(dvs::wire::decode_as<dvs::DVSignature>(dvs::Bytes(sim.out.begin(), sim.out.end())),
            (dvs::DVSignature{8, 7, 1, 8, 8}));
}

TEST_F(CliTest, TamperedSignatureRejected) {
  toy_setup();
  const dvs::Bytes tampered = dvs::wire::encode(dvs::DVSignature{16, 6, 3, 3, 8});
  {
    std::ofstream f(path("bad"), std::ios::binary);
    f << dvs::armor::wrap(dvs::wire::Kind::udvs, tampered);
  }
  auto r = run(with_stub({"dverify", "--params", path("params"), "--signer", path("a.pub"), "--key", path("b.sec"),
                          "--in", path("bad")}));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "REJECT\n");
}

TEST_F(CliTest, ExpectMessageMismatch) {
  toy_setup();
  ASSERT_EQ(run(with_stub({"sign", "--scheme", "pv", "--params", path("params"), "--key", path("a.sec"), "--residue",
                           "7", "--seed", "s", "--out", path("omega")}))
                .code,
            0);
  auto ok = run(with_stub({"verify", "--params", path("params"), "--signer", path("a.pub"), "--in", path("omega"),
                           "--expect-residue", "7"}));
  EXPECT_EQ(ok.code, 0);
  auto bad = run(with_stub({"verify", "--params", path("params"), "--signer", path("a.pub"), "--in", path("omega"),
                            "--expect-residue", "8"}));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("REJECT"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  toy_setup();
  EXPECT_EQ(run({"sign", "--scheme", "bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  // stub hash without the opt-in
  EXPECT_EQ(run({"sign", "--scheme", "pv", "--params", path("params"), "--key", path("a.sec"), "--residue", "7",
                 "--hash", "stub", "--out", path("x")})
                .code,
            2);
  // payload on a toy group
  EXPECT_EQ(run(with_stub({"sign", "--scheme", "pv", "--params", path("params"), "--key", path("a.sec"),
                           "--message", "41", "--out", path("x")}))
                .code,
            2);
  // wrong nonce count
  EXPECT_EQ(run(with_stub({"sign", "--scheme", "pv", "--params", path("params"), "--key", path("a.sec"),
                           "--residue", "7", "--nonces", "1", "--out", path("x")}))
                .code,
            2);
  EXPECT_EQ(run({"keygen", "--params", path("params"), "--out", path("x")}).code, 2);
}

TEST_F(CliTest, MalformedInputs) {
  toy_setup();
  {
    std::ofstream f(path("garbage"), std::ios::binary);
    f << "\x01\x10\x00";
  }
  EXPECT_EQ(run({"params", "check", "--params", path("garbage")}).code, 3);
  // a key file where a signature is expected
  EXPECT_EQ(run(with_stub({"dverify", "--params", path("params"), "--signer", path("a.pub"), "--key", path("b.sec"),
                           "--in", path("a.pub")}))
                .code,
            3);
  // signer key given as params
  EXPECT_EQ(run(with_stub({"verify", "--params", path("a.pub"), "--signer", path("a.pub"), "--in", path("a.pub")}))
                .code,
            3);
}

TEST_F(CliTest, ParamsCheck) {
  toy_setup();
  auto r = run({"params", "check", "--params", path("params")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("valid"), std::string::npos);

  std::ofstream(path("bad"), std::ios::binary)
      << dvs::armor::wrap(dvs::wire::Kind::params, dvs::wire::encode(dvs::GroupParams{23, 11, 1}));
  r = run({"params", "check", "--params", path("bad")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("generator is identity"), std::string::npos);
}

TEST_F(CliTest, SeededRunsAreByteIdentical) {
  ASSERT_EQ(run({"params", "gen", "--q-bits", "64", "--p-bits", "256", "--seed", "fixed", "--out", path("p1")}).code,
            0);
  ASSERT_EQ(run({"params", "gen", "--q-bits", "64", "--p-bits", "256", "--seed", "fixed", "--out", path("p2")}).code,
            0);
  EXPECT_EQ(slurp(path("p1")), slurp(path("p2")));

  for (const char* tag : {"1", "2"}) {
    const std::string t(tag);
    ASSERT_EQ(run({"keygen", "--params", path("p1"), "--seed", "a", "--out", path("a.sec" + t), "--public-out",
                   path("a.pub" + t)})
                  .code,
              0);
    ASSERT_EQ(run({"sign", "--scheme", "pv", "--params", path("p1"), "--key", path("a.sec" + t), "--message",
                   "68656c6c6f", "--seed", "z", "--out", path("o" + t)})
                  .code,
              0);
  }
  EXPECT_EQ(slurp(path("a.sec1")), slurp(path("a.sec2")));
  EXPECT_EQ(slurp(path("o1")), slurp(path("o2")));

  auto r = run({"verify", "--params", path("p1"), "--signer", path("a.pub1"), "--in", path("o1")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "ACCEPT\npayload 68656c6c6f\n");
}

TEST_F(CliTest, OracleSubcommand) {
  auto r = run({"oracle", "--scheme", "udvs"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("real 1210"), std::string::npos);
  EXPECT_NE(r.out.find("verified simulated 1210/1210"), std::string::npos);
  EXPECT_NE(r.out.find("indistinguishable yes"), std::string::npos);
  EXPECT_EQ(run({"oracle", "--scheme", "pv"}).code, 2);
}
