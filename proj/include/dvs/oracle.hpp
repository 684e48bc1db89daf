#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dvs/context.hpp"
#include "dvs/error.hpp"
#include "dvs/keys.hpp"
#include "dvs/lee_chang.hpp"
#include "dvs/pv.hpp"
#include "dvs/saeednia.hpp"
#include "dvs/signatures.hpp"
#include "dvs/udvs.hpp"

// Exhaustive enumeration over toy groups. Every legal choice of signer (or
// simulator) randomness is run once with the stub hash and the outputs are
// collected as a multiset, so distribution claims become exact equalities.
namespace dvs::oracle {

inline constexpr long kMaxEnumerableOrder = 64;

struct SignatureMultiset {
  SchemeTag scheme = SchemeTag::saeednia;
  std::map<std::vector<Int>, std::size_t> counts;
  std::size_t total = 0;
  /// Randomness choices dropped by conditioning (Saeednia r = 0).
  std::size_t excluded = 0;

  void add(std::vector<Int> tuple) {
    ++counts[std::move(tuple)];
    ++total;
  }

  void merge(const SignatureMultiset& other) {
    for (const auto& [tuple, n] : other.counts) counts[tuple] += n;
    total += other.total;
    excluded += other.excluded;
  }
};

struct Parties {
  KeyPair signer;
  KeyPair verifier;
};

struct IndistinguishabilityReport {
  bool identical = false;
  std::vector<std::string> differences;  // first 10 only
};

namespace detail {

inline Context toy_context(const GroupParams& gp) {
  if (gp.q > kMaxEnumerableOrder) {
    throw Error(ErrorCode::group_too_large, "q = " + gp.q.get_str() + " exceeds enumeration guard");
  }
  return Context::toy(gp);
}

inline std::string format_tuple(const std::vector<Int>& tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += tuple[i].get_str();
  }
  return s + ")";
}

/// Runs body(first, into) for first in [lo, q) split over `workers` threads,
/// then merges in a fixed order. std::map keeps the merged result independent
/// of how the range was split.
inline SignatureMultiset partitioned(SchemeTag tag, long lo, long q, unsigned workers,
                                     const std::function<void(long, SignatureMultiset&)>& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(q - lo)));
  std::vector<SignatureMultiset> parts(workers, SignatureMultiset{tag, {}, 0, 0});
  auto run = [&](unsigned w) {
    for (long first = lo + static_cast<long>(w); first < q; first += static_cast<long>(workers)) {
      body(first, parts[w]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  SignatureMultiset out{tag, {}, 0, 0};
  for (const auto& part : parts) out.merge(part);
  return out;
}

}  // namespace detail

/// All signer outputs for message residue m. Saeednia: (k, t) in Z_q x Z_q*,
/// r = 0 outputs counted in `excluded`. Lee-Chang / PV: (k1, k2) in Z_q* x Z_q.
/// UDVS: (k1, k2, d) in Z_q* x Z_q x Z_q through PV signing and designation.
inline SignatureMultiset enumerate_real(const GroupParams& gp, const Parties& keys, const Int& m,
                                        SchemeTag scheme, unsigned workers = 1) {
  const Context ctx = detail::toy_context(gp);
  const long q = gp.q.get_si();
  const Message msg = raw_message(m, gp);
  const auto xa = keys.signer.secret_key();
  const auto ya = keys.signer.public_key();
  const auto yb = keys.verifier.public_key();

  switch (scheme) {
    case SchemeTag::saeednia:
      return detail::partitioned(scheme, 0, q, workers, [&](long k, SignatureMultiset& out) {
        for (long t = 1; t < q; ++t) {
          auto sig = saeednia::compute_signature(ctx, xa, yb, msg, {Int(k), Int(t)});
          if (sig.r == 0) {
            ++out.excluded;
          } else {
            out.add(sig.fields());
          }
        }
      });
    case SchemeTag::lee_chang:
      return detail::partitioned(scheme, 1, q, workers, [&](long k1, SignatureMultiset& out) {
        for (long k2 = 0; k2 < q; ++k2) out.add(lee_chang::sign(ctx, xa, yb, msg, {Int(k1), Int(k2)}).fields());
      });
    case SchemeTag::pv:
      return detail::partitioned(scheme, 1, q, workers, [&](long k1, SignatureMultiset& out) {
        for (long k2 = 0; k2 < q; ++k2) out.add(pv::sign(ctx, xa, msg, {Int(k1), Int(k2)}).fields());
      });
    case SchemeTag::udvs:
      return detail::partitioned(scheme, 1, q, workers, [&](long k1, SignatureMultiset& out) {
        for (long k2 = 0; k2 < q; ++k2) {
          const auto omega = pv::sign(ctx, xa, msg, {Int(k1), Int(k2)});
          for (long d = 0; d < q; ++d) out.add(udvs::designate(ctx, ya, yb, omega, Int(d)).fields());
        }
      });
  }
  throw Error(ErrorCode::unsupported, "unknown scheme");
}

/// All designated-verifier simulator outputs. PV has no simulator.
inline SignatureMultiset enumerate_simulated(const GroupParams& gp, const Parties& keys, const Int& m,
                                             SchemeTag scheme, unsigned workers = 1) {
  const Context ctx = detail::toy_context(gp);
  const long q = gp.q.get_si();
  const Message msg = raw_message(m, gp);
  const auto ya = keys.signer.public_key();
  const auto xb = keys.verifier.secret_key();

  switch (scheme) {
    case SchemeTag::saeednia:
      return detail::partitioned(scheme, 0, q, workers, [&](long s1, SignatureMultiset& out) {
        for (long r1 = 1; r1 < q; ++r1) {
          try {
            out.add(saeednia::simulate(ctx, ya, xb, msg, {Int(s1), Int(r1)}).fields());
          } catch (const Error& e) {
            if (e.code() != ErrorCode::degenerate_hash) throw;
            ++out.excluded;
          }
        }
      });
    case SchemeTag::lee_chang:
      return detail::partitioned(scheme, 1, q, workers, [&](long w1, SignatureMultiset& out) {
        for (long w2 = 0; w2 < q; ++w2) out.add(lee_chang::simulate(ctx, ya, xb, msg, {Int(w1), Int(w2)}).fields());
      });
    case SchemeTag::udvs:
      return detail::partitioned(scheme, 1, q, workers, [&](long w1, SignatureMultiset& out) {
        for (long w2 = 0; w2 < q; ++w2) {
          for (long d = 0; d < q; ++d) {
            out.add(udvs::simulate(ctx, ya, xb, msg, {Int(w1), Int(w2), Int(d)}).fields());
          }
        }
      });
    case SchemeTag::pv:
      break;
  }
  throw Error(ErrorCode::unsupported, "no transcript simulator for scheme " + std::string(to_string(scheme)));
}

inline IndistinguishabilityReport check_indistinguishable(const SignatureMultiset& a, const SignatureMultiset& b) {
  if (a.scheme != b.scheme) {
    throw Error(ErrorCode::scheme_mismatch,
                std::string(to_string(a.scheme)) + " vs " + std::string(to_string(b.scheme)));
  }
  IndistinguishabilityReport report;
  auto note = [&](const std::vector<Int>& tuple, std::size_t na, std::size_t nb) {
    if (report.differences.size() < 10) {
      report.differences.push_back(detail::format_tuple(tuple) + " " + std::to_string(na) + " vs " +
                                   std::to_string(nb));
    }
  };
  bool identical = a.total == b.total;
  auto ia = a.counts.begin();
  auto ib = b.counts.begin();
  while (ia != a.counts.end() || ib != b.counts.end()) {
    if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
      note(ia->first, ia->second, 0);
      identical = false;
      ++ia;
    } else if (ia == a.counts.end() || ib->first < ia->first) {
      note(ib->first, 0, ib->second);
      identical = false;
      ++ib;
    } else {
      if (ia->second != ib->second) {
        note(ia->first, ia->second, ib->second);
        identical = false;
      }
      ++ia;
      ++ib;
    }
  }
  report.identical = identical;
  return report;
}

inline std::string format_report(const SignatureMultiset& real, const SignatureMultiset& simulated,
                                 const IndistinguishabilityReport& report) {
  std::ostringstream os;
  os << "scheme " << to_string(real.scheme) << "\n";
  os << "real " << real.total << " excluded " << real.excluded << " distinct " << real.counts.size() << "\n";
  os << "simulated " << simulated.total << " excluded " << simulated.excluded << " distinct "
     << simulated.counts.size() << "\n";
  for (const auto& d : report.differences) os << "diff " << d << "\n";
  os << "indistinguishable " << (report.identical ? "yes" : "no") << "\n";
  return os.str();
}

/// Weighted count of multiset tuples accepted by the designated verifier
/// (or, for PV, by public verification) for message residue m.
inline std::size_t count_verifying(const GroupParams& gp, const Parties& keys, const Int& m,
                                   const SignatureMultiset& set) {
  const Context ctx = detail::toy_context(gp);
  const Message msg = raw_message(m, gp);
  const auto ya = keys.signer.public_key();
  const auto xb = keys.verifier.secret_key();
  std::size_t ok = 0;
  for (const auto& [f, n] : set.counts) {
    bool accepted = false;
    switch (set.scheme) {
      case SchemeTag::saeednia:
        accepted = saeednia::verify(ctx, ya, xb, msg, {f.at(0), f.at(1), f.at(2)});
        break;
      case SchemeTag::lee_chang: {
        auto o = lee_chang::open(ctx, ya, xb, {f.at(0), f.at(1), f.at(2), f.at(3)});
        accepted = o.hash_ok && o.m == m;
        break;
      }
      case SchemeTag::pv:
        accepted = pv::matches(ctx, ya, {f.at(0), f.at(1), f.at(2), f.at(3)}, msg);
        break;
      case SchemeTag::udvs: {
        auto o = udvs::open(ctx, ya, xb, {f.at(0), f.at(1), f.at(2), f.at(3), f.at(4)});
        accepted = o.hash_ok && o.m == m;
        break;
      }
    }
    if (accepted) ok += n;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// Forgery and confidentiality measurements.

struct AcceptanceStats {
  std::size_t trials = 0;
  std::size_t accepted = 0;
  double rate() const { return trials ? static_cast<double>(accepted) / static_cast<double>(trials) : 0.0; }
};

/// Verifies `trials` tuples drawn uniformly over each component's range
/// (t from the order-q subgroup, c/w/e from Z_p*, r/s from Z_q, Saeednia t
/// from Z_q*) with the honest keys. Nothing here knows a secret of the signer.
inline AcceptanceStats random_forgery_trials(const Context& ctx, const Parties& keys, const Message& msg,
                                             SchemeTag scheme, std::size_t trials, RandomSource& rng) {
  const auto& gp = ctx.group;
  const auto ya = keys.signer.public_key();
  const auto xb = keys.verifier.secret_key();
  auto zq = [&] { return sample_uniform(gp.q, false, rng); };
  auto zp_star = [&] { return sample_uniform(gp.p, true, rng); };
  auto subgroup = [&] { return g_pow(gp, sample_uniform(gp.q, true, rng)); };

  AcceptanceStats stats;
  for (std::size_t i = 0; i < trials; ++i) {
    bool ok = false;
    switch (scheme) {
      case SchemeTag::saeednia: {
        SaeedniaSignature sig{zq(), zq(), sample_uniform(gp.q, true, rng)};
        ok = saeednia::verify(ctx, ya, xb, msg, sig);
        break;
      }
      case SchemeTag::lee_chang: {
        RecoverySignature sig{subgroup(), zp_star(), zq(), zq()};
        auto o = lee_chang::open(ctx, ya, xb, sig);
        ok = o.hash_ok && ctx.decodes(o.m);
        break;
      }
      case SchemeTag::pv: {
        PVSignature sig{subgroup(), zp_star(), zq(), zq()};
        auto o = pv::open(ctx, ya, sig);
        ok = o.hash_ok && ctx.decodes(o.m);
        break;
      }
      case SchemeTag::udvs: {
        DVSignature sig{subgroup(), zp_star(), zq(), zq(), zp_star()};
        auto o = udvs::open(ctx, ya, xb, sig);
        ok = o.hash_ok && ctx.decodes(o.m);
        break;
      }
    }
    ++stats.trials;
    if (ok) ++stats.accepted;
  }
  return stats;
}

struct ConfidentialityStats {
  std::size_t evaluations = 0;
  std::size_t true_message = 0;  // recovered residue equals the signed m
  std::size_t hash_passes = 0;   // full check accepted
};

/// Opens every enumerated real signature under every wrong secret
/// x in Z_q* \ {x_B}. Saeednia has no recovery, so only hash passes count.
inline ConfidentialityStats confidentiality_scan(const GroupParams& gp, const Parties& keys, const Int& m,
                                                 SchemeTag scheme) {
  const Context ctx = detail::toy_context(gp);
  const long q = gp.q.get_si();
  const Message msg = raw_message(m, gp);
  const auto xa = keys.signer.secret_key();
  const auto ya = keys.signer.public_key();
  const auto yb = keys.verifier.public_key();

  ConfidentialityStats stats;
  auto wrong_keys = [&](auto&& fn) {
    for (long x = 1; x < q; ++x) {
      if (Int(x) == keys.verifier.x) continue;
      ++stats.evaluations;
      fn(SecretKey{Int(x)});
    }
  };

  switch (scheme) {
    case SchemeTag::saeednia:
      for (long k = 0; k < q; ++k) {
        for (long t = 1; t < q; ++t) {
          auto sig = saeednia::compute_signature(ctx, xa, yb, msg, {Int(k), Int(t)});
          wrong_keys([&](const SecretKey& x) { stats.hash_passes += saeednia::verify(ctx, ya, x, msg, sig); });
        }
      }
      return stats;
    case SchemeTag::lee_chang:
      for (long k1 = 1; k1 < q; ++k1) {
        for (long k2 = 0; k2 < q; ++k2) {
          auto sig = lee_chang::sign(ctx, xa, yb, msg, {Int(k1), Int(k2)});
          wrong_keys([&](const SecretKey& x) {
            auto o = lee_chang::open(ctx, ya, x, sig);
            stats.true_message += o.m == m;
            stats.hash_passes += o.hash_ok;
          });
        }
      }
      return stats;
    case SchemeTag::udvs:
      for (long k1 = 1; k1 < q; ++k1) {
        for (long k2 = 0; k2 < q; ++k2) {
          const auto omega = pv::sign(ctx, xa, msg, {Int(k1), Int(k2)});
          for (long d = 0; d < q; ++d) {
            auto sig = udvs::designate(ctx, ya, yb, omega, Int(d));
            wrong_keys([&](const SecretKey& x) {
              auto o = udvs::open(ctx, ya, x, sig);
              stats.true_message += o.m == m;
              stats.hash_passes += o.hash_ok;
            });
          }
        }
      }
      return stats;
    case SchemeTag::pv:
      break;
  }
  throw Error(ErrorCode::unsupported, "PV signatures are public by construction");
}

}  // namespace dvs::oracle
