#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "fibernorm/protocol.hpp"
#include "fibernorm/teichmuller.hpp"
#include "oracle.hpp"

using namespace fibernorm;

namespace {

const FibrationEntry& canon() {
  static const FibrationEntry e = canonical_entry();
  return e;
}

const MappingTorus& torus() { return MappingTorus::canonical(); }

}  // namespace

TEST_CASE("lmax on the canonical entry") {
  auto k0 = lmax(canon(), 0);
  CHECK(k0.l_max == 1);
  CHECK(k0.s_max == "x");  // all tie at length 1
  auto k1 = lmax(canon(), 1);
  CHECK(k1.l_max == 7);
  CHECK(k1.s_max == "y");
  CHECK(k1.N == 1);
  // psi^2(y) by the string oracle
  auto twice = oracle::apply(oracle::psi(), oracle::apply(oracle::psi(), "y"));
  CHECK(lmax(canon(), 2).l_max == twice.size());
  CHECK(lmax(canon(), 2).l_max == 23);
  CHECK(lmax(canon(), 2).key_string() == "23");
  CHECK_THROWS_AS(lmax(metadata_entry({2, 1}), 1), DomainError);
  CHECK_THROWS_AS(lmax(canon(), 30, Budget{1u << 20}), BudgetExceeded);
}

TEST_CASE("symmetric scheme") {
  auto s1 = symmetric_session(canon(), 1);
  CHECK(s1.alice == s1.bob);
  CHECK(s1.alice.l_max == 7);
  CHECK(symmetric_session(canon(), 0).alice.l_max == 1);

  auto s8 = symmetric_session(canon(), 8);
  CHECK(s8.alice == s8.bob);
  double ratio = static_cast<double>(s8.alice.l_max) / predicted_lmax({1, 0}, 8);
  CHECK(ratio >= 0.1);
  CHECK(ratio <= 10.0);

  auto j = to_json(s8.transcript);
  CHECK(j.dump() == R"({"N":8,"elements":null,"scheme":"symmetric"})");
}

TEST_CASE("alice_prepare message shape") {
  auto p = alice_prepare(canon(), 5, 50, 0);
  CHECK(p.message.elements.size() == 50);
  CHECK(p.decoy_count == 47);
  std::size_t members = 0;
  for (const auto& w : p.message.elements) {
    if (is_member({1, 0}, w)) ++members;
    CHECK(w.is_reduced());
  }
  CHECK(members == 3);

  auto q = alice_prepare(canon(), 5, 4, 1);
  CHECK(q.decoy_count == 1);
  CHECK(q.message.elements.size() == 4);

  // literal conjugates with blowup 1 have length exactly 2N + 1
  auto lit = alice_prepare(canon(), 6, 10, 2, PrepareOptions{1.0});
  for (const auto& w : lit.message.elements) {
    CHECK(w.size() >= 12);
    if (is_member({1, 0}, w)) CHECK(w.size() == 13);
  }

  CHECK_THROWS_AS(alice_prepare(canon(), 5, 3, 0), DomainError);
  CHECK_THROWS_AS(alice_prepare(canon(), 0, 10, 0), DomainError);
  CHECK_THROWS_AS(alice_prepare(metadata_entry({2, 1}), 3, 10, 0), DomainError);

  // deterministic per seed
  CHECK(alice_prepare(canon(), 4, 20, 7).message.elements ==
        alice_prepare(canon(), 4, 20, 7).message.elements);
  CHECK(alice_prepare(canon(), 4, 20, 7).message.elements !=
        alice_prepare(canon(), 4, 20, 8).message.elements);
}

TEST_CASE("bob recovers alice's key") {
  auto p = alice_prepare(canon(), 5, 50, 3);
  auto alice = lmax(canon(), 5);
  auto bob = bob_recover(canon(), p.message);
  CHECK(bob == alice);
  CHECK(bob.N == 5);
  CHECK(matching_exponents(canon(), p.message, 16) == std::vector<std::uint64_t>{5});

  // members removed
  ChannelMessage stripped;
  for (const auto& w : p.message.elements) {
    if (!is_member({1, 0}, w)) stripped.elements.push_back(w);
  }
  CHECK_THROWS_AS(bob_recover(canon(), stripped), RecoveryFailure);
  // search bound below N
  CHECK_THROWS_AS(bob_recover(canon(), p.message, 4), RecoveryFailure);
}

TEST_CASE("round trips over N and decoy counts") {
  for (std::uint64_t n = 1; n <= 6; ++n) {
    for (std::size_t decoys : {10u, 50u}) {
      auto p = alice_prepare(canon(), n, decoys, n * 31 + decoys);
      CHECK(bob_recover(canon(), p.message, 10) == lmax(canon(), n));
    }
  }
}

TEST_CASE("transcripts") {
  auto path = std::filesystem::temp_directory_path() / "fibernorm_transcript.json";
  Transcript sym{Scheme::Symmetric, 9, std::nullopt};
  transcript_write(sym, path);
  CHECK(transcript_read(path) == sym);

  PublicSessionOptions opt;
  opt.n = 4;
  opt.decoy_total = 12;
  opt.seed = 5;
  auto session = public_session(builtin_db(), fixed_length_oracle(1), opt);
  CHECK(session.phi == CohomologyClass{1, 0});
  CHECK(session.alice == session.bob);
  transcript_write(session.transcript, path);
  auto back = transcript_read(path);
  CHECK(back == session.transcript);
  CHECK_FALSE(back.N.has_value());
  REQUIRE(back.elements);
  CHECK(back.elements->size() == 12);

  // only public channel contents
  auto text = to_json(back).dump();
  CHECK(text.find("phi") == std::string::npos);
  CHECK(text.find("l_max") == std::string::npos);
  CHECK(text.find("psi") == std::string::npos);
  CHECK(to_json(back).size() == 3);
  CHECK(transcript_letters(back) > 0);

  std::ofstream(path) << R"({"scheme":"other","N":null,"elements":null})";
  CHECK_THROWS_AS(transcript_read(path), FormatError);
  std::ofstream(path) << "[1,";
  CHECK_THROWS_AS(transcript_read(path), FormatError);
  std::filesystem::remove(path);
}

TEST_CASE("public session needs fiber data for f(g)") {
  PublicSessionOptions opt;
  opt.n = 3;
  CHECK_THROWS_AS(public_session(generate_metadata_db(3), fixed_length_oracle(3), opt),
                  DomainError);
  CHECK_THROWS_AS(public_session(builtin_db(), fixed_length_oracle(0), opt), DomainError);
}

TEST_CASE("key report") {
  auto j = key_report(lmax(canon(), 1));
  CHECK(j["l_max"] == "7");
  CHECK(j["s_max"] == "y");
  CHECK(j["N"] == 1);
}
