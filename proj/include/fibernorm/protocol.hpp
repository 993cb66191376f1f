#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fibernorm/fibration_db.hpp"
#include "fibernorm/mapping_torus.hpp"

namespace fibernorm {

// l_max = max_s |psi^N(s)| over the fiber basis, attained at s_max (first
// generator in basis order on ties).
struct SharedKey {
  std::uint64_t l_max = 0;
  std::string s_max;
  std::uint64_t N = 0;

  bool operator==(const SharedKey&) const = default;
  // Decimal l_max; the key material. No KDF is applied.
  std::string key_string() const { return std::to_string(l_max); }
};

SharedKey lmax(const FibrationEntry& entry, std::uint64_t n, const Budget& budget = {});

// What travels over the public channel.
struct ChannelMessage {
  std::vector<Word> elements;  // raw words over {t,x,y,z}
};

// Alice's side of a public-key message; the decoy count stays private.
struct PreparedMessage {
  ChannelMessage message;
  std::size_t decoy_count = 0;
};

struct PrepareOptions {
  double blowup = 2.0;  // 1.0 sends literal conjugates
};

// The fiber generators conjugated N times by the stable letter (obfuscated),
// plus decoy_total - rank seeded-random reduced words of length in
// [2N, 4N] with nonzero phi value, shuffled. Throws DomainError when
// decoy_total <= rank, N == 0, or the entry lacks an embedding.
PreparedMessage alice_prepare(const FibrationEntry& entry, std::uint64_t n,
                              std::size_t decoy_total, std::uint64_t seed,
                              const PrepareOptions& options = {},
                              const MappingTorus& torus = MappingTorus::canonical(),
                              const Budget& budget = {});

// Every n in 1..n_max for which each conjugated fiber generator equals
// some member of ker phi in the message.
std::vector<std::uint64_t> matching_exponents(const FibrationEntry& entry,
                                              const ChannelMessage& msg, std::uint64_t n_max,
                                              const MappingTorus& torus = MappingTorus::canonical(),
                                              const Budget& budget = {});

// Bob: filters members of ker phi, finds the first matching n, and returns
// lmax(entry, n). Throws RecoveryFailure when no n <= n_max matches.
SharedKey bob_recover(const FibrationEntry& entry, const ChannelMessage& msg,
                      std::uint64_t n_max = 16,
                      const MappingTorus& torus = MappingTorus::canonical(),
                      const Budget& budget = {});

enum class Scheme { Symmetric, Public };

// Public channel contents only.
struct Transcript {
  Scheme scheme = Scheme::Symmetric;
  std::optional<std::uint64_t> N;
  std::optional<std::vector<std::string>> elements;

  bool operator==(const Transcript&) const = default;
};

nlohmann::json to_json(const Transcript& t);
Transcript transcript_from_json(const nlohmann::json& j);
void transcript_write(const Transcript& t, const std::filesystem::path& path);
Transcript transcript_read(const std::filesystem::path& path);
// Sum of letter counts of the transmitted elements (0 for symmetric).
std::size_t transcript_letters(const Transcript& t,
                               const MappingTorus& torus = MappingTorus::canonical());
ChannelMessage message_from_transcript(const Transcript& t,
                                       const MappingTorus& torus = MappingTorus::canonical());

struct SymmetricSession {
  SharedKey alice;
  SharedKey bob;
  Transcript transcript;
};

// Alice announces N in the clear; both sides compute lmax with the
// privately agreed entry.
SymmetricSession symmetric_session(const FibrationEntry& entry, std::uint64_t n,
                                   const Budget& budget = {});

// Stand-in for the platform key exchange: yields the shared secret g.
using PlatformOracle = std::function<PlatformSecret()>;
PlatformOracle fixed_length_oracle(std::int64_t length, std::string token = "g");

struct PublicSession {
  CohomologyClass phi;
  std::uint64_t denominator = 0;
  SharedKey alice;
  SharedKey bob;
  PreparedMessage prepared;
  Transcript transcript;
};

struct PublicSessionOptions {
  std::uint64_t n = 1;
  std::size_t decoy_total = 50;
  std::uint64_t seed = 0;
  std::uint64_t n_max = 16;
  PrepareOptions prepare;
  Budget budget;
};

// Steps 2-7: keymap, Alice's message, Bob's recovery. Throws DomainError
// when the database holds no full fiber data for f(g).
PublicSession public_session(const FibrationDatabase& db, const PlatformOracle& oracle,
                             const PublicSessionOptions& options);

// Private key report (never part of a transcript).
nlohmann::json key_report(const SharedKey& key);

}  // namespace fibernorm
