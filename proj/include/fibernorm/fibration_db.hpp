#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fibernorm/automorphism.hpp"
#include "fibernorm/mapping_torus.hpp"
#include "fibernorm/norm.hpp"

namespace fibernorm {

// Explicit fiber data for a fibered class: a free basis of the fiber group,
// its monodromy, and a stable letter t_phi in pi_1(M) with
// t_phi^-1 s t_phi = psi_phi(s). `embedding`, when present, expresses each
// basis element as a raw word in pi_1(M); the public-key scheme needs it.
struct FiberData {
  FreeAutomorphism automorphism;
  Word stable_letter;
  std::optional<std::vector<Word>> embedding;

  const Alphabet& generators() const noexcept { return automorphism.alphabet(); }
};

struct FibrationEntry {
  CohomologyClass phi;
  std::int64_t rank = 0;
  double stretch = 0.0;
  std::optional<FiberData> full_data;
};

// Throws FormatError describing the first violated invariant:
//   rank = ||phi||_T + 1, stretch within 1e-6 of the recomputed value,
//   and for full data: |generators| = rank, phi(t_phi) = 1, embedded
//   generators in ker phi and t_phi^-1 s t_phi = psi_phi(s) in pi_1(M).
void verify_entry(const FibrationEntry& entry, const MappingTorus& torus = MappingTorus::canonical());

// A metadata-only entry (rank and stretch computed).
FibrationEntry metadata_entry(CohomologyClass phi);
// (1,0) with fiber <x,y,z>, monodromy psi and stable letter t.
FibrationEntry canonical_entry();

class FibrationDatabase {
 public:
  static constexpr int kVersion = 1;
  static constexpr const char* kManifold = "simplest-pA-braid";

  FibrationDatabase() = default;
  explicit FibrationDatabase(std::vector<FibrationEntry> entries);

  const std::vector<FibrationEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const FibrationEntry* lookup(CohomologyClass phi) const noexcept;

 private:
  std::vector<FibrationEntry> entries_;
};

// All primitive (a,b) with 1 <= a <= max_a and |b| < a, ordered by a then b;
// only the canonical entry carries full data.
FibrationDatabase generate_metadata_db(std::int64_t max_a);
// The canonical entry alone.
FibrationDatabase builtin_db();

nlohmann::json to_json(const FibrationDatabase& db);
// Verifies every entry; throws FormatError.
FibrationDatabase database_from_json(const nlohmann::json& j);
void save(const FibrationDatabase& db, const std::filesystem::path& path);
FibrationDatabase load(const std::filesystem::path& path);

// Shared secret from the platform key exchange; only its normal-form
// length matters here.
struct PlatformSecret {
  std::string token;
  std::int64_t length = 0;
};

struct KeymapResult {
  CohomologyClass phi;
  std::int64_t denominator = 0;  // D(g)
};

// f(g) = D (1/2, |g|/(|g|+1) - 1/2) with D the least positive integer making
// it integral. Throws DomainError for |g| < 1.
KeymapResult keymap(std::int64_t secret_length);
inline KeymapResult keymap(const PlatformSecret& g) { return keymap(g.length); }

}  // namespace fibernorm
