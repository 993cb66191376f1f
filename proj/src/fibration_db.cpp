#include "fibernorm/fibration_db.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "fibernorm/teichmuller.hpp"

namespace fibernorm {

namespace {

[[noreturn]] void invalid(const FibrationEntry& e, const std::string& what) {
  throw FormatError("entry " + to_string(e.phi) + ": " + what);
}

Word substitute_embedding(const Word& fiber_word, const std::vector<Word>& embedding) {
  Word out;
  for (Letter l : fiber_word.letters()) {
    const Word& img = embedding.at(l.generator());
    out.append(l.sign() > 0 ? img : inverse(img));
  }
  return out;
}

}  // namespace

void verify_entry(const FibrationEntry& entry, const MappingTorus& torus) {
  if (!is_fibered(entry.phi)) {
    invalid(entry, "class is not fibered");
  }
  if (!in_fibered_cone(entry.phi)) {
    invalid(entry, "class is outside the cone over the fibered face");
  }
  if (entry.rank != fiber_rank(entry.phi)) {
    invalid(entry, "rank " + std::to_string(entry.rank) + " != ||phi||_T + 1 = " +
                       std::to_string(fiber_rank(entry.phi)));
  }
  const double expected = stretch_factor(entry.phi);
  if (!(std::fabs(entry.stretch - expected) <= 1e-6)) {
    invalid(entry, "stretch factor mismatch");
  }
  if (!entry.full_data) {
    return;
  }
  const FiberData& data = *entry.full_data;
  if (static_cast<std::int64_t>(data.generators().size()) != entry.rank) {
    invalid(entry, "number of fiber generators differs from rank");
  }
  if (evaluate_class(entry.phi, data.stable_letter) != 1) {
    invalid(entry, "stable letter does not evaluate to 1");
  }
  if (!data.embedding) {
    return;
  }
  const auto& emb = *data.embedding;
  if (emb.size() != data.generators().size()) {
    invalid(entry, "embedding must list every generator");
  }
  for (std::size_t g = 0; g < emb.size(); ++g) {
    if (evaluate_class(entry.phi, emb[g]) != 0) {
      invalid(entry, "generator '" + data.generators().name(g) + "' is not in ker phi");
    }
    Word lhs = conjugate_by(emb[g], data.stable_letter, 1);
    Word rhs = substitute_embedding(data.automorphism.image(g), emb);
    if (!torus.equal(lhs, rhs)) {
      invalid(entry, "stable letter does not act by the monodromy on '" +
                         data.generators().name(g) + "'");
    }
  }
}

FibrationEntry metadata_entry(CohomologyClass phi) {
  return FibrationEntry{phi, fiber_rank(phi), stretch_factor(phi), std::nullopt};
}

FibrationEntry canonical_entry() {
  const MappingTorus& torus = MappingTorus::canonical();
  FibrationEntry e = metadata_entry({1, 0});
  std::vector<Word> embedding;
  for (std::size_t g = 0; g < torus.fiber().size(); ++g) {
    embedding.push_back(torus.fiber_to_ambient(Word::generator(g)));
  }
  e.full_data = FiberData{torus.monodromy(), Word{Letter(MappingTorus::kStableLetter, 1)},
                          std::move(embedding)};
  return e;
}

FibrationDatabase::FibrationDatabase(std::vector<FibrationEntry> entries)
    : entries_(std::move(entries)) {
  std::map<CohomologyClass, bool> seen;
  for (const auto& e : entries_) {
    if (seen[e.phi]) {
      throw FormatError("duplicate entry " + to_string(e.phi));
    }
    seen[e.phi] = true;
  }
}

const FibrationEntry* FibrationDatabase::lookup(CohomologyClass phi) const noexcept {
  for (const auto& e : entries_) {
    if (e.phi == phi) {
      return &e;
    }
  }
  return nullptr;
}

FibrationDatabase generate_metadata_db(std::int64_t max_a) {
  if (max_a < 1) {
    throw DomainError("max_a must be at least 1");
  }
  std::vector<FibrationEntry> entries;
  for (std::int64_t a = 1; a <= max_a; ++a) {
    for (std::int64_t b = -(a - 1); b <= a - 1; ++b) {
      CohomologyClass phi{a, b};
      if (!is_primitive(phi)) {
        continue;
      }
      entries.push_back(phi == CohomologyClass{1, 0} ? canonical_entry() : metadata_entry(phi));
    }
  }
  return FibrationDatabase(std::move(entries));
}

FibrationDatabase builtin_db() { return FibrationDatabase({canonical_entry()}); }

namespace {

using nlohmann::json;

json images_json(const Alphabet& alphabet, const std::vector<Word>& images) {
  json out = json::object();
  for (std::size_t g = 0; g < alphabet.size(); ++g) {
    out[alphabet.name(g)] = format_word(images[g], alphabet);
  }
  return out;
}

std::vector<Word> images_from_json(const Alphabet& alphabet, const json& j) {
  std::vector<Word> out;
  for (const auto& name : alphabet.names()) {
    out.push_back(parse_word(j.at(name).get<std::string>(), alphabet));
  }
  return out;
}

json entry_json(const FibrationEntry& e, const MappingTorus& torus) {
  json j{{"phi", {e.phi.a, e.phi.b}}, {"rank", e.rank}, {"stretch", e.stretch}};
  if (!e.full_data) {
    j["full_data"] = nullptr;
    return j;
  }
  const FiberData& d = *e.full_data;
  const Alphabet& gens = d.generators();
  json fd{{"generators", gens.names()},
          {"automorphism", images_json(gens, d.automorphism.images())},
          {"stable_letter", torus.format(d.stable_letter)}};
  if (d.automorphism.has_inverse()) {
    fd["inverse"] = images_json(gens, d.automorphism.inverse_images());
  }
  if (d.embedding) {
    json emb = json::object();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      emb[gens.name(g)] = torus.format((*d.embedding)[g]);
    }
    fd["embedding"] = emb;
  }
  j["full_data"] = fd;
  return j;
}

FibrationEntry entry_from_json(const json& j, const MappingTorus& torus) {
  FibrationEntry e;
  const auto& phi = j.at("phi");
  if (!phi.is_array() || phi.size() != 2) {
    throw FormatError("phi must be a pair [a, b]");
  }
  e.phi = {phi[0].get<std::int64_t>(), phi[1].get<std::int64_t>()};
  e.rank = j.at("rank").get<std::int64_t>();
  e.stretch = j.at("stretch").get<double>();
  const auto& fd = j.at("full_data");
  if (!fd.is_null()) {
    Alphabet gens(fd.at("generators").get<std::vector<std::string>>());
    auto images = images_from_json(gens, fd.at("automorphism"));
    FreeAutomorphism aut = fd.contains("inverse")
                               ? FreeAutomorphism(gens, images, images_from_json(gens, fd.at("inverse")))
                               : FreeAutomorphism(gens, images);
    FiberData data{std::move(aut), torus.parse(fd.at("stable_letter").get<std::string>()),
                   std::nullopt};
    if (fd.contains("embedding") && !fd.at("embedding").is_null()) {
      std::vector<Word> emb;
      for (const auto& name : gens.names()) {
        emb.push_back(torus.parse(fd.at("embedding").at(name).get<std::string>()));
      }
      data.embedding = std::move(emb);
    }
    e.full_data = std::move(data);
  }
  return e;
}

}  // namespace

nlohmann::json to_json(const FibrationDatabase& db) {
  const MappingTorus& torus = MappingTorus::canonical();
  json entries = json::array();
  for (const auto& e : db.entries()) {
    entries.push_back(entry_json(e, torus));
  }
  return {{"version", FibrationDatabase::kVersion},
          {"manifold", FibrationDatabase::kManifold},
          {"entries", entries}};
}

FibrationDatabase database_from_json(const nlohmann::json& j) {
  const MappingTorus& torus = MappingTorus::canonical();
  std::vector<FibrationEntry> entries;
  try {
    if (j.at("version").get<int>() != FibrationDatabase::kVersion) {
      throw FormatError("unsupported database version " + j.at("version").dump());
    }
    if (j.at("manifold").get<std::string>() != FibrationDatabase::kManifold) {
      throw FormatError("database is for manifold '" + j.at("manifold").get<std::string>() + "'");
    }
    for (const auto& ej : j.at("entries")) {
      entries.push_back(entry_from_json(ej, torus));
    }
  } catch (const json::exception& ex) {
    throw FormatError(std::string("malformed database: ") + ex.what());
  } catch (const FormatError&) {
    throw;
  } catch (const Error& ex) {
    throw FormatError(std::string("malformed database: ") + ex.what());
  }
  for (const auto& e : entries) {
    verify_entry(e, torus);
  }
  return FibrationDatabase(std::move(entries));
}

void save(const FibrationDatabase& db, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open '" + path.string() + "' for writing");
  }
  out << to_json(db).dump(1) << '\n';
}

FibrationDatabase load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open '" + path.string() + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError("'" + path.string() + "' is not valid JSON: " + ex.what());
  }
  return database_from_json(j);
}

KeymapResult keymap(std::int64_t secret_length) {
  if (secret_length < 1) {
    throw DomainError("keymap needs |g| >= 1, got " + std::to_string(secret_length));
  }
  // Second coordinate (|g|-1) / (2(|g|+1)) in lowest terms.
  const std::int64_t num = secret_length - 1;
  const std::int64_t den = 2 * (secret_length + 1);
  const std::int64_t g = std::gcd(num, den);
  const std::int64_t reduced_den = den / g;
  const std::int64_t d = std::lcm<std::int64_t>(2, reduced_den);
  return {{d / 2, d / reduced_den * (num / g)}, d};
}

}  // namespace fibernorm
