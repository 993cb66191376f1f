#include "fibernorm/protocol.hpp"

#include <fstream>
#include <set>

#include "fibernorm/random.hpp"

namespace fibernorm {

namespace {

const FiberData& require_full_data(const FibrationEntry& entry) {
  if (!entry.full_data) {
    throw DomainError("entry " + to_string(entry.phi) + " has no fiber presentation");
  }
  return *entry.full_data;
}

// Conjugates t_phi^-n s t_phi^n of every fiber generator, in normal form,
// for n = 1, 2, ...; calls visit(n, conjugates) until it returns false.
template <typename Visit>
void walk_conjugates(const FiberData& data, const MappingTorus& torus, std::uint64_t n_max,
                     const Budget& budget, Visit&& visit) {
  if (!data.embedding) {
    throw DomainError("fiber generators have no expression in pi_1(M)");
  }
  const TorusElement stable = torus.normal_form(data.stable_letter, budget);
  const TorusElement stable_inv = torus.inverse(stable, budget);
  std::vector<TorusElement> cur;
  for (const Word& e : *data.embedding) {
    cur.push_back(torus.normal_form(e, budget));
  }
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (auto& c : cur) {
      c = torus.multiply(torus.multiply(stable_inv, c, budget), stable, budget);
    }
    if (!visit(n, cur)) {
      return;
    }
  }
}

std::set<TorusElement> member_forms(const FibrationEntry& entry, const ChannelMessage& msg,
                                    const MappingTorus& torus, const Budget& budget) {
  std::set<TorusElement> out;
  for (const Word& w : msg.elements) {
    if (is_member(entry.phi, w)) {
      out.insert(torus.normal_form(w, budget));
    }
  }
  return out;
}

std::vector<std::uint64_t> search(const FibrationEntry& entry, const ChannelMessage& msg,
                                  std::uint64_t n_max, bool first_only, const MappingTorus& torus,
                                  const Budget& budget) {
  const FiberData& data = require_full_data(entry);
  const auto members = member_forms(entry, msg, torus, budget);
  std::vector<std::uint64_t> found;
  if (members.size() < data.generators().size()) {
    return found;
  }
  walk_conjugates(data, torus, n_max, budget,
                  [&](std::uint64_t n, const std::vector<TorusElement>& conj) {
                    bool all = true;
                    for (const auto& c : conj) {
                      if (!members.count(c)) {
                        all = false;
                        break;
                      }
                    }
                    if (all) {
                      found.push_back(n);
                    }
                    return !(all && first_only);
                  });
  return found;
}

Word random_reduced_word(SeededRng& rng, std::size_t alphabet_size, std::size_t len) {
  std::vector<Letter> out;
  out.reserve(len);
  while (out.size() < len) {
    Letter l(static_cast<std::size_t>(rng.below(alphabet_size)), rng.coin() ? 1 : -1);
    if (!out.empty() && out.back().cancels(l)) {
      continue;
    }
    out.push_back(l);
  }
  return Word(std::move(out));
}

}  // namespace

SharedKey lmax(const FibrationEntry& entry, std::uint64_t n, const Budget& budget) {
  const FiberData& data = require_full_data(entry);
  SharedKey key;
  key.N = n;
  const auto& gens = data.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Word w = Word::generator(g);
    for (std::uint64_t i = 0; i < n; ++i) {
      w = apply(data.automorphism, w, budget);
    }
    if (key.s_max.empty() || w.size() > key.l_max) {
      key.l_max = w.size();
      key.s_max = gens.name(g);
    }
  }
  return key;
}

PreparedMessage alice_prepare(const FibrationEntry& entry, std::uint64_t n,
                              std::size_t decoy_total, std::uint64_t seed,
                              const PrepareOptions& options, const MappingTorus& torus,
                              const Budget& budget) {
  const FiberData& data = require_full_data(entry);
  if (!data.embedding) {
    throw DomainError("fiber generators have no expression in pi_1(M)");
  }
  const std::size_t rank = data.generators().size();
  if (decoy_total <= rank) {
    throw DomainError("decoy_total must exceed the fiber rank " + std::to_string(rank));
  }
  if (n == 0) {
    throw DomainError("N must be positive");
  }
  SeededRng rng(seed);
  PreparedMessage out;
  for (const Word& e : *data.embedding) {
    Word conj = conjugate_by(e, data.stable_letter, static_cast<std::int64_t>(n));
    Word sent = torus.obfuscate(conj, rng.next(), options.blowup);
    if (sent.size() > budget.max_letters) {
      throw BudgetExceeded(sent.size(), budget.max_letters);
    }
    out.message.elements.push_back(std::move(sent));
  }
  const auto lo = static_cast<std::int64_t>(2 * n);
  const auto hi = static_cast<std::int64_t>(4 * n);
  while (out.message.elements.size() < decoy_total) {
    auto len = static_cast<std::size_t>(rng.between(lo, hi));
    Word w = random_reduced_word(rng, torus.ambient().size(), len);
    if (evaluate_class(entry.phi, w) != 0) {
      out.message.elements.push_back(std::move(w));
      ++out.decoy_count;
    }
  }
  rng.shuffle(out.message.elements);
  return out;
}

std::vector<std::uint64_t> matching_exponents(const FibrationEntry& entry,
                                              const ChannelMessage& msg, std::uint64_t n_max,
                                              const MappingTorus& torus, const Budget& budget) {
  return search(entry, msg, n_max, false, torus, budget);
}

SharedKey bob_recover(const FibrationEntry& entry, const ChannelMessage& msg, std::uint64_t n_max,
                      const MappingTorus& torus, const Budget& budget) {
  auto found = search(entry, msg, n_max, true, torus, budget);
  if (found.empty()) {
    throw RecoveryFailure("no exponent n <= " + std::to_string(n_max) +
                          " matches the members of the message");
  }
  return lmax(entry, found.front(), budget);
}

nlohmann::json to_json(const Transcript& t) {
  nlohmann::json j;
  j["scheme"] = t.scheme == Scheme::Symmetric ? "symmetric" : "public";
  j["N"] = t.N ? nlohmann::json(*t.N) : nlohmann::json(nullptr);
  j["elements"] = t.elements ? nlohmann::json(*t.elements) : nlohmann::json(nullptr);
  return j;
}

Transcript transcript_from_json(const nlohmann::json& j) {
  try {
    Transcript t;
    const auto scheme = j.at("scheme").get<std::string>();
    if (scheme == "symmetric") {
      t.scheme = Scheme::Symmetric;
    } else if (scheme == "public") {
      t.scheme = Scheme::Public;
    } else {
      throw FormatError("unknown scheme '" + scheme + "'");
    }
    if (!j.at("N").is_null()) {
      t.N = j.at("N").get<std::uint64_t>();
    }
    if (!j.at("elements").is_null()) {
      t.elements = j.at("elements").get<std::vector<std::string>>();
    }
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("malformed transcript: ") + ex.what());
  }
}

void transcript_write(const Transcript& t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open '" + path.string() + "' for writing");
  }
  out << to_json(t).dump() << '\n';
}

Transcript transcript_read(const std::filesystem::path& path) {
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
  return transcript_from_json(j);
}

ChannelMessage message_from_transcript(const Transcript& t, const MappingTorus& torus) {
  ChannelMessage msg;
  if (t.elements) {
    for (const auto& s : *t.elements) {
      msg.elements.push_back(torus.parse(s));
    }
  }
  return msg;
}

std::size_t transcript_letters(const Transcript& t, const MappingTorus& torus) {
  std::size_t total = 0;
  for (const auto& w : message_from_transcript(t, torus).elements) {
    total += w.size();
  }
  return total;
}

SymmetricSession symmetric_session(const FibrationEntry& entry, std::uint64_t n,
                                   const Budget& budget) {
  SymmetricSession s;
  s.transcript = Transcript{Scheme::Symmetric, n, std::nullopt};
  s.alice = lmax(entry, n, budget);
  // Bob reads N off the channel.
  s.bob = lmax(entry, *s.transcript.N, budget);
  return s;
}

PlatformOracle fixed_length_oracle(std::int64_t length, std::string token) {
  return [length, token = std::move(token)] { return PlatformSecret{token, length}; };
}

PublicSession public_session(const FibrationDatabase& db, const PlatformOracle& oracle,
                             const PublicSessionOptions& options) {
  const MappingTorus& torus = MappingTorus::canonical();
  const PlatformSecret secret = oracle();
  const KeymapResult km = keymap(secret);
  const FibrationEntry* entry = db.lookup(km.phi);
  if (entry == nullptr || !entry->full_data) {
    throw DomainError("database has no fiber presentation for f(g) = " + to_string(km.phi));
  }
  PublicSession s;
  s.phi = km.phi;
  s.denominator = static_cast<std::uint64_t>(km.denominator);
  s.alice = lmax(*entry, options.n, options.budget);
  s.prepared = alice_prepare(*entry, options.n, options.decoy_total, options.seed, options.prepare,
                             torus, options.budget);
  std::vector<std::string> sent;
  for (const auto& w : s.prepared.message.elements) {
    sent.push_back(torus.format(w));
  }
  s.transcript = Transcript{Scheme::Public, std::nullopt, std::move(sent)};
  s.bob = bob_recover(*entry, message_from_transcript(s.transcript, torus), options.n_max, torus,
                      options.budget);
  return s;
}

nlohmann::json key_report(const SharedKey& key) {
  return {{"l_max", key.key_string()}, {"s_max", key.s_max}, {"N", key.N}};
}

}  // namespace fibernorm
