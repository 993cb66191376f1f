#include "fibernorm/mapping_torus.hpp"

#include <algorithm>
#include <cmath>

#include "fibernorm/random.hpp"

namespace fibernorm {

namespace {

Alphabet ambient_for(const Alphabet& fiber) {
  std::vector<std::string> names{"t"};
  for (const auto& n : fiber.names()) {
    if (n == "t") {
      throw AlphabetMismatch("fiber alphabet may not use the stable letter name 't'");
    }
    names.push_back(n);
  }
  return Alphabet(std::move(names));
}

constexpr Letter kT{MappingTorus::kStableLetter, +1};
constexpr Letter kTInv{MappingTorus::kStableLetter, -1};

Letter to_fiber(Letter l) { return Letter(l.generator() - 1, l.sign()); }
Letter to_ambient(Letter l) { return Letter(l.generator() + 1, l.sign()); }

}  // namespace

MappingTorus::MappingTorus(FreeAutomorphism monodromy)
    : monodromy_(std::move(monodromy)), ambient_(ambient_for(monodromy_.alphabet())) {
  if (!monodromy_.has_inverse()) {
    throw InversionUnavailable();
  }
}

const MappingTorus& MappingTorus::canonical() {
  static const MappingTorus torus(simplest_braid_monodromy());
  return torus;
}

Word MappingTorus::fiber_to_ambient(const Word& fiber_word) const {
  std::vector<Letter> out;
  out.reserve(fiber_word.size());
  for (Letter l : fiber_word.letters()) {
    out.push_back(to_ambient(l));
  }
  return Word(std::move(out));
}

Word MappingTorus::to_raw(const TorusElement& e) const {
  std::vector<Letter> out;
  out.reserve(e.fiber.size() + static_cast<std::size_t>(std::llabs(e.t_exp)));
  for (std::int64_t i = 0; i < std::llabs(e.t_exp); ++i) {
    out.push_back(e.t_exp > 0 ? kT : kTInv);
  }
  for (Letter l : e.fiber.letters()) {
    out.push_back(to_ambient(l));
  }
  return Word(std::move(out));
}

std::vector<Word> MappingTorus::relators() const {
  std::vector<Word> out;
  for (std::size_t g = 0; g < fiber().size(); ++g) {
    Word r{kTInv, Letter(g + 1, 1), kT};
    r.append(fibernorm::inverse(fiber_to_ambient(monodromy_.image(g))));
    out.push_back(std::move(r));
  }
  return out;
}

Word MappingTorus::twist(const Word& fiber_word, std::int64_t n, const Budget& budget) const {
  return iterate(monodromy_, fiber_word, n, budget);
}

TorusElement MappingTorus::normal_form(const Word& raw, const Budget& budget) const {
  const Word reduced_raw = reduce(raw);
  TorusElement e;
  std::vector<Letter> fiber;
  for (Letter l : reduced_raw.letters()) {
    if (l.generator() >= ambient_.size()) {
      throw UnknownGenerator("#" + std::to_string(l.generator()));
    }
    if (l.generator() == kStableLetter) {
      // (t^k w) t^{+-1} = t^{k+-1} psi^{+-1}(w)
      Word w(std::move(fiber));
      w = l.sign() > 0 ? apply(monodromy_, w, budget) : apply_inverse(monodromy_, w, budget);
      fiber = std::move(w.mutable_letters());
      e.t_exp += l.sign();
    } else {
      push_reduced(fiber, to_fiber(l));
      if (fiber.size() > budget.max_letters) {
        throw BudgetExceeded(fiber.size(), budget.max_letters);
      }
    }
  }
  e.fiber = Word(std::move(fiber));
  return e;
}

bool MappingTorus::equal(const Word& u, const Word& v, const Budget& budget) const {
  return normal_form(u, budget) == normal_form(v, budget);
}

TorusElement MappingTorus::multiply(const TorusElement& u, const TorusElement& v,
                                    const Budget& budget) const {
  // t^m w t^n w' = t^{m+n} psi^n(w) w'
  Word moved = twist(u.fiber, v.t_exp, budget);
  Word fiber = fibernorm::multiply(moved, v.fiber);
  if (fiber.size() > budget.max_letters) {
    throw BudgetExceeded(fiber.size(), budget.max_letters);
  }
  return {u.t_exp + v.t_exp, std::move(fiber)};
}

TorusElement MappingTorus::inverse(const TorusElement& e, const Budget& budget) const {
  // (t^k w)^-1 = w^-1 t^-k = t^-k psi^-k(w^-1)
  return {-e.t_exp, twist(fibernorm::inverse(e.fiber), -e.t_exp, budget)};
}

Word MappingTorus::obfuscate(const Word& raw, std::uint64_t seed, double blowup) const {
  Word base = reduce(raw);
  if (!(blowup > 1.0)) {
    return base;
  }
  const std::size_t target = static_cast<std::size_t>(
      std::floor(blowup * static_cast<double>(base.size()))) + kObfuscationSlack;
  const std::vector<Word> rels = relators();
  const std::size_t rank = fiber().size();

  SeededRng rng(seed);
  std::vector<Letter> cur = base.letters();
  const std::size_t attempts = 8 * target + 64;
  for (std::size_t attempt = 0; attempt < attempts && cur.size() < target; ++attempt) {
    const std::size_t pos = static_cast<std::size_t>(rng.below(cur.size() + 1));
    Word piece;
    bool replace = false;
    if (pos < cur.size() && rng.below(3) != 0) {
      replace = true;
      Letter l = cur[pos];
      if (l.generator() == kStableLetter) {
        // t = h^-1 t psi(h); t^-1 = psi(h)^-1 t^-1 h
        Word h = Word::generator(static_cast<std::size_t>(rng.below(rank)), rng.coin() ? 1 : -1);
        Word h_amb = fiber_to_ambient(h);
        Word psi_h = fiber_to_ambient(apply(monodromy_, h));
        if (l.sign() > 0) {
          piece = fibernorm::inverse(h_amb);
          piece.push_back(kT);
          piece.append(psi_h);
        } else {
          piece = fibernorm::inverse(psi_h);
          piece.push_back(kTInv);
          piece.append(h_amb);
        }
      } else {
        // g = t psi(g) t^-1 = t^-1 psi^-1(g) t
        Word g = Word{to_fiber(l)};
        if (rng.coin()) {
          piece = Word{kT};
          piece.append(fiber_to_ambient(apply(monodromy_, g)));
          piece.push_back(kTInv);
        } else {
          piece = Word{kTInv};
          piece.append(fiber_to_ambient(apply_inverse(monodromy_, g)));
          piece.push_back(kT);
        }
      }
    } else {
      // Insert a cyclic rotation of a relator or its inverse.
      Word r = rels[static_cast<std::size_t>(rng.below(rels.size()))];
      if (rng.coin()) {
        r = fibernorm::inverse(r);
      }
      std::size_t shift = static_cast<std::size_t>(rng.below(r.size()));
      std::vector<Letter> rotated(r.letters().begin() + static_cast<std::ptrdiff_t>(shift),
                                  r.letters().end());
      rotated.insert(rotated.end(), r.letters().begin(),
                     r.letters().begin() + static_cast<std::ptrdiff_t>(shift));
      piece = Word(std::move(rotated));
    }
    const std::size_t new_size = cur.size() + piece.size() - (replace ? 1 : 0);
    if (new_size > target) {
      continue;
    }
    auto at = cur.begin() + static_cast<std::ptrdiff_t>(pos);
    if (replace) {
      at = cur.erase(at);
    }
    cur.insert(at, piece.letters().begin(), piece.letters().end());
  }
  return reduce(Word(std::move(cur)));
}

std::int64_t evaluate_class(CohomologyClass phi, const Word& raw) {
  std::int64_t t_sum = 0;
  std::int64_t fiber_sum = 0;
  for (Letter l : raw.letters()) {
    if (l.generator() == MappingTorus::kStableLetter) {
      t_sum += l.sign();
    } else {
      fiber_sum += l.sign();
    }
  }
  return phi.a * t_sum + phi.b * fiber_sum;
}

bool is_member(CohomologyClass phi, const Word& raw) {
  if (phi.is_zero()) {
    throw DomainError("membership is undefined for the zero class");
  }
  return evaluate_class(phi, raw) == 0;
}

Word conjugate_by_stable(const Word& raw, std::int64_t n) {
  return conjugate_by(raw, Word{kT}, n);
}

Word conjugate_by(const Word& raw, const Word& stable, std::int64_t n) {
  const Word s = n >= 0 ? stable : inverse(stable);
  const Word s_inv = inverse(s);
  const std::int64_t m = n >= 0 ? n : -n;
  Word out;
  for (std::int64_t i = 0; i < m; ++i) {
    out.append(s_inv);
  }
  out.append(raw);
  for (std::int64_t i = 0; i < m; ++i) {
    out.append(s);
  }
  return out;
}

nlohmann::json to_json(const MappingTorus& torus, const TorusElement& e) {
  return {{"t_exp", e.t_exp}, {"fiber", format_word(e.fiber, torus.fiber())}};
}

TorusElement torus_element_from_json(const MappingTorus& torus, const nlohmann::json& j) {
  try {
    TorusElement e;
    e.t_exp = j.at("t_exp").get<std::int64_t>();
    e.fiber = reduce(parse_word(j.at("fiber").get<std::string>(), torus.fiber()));
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("malformed torus element: ") + ex.what());
  }
}

}  // namespace fibernorm
