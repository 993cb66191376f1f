#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "fibernorm/automorphism.hpp"
#include "fibernorm/norm.hpp"
#include "fibernorm/word.hpp"

namespace fibernorm {

// Normal form t^{t_exp} * fiber of an element of the mapping torus group.
// Equal elements have equal fields.
struct TorusElement {
  std::int64_t t_exp = 0;
  Word fiber;

  bool operator==(const TorusElement&) const = default;
  auto operator<=>(const TorusElement&) const = default;
};

// The group F ⋊_psi Z = < t, F | t^-1 s t = psi(s) > for a free fiber group F
// and a monodromy psi with attached inverse. Raw words (elements before
// normalization) are Words over the ambient alphabet {t} + fiber names, with
// t at index 0.
//
// Normal forms push every t to the left using
//   s t = t psi(s),   s t^-1 = t^-1 psi^-1(s),
// so the fiber part can grow exponentially in the number of t letters.
class MappingTorus {
 public:
  static constexpr std::size_t kStableLetter = 0;

  explicit MappingTorus(FreeAutomorphism monodromy);

  // The simplest pseudo-Anosov braid: < t,x,y,z | t^-1 x t = y z y^-1,
  // t^-1 y t = y z^-1 y^-1 x y z y^-1, t^-1 z t = y >.
  static const MappingTorus& canonical();

  const Alphabet& ambient() const noexcept { return ambient_; }
  const Alphabet& fiber() const noexcept { return monodromy_.alphabet(); }
  const FreeAutomorphism& monodromy() const noexcept { return monodromy_; }

  Word parse(std::string_view text) const { return parse_word(text, ambient_); }
  std::string format(const Word& raw) const { return format_word(raw, ambient_); }

  Word fiber_to_ambient(const Word& fiber_word) const;
  Word to_raw(const TorusElement& e) const;

  // The defining relators t^-1 s t psi(s)^-1, one per fiber generator.
  std::vector<Word> relators() const;

  TorusElement normal_form(const Word& raw, const Budget& budget = {}) const;
  bool equal(const Word& u, const Word& v, const Budget& budget = {}) const;

  TorusElement multiply(const TorusElement& u, const TorusElement& v,
                        const Budget& budget = {}) const;
  TorusElement inverse(const TorusElement& e, const Budget& budget = {}) const;
  // psi^n applied to the fiber part; n may be negative.
  Word twist(const Word& fiber_word, std::int64_t n, const Budget& budget = {}) const;

  // A spelling of the same element, rewritten at random: fiber letters g by
  // t psi(g) t^-1 or t^-1 psi^-1(g) t, stable letters t by h^-1 t psi(h),
  // and relators inserted at random positions. The result is freely reduced
  // and has at most blowup*|w| + slack letters (exactly reduce(w) for
  // blowup == 1). Deterministic in the seed.
  Word obfuscate(const Word& raw, std::uint64_t seed, double blowup) const;

  static constexpr std::size_t kObfuscationSlack = 24;

 private:
  FreeAutomorphism monodromy_;
  Alphabet ambient_;
};

// a * (exponent sum of t) + b * (exponent sum of the fiber letters), over the
// ambient alphabet of the canonical torus. Linear in |w|; no normalization.
std::int64_t evaluate_class(CohomologyClass phi, const Word& raw);
// evaluate_class(phi, raw) == 0. Throws DomainError for phi == 0.
bool is_member(CohomologyClass phi, const Word& raw);
// t^-n w t^n, literal (unreduced).
Word conjugate_by_stable(const Word& raw, std::int64_t n);
// s^-n w s^n for an arbitrary stable-letter word s.
Word conjugate_by(const Word& raw, const Word& stable, std::int64_t n);

// {"t_exp": k, "fiber": "<word>"}
nlohmann::json to_json(const MappingTorus& torus, const TorusElement& e);
TorusElement torus_element_from_json(const MappingTorus& torus, const nlohmann::json& j);

}  // namespace fibernorm
