#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace fibernorm {

// An integral class in H^1(M; Z) = Z^2 for the mapping torus of the simplest
// pseudo-Anosov braid: phi(t) = a and phi(x) = phi(y) = phi(z) = b (the braid
// permutes the punctures transitively, so they are homologous).
struct CohomologyClass {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool is_zero() const noexcept { return a == 0 && b == 0; }
  auto operator<=>(const CohomologyClass&) const = default;
};

CohomologyClass operator+(CohomologyClass u, CohomologyClass v);
CohomologyClass operator*(std::int64_t m, CohomologyClass u);

// "a,b"; throws ParseError.
CohomologyClass parse_class(std::string_view text);
// "(a,b)"
std::string to_string(CohomologyClass phi);

// max(|2a|, |2b|)
std::int64_t thurston_norm(CohomologyClass phi);
// gcd(a, b) == 1 (so not both zero).
bool is_primitive(CohomologyClass phi);
// Fibered classes fill the open cones over the four open faces of the unit
// square: phi != 0 and |a| != |b|.
bool is_fibered(CohomologyClass phi);
// Open cone over the face {1/2} x [-1/2, 1/2] containing (1,0): a > |b|.
bool in_fibered_cone(CohomologyClass phi);
// Rank of the free fiber group, ||phi||_T + 1. Throws DomainError unless
// the class is fibered.
std::int64_t fiber_rank(CohomologyClass phi);

}  // namespace fibernorm
