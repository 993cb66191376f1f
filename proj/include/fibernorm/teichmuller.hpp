#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fibernorm/norm.hpp"

namespace fibernorm {

// Element of the group ring Z[H_1(M; Z)], coordinates (i, j) in the basis
// ([t], [x]). Zero coefficients are never stored.
class TeichPolynomial {
 public:
  using Monomial = std::pair<std::int64_t, std::int64_t>;

  TeichPolynomial() = default;
  explicit TeichPolynomial(const std::map<Monomial, std::int64_t>& terms);

  const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }
  bool operator==(const TeichPolynomial&) const = default;

 private:
  std::map<Monomial, std::int64_t> terms_;
};

// Theta(t, u) = 1 - t(1 + u + u^-1) + t^2 for the fibered face containing
// (1,0), with u stored at (0,1); φ(u) = b reproduces the worked
// specializations at (1,0) and (2,1).
const TeichPolynomial& canonical_theta();

// One-variable integer polynomial, coefficients in ascending degree; the
// leading coefficient is nonzero (the zero polynomial has no coefficients).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> ascending);

  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  // -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  double evaluate(double k) const;
  // Sign of p(k) for k > 0, evaluated as k^deg * rev(p)(1/k) so large
  // degrees do not overflow.
  int sign_at(double k) const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

// "1 -3 1" (ascending coefficients).
std::string to_coefficient_string(const IntPolynomial& p);
// "k^2 - 3k + 1"
std::string to_display_string(const IntPolynomial& p);

// Theta(k) = sum a_g k^{phi(g)}. Throws DomainError when some stored monomial
// gets a negative exponent (phi outside the cone this Theta describes).
IntPolynomial specialize(const TeichPolynomial& theta, CohomologyClass phi);

// Largest real root in (1, 1 + sum|c|) to within tol: the highest sign
// change is bracketed on a grid, then bisected. Throws NoRoot.
double largest_root(const IntPolynomial& p, double tol = 1e-9);

// Largest root of the canonical Theta specialized at phi.
double stretch_factor(CohomologyClass phi, double tol = 1e-9);

// stretch_factor(phi)^N, the growth estimate for l_max.
double predicted_lmax(CohomologyClass phi, std::int64_t n);

}  // namespace fibernorm
