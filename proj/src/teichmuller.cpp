#include "fibernorm/teichmuller.hpp"

#include <cmath>

#include "fibernorm/errors.hpp"

namespace fibernorm {

TeichPolynomial::TeichPolynomial(const std::map<Monomial, std::int64_t>& terms) {
  for (const auto& [m, c] : terms) {
    if (c != 0) {
      terms_.emplace(m, c);
    }
  }
}

const TeichPolynomial& canonical_theta() {
  static const TeichPolynomial theta({{{0, 0}, 1},
                                      {{1, 0}, -1},
                                      {{1, 1}, -1},
                                      {{1, -1}, -1},
                                      {{2, 0}, 1}});
  return theta;
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

double IntPolynomial::evaluate(double k) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * k + static_cast<double>(*it);
  }
  return acc;
}

int IntPolynomial::sign_at(double k) const {
  // p(k) / k^deg = sum c_i (1/k)^(deg - i): Horner over ascending
  // coefficients in 1/k.
  const double inv = 1.0 / k;
  double acc = 0.0;
  for (std::int64_t c : coeffs_) {
    acc = acc * inv + static_cast<double>(c);
  }
  return (acc > 0) - (acc < 0);
}

std::string to_coefficient_string(const IntPolynomial& p) {
  if (p.coefficients().empty()) {
    return "0";
  }
  std::string out;
  for (std::int64_t c : p.coefficients()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(c);
  }
  return out;
}

std::string to_display_string(const IntPolynomial& p) {
  const auto& cs = p.coefficients();
  if (cs.empty()) {
    return "0";
  }
  std::string out;
  for (std::int64_t e = p.degree(); e >= 0; --e) {
    std::int64_t c = cs[static_cast<std::size_t>(e)];
    if (c == 0) {
      continue;
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || e == 0) {
      out += std::to_string(mag);
    }
    if (e >= 1) {
      out += 'k';
    }
    if (e >= 2) {
      out += '^' + std::to_string(e);
    }
  }
  return out;
}

IntPolynomial specialize(const TeichPolynomial& theta, CohomologyClass phi) {
  std::map<std::int64_t, std::int64_t> by_exponent;
  for (const auto& [m, c] : theta.terms()) {
    std::int64_t e = phi.a * m.first + phi.b * m.second;
    if (e < 0) {
      throw DomainError("specialization at " + to_string(phi) + " gives negative exponent " +
                        std::to_string(e));
    }
    by_exponent[e] += c;
  }
  std::vector<std::int64_t> coeffs;
  if (!by_exponent.empty()) {
    coeffs.assign(static_cast<std::size_t>(by_exponent.rbegin()->first) + 1, 0);
    for (const auto& [e, c] : by_exponent) {
      coeffs[static_cast<std::size_t>(e)] = c;
    }
  }
  return IntPolynomial(std::move(coeffs));
}

double largest_root(const IntPolynomial& p, double tol) {
  if (!(tol > 0)) {
    throw DomainError("root tolerance must be positive");
  }
  if (p.degree() < 1) {
    throw NoRoot("constant polynomial has no root");
  }
  double upper = 1.0;
  for (std::int64_t c : p.coefficients()) {
    upper += std::fabs(static_cast<double>(c));
  }
  const double lower = 1.0;

  // Geometric grid from the bound down to 1; finer near 1, where roots of
  // high-degree specializations cluster.
  const std::size_t steps = 1024 + 64 * static_cast<std::size_t>(p.degree());
  const double log_span = std::log(upper / lower);
  double hi = upper;
  int hi_sign = p.sign_at(hi);
  double lo = hi;
  bool bracketed = false;
  for (std::size_t s = steps; s-- > 0;) {
    double k = lower * std::exp(log_span * static_cast<double>(s) / static_cast<double>(steps));
    if (s == 0) {
      k = lower;
    }
    int sg = p.sign_at(k);
    if (sg == 0) {
      if (k > lower) {
        return k;
      }
      break;
    }
    if (sg != hi_sign) {
      lo = k;
      bracketed = true;
      break;
    }
    hi = k;
  }
  if (!bracketed) {
    throw NoRoot("no sign change of " + to_display_string(p) + " on (1, " +
                 std::to_string(upper) + ")");
  }
  int lo_sign = p.sign_at(lo);
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    int sg = p.sign_at(mid);
    if (sg == 0) {
      return mid;
    }
    if (sg == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double stretch_factor(CohomologyClass phi, double tol) {
  return largest_root(specialize(canonical_theta(), phi), tol);
}

double predicted_lmax(CohomologyClass phi, std::int64_t n) {
  return std::pow(stretch_factor(phi), static_cast<double>(n));
}

}  // namespace fibernorm
