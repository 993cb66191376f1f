#include "fibernorm/norm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "fibernorm/errors.hpp"

namespace fibernorm {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("malformed cohomology class '" + std::string(whole) + "', expected a,b");
  }
  return v;
}

}  // namespace

CohomologyClass operator+(CohomologyClass u, CohomologyClass v) { return {u.a + v.a, u.b + v.b}; }

CohomologyClass operator*(std::int64_t m, CohomologyClass u) { return {m * u.a, m * u.b}; }

CohomologyClass parse_class(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError("malformed cohomology class '" + std::string(text) + "', expected a,b");
  }
  return {parse_int(body.substr(0, comma), text), parse_int(body.substr(comma + 1), text)};
}

std::string to_string(CohomologyClass phi) {
  return "(" + std::to_string(phi.a) + "," + std::to_string(phi.b) + ")";
}

std::int64_t thurston_norm(CohomologyClass phi) {
  return std::max(abs64(2 * phi.a), abs64(2 * phi.b));
}

bool is_primitive(CohomologyClass phi) { return std::gcd(phi.a, phi.b) == 1; }

bool is_fibered(CohomologyClass phi) { return !phi.is_zero() && abs64(phi.a) != abs64(phi.b); }

bool in_fibered_cone(CohomologyClass phi) { return phi.a > abs64(phi.b); }

std::int64_t fiber_rank(CohomologyClass phi) {
  if (!is_fibered(phi)) {
    throw DomainError("class " + to_string(phi) + " is not fibered");
  }
  return thurston_norm(phi) + 1;
}

}  // namespace fibernorm
