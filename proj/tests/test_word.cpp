#include "doctest.h"

#include "fibernorm/automorphism.hpp"
#include "fibernorm/random.hpp"
#include "fibernorm/word.hpp"
#include "oracle.hpp"

using namespace fibernorm;

namespace {

const Alphabet& xyz() { return fiber_alphabet(); }

Word w(const char* text) { return parse_word(text, xyz()); }
std::string s(const Word& word) { return format_word(word, xyz()); }

Word random_word(SeededRng& rng, std::size_t len, std::size_t gens = 3) {
  Word out;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(Letter(static_cast<std::size_t>(rng.below(gens)), rng.coin() ? 1 : -1));
  }
  return out;
}

std::string compact(const Word& word) {
  std::string out;
  for (Letter l : word.letters()) {
    char c = "xyz"[l.generator()];
    out += l.sign() > 0 ? c : static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(s(reduce(w("x x^-1"))) == "1");
  CHECK(reduce(w("x x^-1")).empty());
  CHECK(s(reduce(w("y z y^-1 y z^-1"))) == "y");
  CHECK(s(reduce(w("x y z"))) == "x y z");
}

TEST_CASE("the three braid images concatenate to the boundary word") {
  const auto& psi = simplest_braid_monodromy();
  Word all = concat(concat(psi.image(0), psi.image(1)), psi.image(2));
  CHECK(s(reduce(all)) == "x y z");
  // independent check with the string oracle
  const auto& m = oracle::psi();
  CHECK(oracle::reduce(m.at('x') + m.at('y') + m.at('z')) == "xyz");
}

TEST_CASE("concat, inverse and length") {
  CHECK(s(inverse(w("x y"))) == "y^-1 x^-1");
  CHECK(length(Word{}) == 0);
  CHECK(length(w("y z^-1 y^-1 x y z y^-1")) == 7);
  CHECK(length(w("x y y^-1")) == 1);
  CHECK(concat(w("x"), w("x^-1")).size() == 2);
  CHECK(multiply(w("x"), w("x^-1")).empty());
}

TEST_CASE("cyclic reduction") {
  CHECK(s(cyclic_reduce(w("x y x^-1"))) == "y");
  CHECK(s(cyclic_reduce(w("x y"))) == "x y");
  CHECK(cyclic_reduce(w("x x^-1")).empty());
  CHECK(s(cyclic_reduce(w("z x y z^-1"))) == "x y");
  CHECK(is_rotation(w("x y z"), w("z x y")));
  CHECK_FALSE(is_rotation(w("x y z"), w("x z y")));

  // psi(x y x^-1) is a conjugate of psi(y): same cyclic word.
  const auto& psi = simplest_braid_monodromy();
  Word lhs = cyclic_reduce(apply(psi, w("x y x^-1")));
  Word rhs = cyclic_reduce(apply(psi, w("y")));
  CHECK(is_rotation(lhs, rhs));
}

TEST_CASE("serialization") {
  CHECK(s(w("x x x")) == "x^3");
  CHECK(s(w("y^-2 x^1")) == "y^-2 x");
  CHECK(s(w("(y z y^-1)^-1")) == "y z^-1 y^-1");
  CHECK(s(w("(x y)^2")) == "x y x y");
  CHECK(w("1").empty());
  CHECK(s(Word{}) == "1");
  CHECK_THROWS_AS(w("q"), UnknownGenerator);
  CHECK_THROWS_AS(w("x^0"), ParseError);
  CHECK_THROWS_AS(w("x^"), ParseError);
  CHECK_THROWS_AS(w("(x y"), ParseError);
  CHECK_THROWS_AS(w("X"), ParseError);
  CHECK_THROWS_AS(Alphabet({"x", "x"}), ParseError);
  CHECK_THROWS_AS(Alphabet({"Bad"}), ParseError);
}

TEST_CASE("property: reduction laws on random words") {
  SeededRng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Word u = random_word(rng, static_cast<std::size_t>(rng.below(30)));
    Word v = random_word(rng, static_cast<std::size_t>(rng.below(30)));
    Word ru = reduce(u);
    CHECK(reduce(ru) == ru);
    CHECK(ru.is_reduced());
    CHECK(reduce(concat(u, inverse(u))).empty());
    CHECK(length(concat(u, v)) <= length(u) + length(v));
    CHECK(compact(ru) == oracle::reduce(compact(u)));
    // serialization round trip
    CHECK(parse_word(s(u), xyz()) == ru);
    Word c = cyclic_reduce(u);
    CHECK((c.size() < 2 || !c[0].cancels(c[c.size() - 1])));
  }
}
