#include "doctest.h"

#include "fibernorm/mapping_torus.hpp"
#include "fibernorm/random.hpp"

using namespace fibernorm;

namespace {

const MappingTorus& torus() { return MappingTorus::canonical(); }
Word raw(const char* text) { return torus().parse(text); }
Word fib(const char* text) { return parse_word(text, fiber_alphabet()); }

Word random_raw(SeededRng& rng, std::size_t len) {
  Word out;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(Letter(static_cast<std::size_t>(rng.below(4)), rng.coin() ? 1 : -1));
  }
  return out;
}

}  // namespace

TEST_CASE("normal form examples") {
  CHECK(torus().normal_form(raw("t^-1 x t")) == TorusElement{0, fib("y z y^-1")});
  CHECK(torus().normal_form(raw("t")) == TorusElement{1, Word{}});
  // x t = t psi(x)
  CHECK(torus().normal_form(raw("x t")) == TorusElement{1, fib("y z y^-1")});
  CHECK(torus().normal_form(raw("x t")) == torus().normal_form(raw("t y z y^-1")));
  CHECK(torus().normal_form(raw("t^-1 x")) == TorusElement{-1, fib("x")});
  // x t^-1 = t^-1 psi^-1(x)
  CHECK(torus().normal_form(raw("x t^-1")) == TorusElement{-1, fib("x y x^-1")});
  CHECK(torus().normal_form(Word{}) == TorusElement{});
}

TEST_CASE("relators normalize to the identity") {
  for (const Word& r : torus().relators()) {
    CHECK(torus().normal_form(r) == TorusElement{});
  }
  CHECK(torus().format(torus().relators()[0]) == "t^-1 x t y z^-1 y^-1");
}

TEST_CASE("word problem") {
  CHECK(torus().equal(raw("t^-1 x t (y z y^-1)^-1"), Word{}));
  CHECK_FALSE(torus().equal(raw("x"), raw("y")));
  Word psi2x = iterate(simplest_braid_monodromy(), fib("x"), 2);
  CHECK(torus().equal(raw("t^-2 x t^2"), torus().fiber_to_ambient(psi2x)));
  CHECK_FALSE(torus().equal(raw("t"), raw("t^2")));
}

TEST_CASE("class evaluation and membership") {
  CHECK(evaluate_class({2, 1}, raw("t x^-1")) == 1);
  CHECK(evaluate_class({1, 0}, raw("t^-3 y t^3")) == 0);
  for (std::int64_t a = -6; a <= 6; ++a) {
    for (std::int64_t b = -6; b <= 6; ++b) {
      for (const Word& r : torus().relators()) {
        CHECK(evaluate_class({a, b}, r) == 0);
      }
    }
  }
  CHECK(is_member({1, 0}, raw("t^-5 x t^5")));
  CHECK_FALSE(is_member({1, 0}, raw("t")));
  CHECK(is_member({2, 1}, raw("x y^-1")));
  CHECK_THROWS_AS(is_member({0, 0}, raw("x")), DomainError);
}

TEST_CASE("conjugation by the stable letter") {
  CHECK(torus().format(conjugate_by_stable(raw("x"), 1)) == "t^-1 x t");
  CHECK(conjugate_by_stable(raw("x y"), 0) == raw("x y"));
  CHECK(conjugate_by_stable(raw("y"), 7).size() == 15);
  CHECK(torus().format(conjugate_by_stable(raw("x"), -2)) == "t^2 x t^-2");
  auto nf = torus().normal_form(conjugate_by_stable(raw("x"), 3));
  CHECK(nf.t_exp == 0);
  CHECK(nf.fiber == apply(power(simplest_braid_monodromy(), 3), fib("x")));
}

TEST_CASE("group operations on normal forms") {
  SeededRng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_raw(rng, static_cast<std::size_t>(rng.below(12)));
    Word v = random_raw(rng, static_cast<std::size_t>(rng.below(12)));
    auto nu = torus().normal_form(u);
    auto nv = torus().normal_form(v);
    CHECK(torus().multiply(nu, nv) == torus().normal_form(concat(u, v)));
    CHECK(torus().inverse(nu) == torus().normal_form(inverse(u)));
    CHECK(torus().normal_form(torus().to_raw(nu)) == nu);
  }
}

TEST_CASE("property: normal forms are invariant under relator insertion") {
  SeededRng rng(1234);
  const auto rels = torus().relators();
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = random_raw(rng, static_cast<std::size_t>(rng.below(16)));
    Word r = rels[static_cast<std::size_t>(rng.below(rels.size()))];
    if (rng.coin()) r = inverse(r);
    auto cut = static_cast<std::ptrdiff_t>(rng.below(w.size() + 1));
    std::vector<Letter> ls(w.letters().begin(), w.letters().begin() + cut);
    ls.insert(ls.end(), r.letters().begin(), r.letters().end());
    ls.insert(ls.end(), w.letters().begin() + cut, w.letters().end());
    Word w2(std::move(ls));
    auto nf = torus().normal_form(w);
    CHECK(nf == torus().normal_form(w2));
    // homomorphism consistency
    for (CohomologyClass phi : {CohomologyClass{1, 0}, CohomologyClass{2, 1}, CohomologyClass{3, -2}}) {
      CHECK(evaluate_class(phi, w) ==
            phi.a * nf.t_exp + phi.b * (exponent_sum(nf.fiber, 0) + exponent_sum(nf.fiber, 1) +
                                        exponent_sum(nf.fiber, 2)));
    }
    CHECK(is_member({1, 0}, w) == (nf.t_exp == 0));
  }
}

TEST_CASE("obfuscation preserves the element") {
  Word w = conjugate_by_stable(raw("y"), 4);
  CHECK(torus().obfuscate(w, 3, 1.0) == reduce(w));
  CHECK(torus().normal_form(torus().obfuscate(Word{}, 9, 3.0)) == TorusElement{});
  SeededRng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_raw(rng, static_cast<std::size_t>(rng.below(14)));
    std::uint64_t seed = rng.next();
    Word o = torus().obfuscate(u, seed, 2.0);
    CHECK(torus().normal_form(o) == torus().normal_form(u));
    CHECK(o.size() <= 2 * reduce(u).size() + MappingTorus::kObfuscationSlack);
    CHECK(o == torus().obfuscate(u, seed, 2.0));
  }
  // it actually changes the spelling
  CHECK(torus().obfuscate(w, 1, 2.0) != reduce(w));
}

TEST_CASE("exponential distortion witness") {
  std::size_t prev = 1;
  for (std::int64_t n = 1; n <= 12; ++n) {
    Word c = conjugate_by_stable(raw("y"), n);
    CHECK(c.size() == static_cast<std::size_t>(1 + 2 * n));
    auto len = torus().normal_form(c).fiber.size();
    if (n >= 6) {
      double ratio = static_cast<double>(len) / static_cast<double>(prev);
      CHECK(ratio == doctest::Approx(2.618).epsilon(0.02));
    }
    prev = len;
  }
}

TEST_CASE("budget is a resource error") {
  CHECK_THROWS_AS(torus().normal_form(conjugate_by_stable(raw("y"), 12), Budget{10000}),
                  BudgetExceeded);
  try {
    torus().normal_form(conjugate_by_stable(raw("y"), 12), Budget{10000});
  } catch (const BudgetExceeded& e) {
    CHECK(e.limit() == 10000);
  }
}

TEST_CASE("torus element json") {
  TorusElement e{3, fib("y z^-1")};
  auto j = to_json(torus(), e);
  CHECK(j.dump() == R"({"fiber":"y z^-1","t_exp":3})");
  CHECK(torus_element_from_json(torus(), j) == e);
  CHECK_THROWS_AS(torus_element_from_json(torus(), nlohmann::json{{"t_exp", 1}}), FormatError);
}

TEST_CASE("torus from another monodromy") {
  // sigma_1 alone on F_2 is periodic but still an automorphism with inverse.
  Alphabet ab({"a", "b"});
  MappingTorus m(braid_generator(ab, 1, 1));
  CHECK(m.ambient().names() == std::vector<std::string>{"t", "a", "b"});
  CHECK(m.normal_form(m.parse("a t")) == TorusElement{1, parse_word("b", ab)});
  CHECK_THROWS_AS(MappingTorus(FreeAutomorphism(ab, {parse_word("b", ab), parse_word("a", ab)})),
                  InversionUnavailable);
}
