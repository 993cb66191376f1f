#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibernorm/errors.hpp"

namespace fibernorm {

// Ordered set of generator names. Names are lowercase identifiers
// ([a-z][a-z0-9_]*); inverses are a sign on the letter, never a separate
// symbol.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t generator) const { return names_.at(generator); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const noexcept;
  // Throws UnknownGenerator.
  std::size_t index(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

  static bool is_valid_name(std::string_view name) noexcept;

 private:
  std::vector<std::string> names_;
};

// A generator index with a sign, packed as +-(index+1).
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::size_t generator, int sign)
      : code_(static_cast<std::int32_t>(generator + 1) * (sign < 0 ? -1 : 1)) {}

  constexpr std::size_t generator() const noexcept {
    return static_cast<std::size_t>((code_ < 0 ? -code_ : code_) - 1);
  }
  constexpr int sign() const noexcept { return code_ < 0 ? -1 : 1; }
  constexpr Letter inverse() const noexcept { return from_code(-code_); }
  constexpr bool cancels(Letter other) const noexcept { return code_ == -other.code_; }
  constexpr std::int32_t code() const noexcept { return code_; }

  static constexpr Letter from_code(std::int32_t code) noexcept {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::int32_t code_ = 1;
};

// A sequence of signed letters. Words are not required to be reduced;
// reduce() produces the canonical freely reduced representative.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word generator(std::size_t index, int sign = 1) { return Word{Letter(index, sign)}; }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::vector<Letter>& mutable_letters() noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  }

  bool is_reduced() const noexcept;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Appends `l` to a reduced letter stack, cancelling against the top.
inline void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().cancels(l)) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

Word reduce(const Word& w);
// Literal concatenation; no cancellation.
Word concat(const Word& u, const Word& v);
// reduce(concat(u, v)) without the intermediate copy.
Word multiply(const Word& u, const Word& v);
Word inverse(const Word& w);
// Letter count of the freely reduced form.
std::size_t length(const Word& w);
Word cyclic_reduce(const Word& w);
// True when u and v are equal as cyclic words (one is a rotation of the other).
bool is_rotation(const Word& u, const Word& v);
// Signed count of occurrences of `generator`.
std::int64_t exponent_sum(const Word& w, std::size_t generator);

// Serialization. Tokens are `name` or `name^k` (k a nonzero integer),
// space separated; the empty word is "1". Parenthesised groups with an
// optional exponent, "(y z y^-1)^-1", are also accepted on input.
Word parse_word(std::string_view text, const Alphabet& alphabet);
// Output is always reduced with coalesced exponents.
std::string format_word(const Word& w, const Alphabet& alphabet);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace fibernorm
