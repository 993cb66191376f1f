#include "fibernorm/word.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace fibernorm {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_valid_name(n)) {
      throw ParseError("invalid generator name '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw ParseError("duplicate generator name '" + n + "'");
    }
  }
}

bool Alphabet::is_valid_name(std::string_view name) noexcept {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::size_t Alphabet::index(std::string_view name) const {
  if (auto i = find(name)) {
    return *i;
  }
  throw UnknownGenerator(std::string(name));
}

bool Word::is_reduced() const noexcept {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i - 1].cancels(letters_[i])) {
      return false;
    }
  }
  return true;
}

Word reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    push_reduced(out, l);
  }
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.append(v);
  return out;
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  for (Letter l : u.letters()) {
    push_reduced(out, l);
  }
  for (Letter l : v.letters()) {
    push_reduced(out, l);
  }
  return Word(std::move(out));
}

Word inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

std::size_t length(const Word& w) {
  return w.is_reduced() ? w.size() : reduce(w).size();
}

Word cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  const auto& ls = r.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                  ls.begin() + static_cast<std::ptrdiff_t>(hi)));
}

bool is_rotation(const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    return false;
  }
  if (u.empty()) {
    return true;
  }
  // Search for v inside u·u.
  std::vector<Letter> doubled = u.letters();
  doubled.insert(doubled.end(), u.letters().begin(), u.letters().end());
  auto it = std::search(doubled.begin(), doubled.end(), v.letters().begin(), v.letters().end());
  return it != doubled.end();
}

std::int64_t exponent_sum(const Word& w, std::size_t generator) {
  std::int64_t sum = 0;
  for (Letter l : w.letters()) {
    if (l.generator() == generator) {
      sum += l.sign();
    }
  }
  return sum;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected character");
    }
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in word '" +
                     std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  Word sequence() {
    Word out;
    while (true) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') {
        return out;
      }
      out.append(factor());
    }
  }

  Word factor() {
    Word base;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      base = sequence();
      if (pos_ == text_.size() || text_[pos_] != ')') {
        fail("missing ')'");
      }
      ++pos_;
    } else if (c == '1' && (pos_ + 1 == text_.size() || !is_name_char(text_[pos_ + 1]))) {
      ++pos_;
    } else if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) {
        ++pos_;
      }
      base = Word::generator(alphabet_.index(text_.substr(start, pos_ - start)));
    } else {
      fail("expected generator");
    }
    long long exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const char* first = text_.data() + pos_;
      const char* last = text_.data() + text_.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc() || ptr == first) {
        fail("malformed exponent");
      }
      pos_ += static_cast<std::size_t>(ptr - first);
      if (exponent == 0) {
        fail("exponent must be nonzero");
      }
    }
    Word unit = exponent < 0 ? inverse(base) : base;
    Word out;
    for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
      out.append(unit);
    }
    return out;
  }

  static bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return WordParser(text, alphabet).parse();
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  Word r = reduce(w);
  if (r.empty()) {
    return "1";
  }
  std::string out;
  const auto& ls = r.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) {
      ++j;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += alphabet.name(ls[i].generator());
    long long k = static_cast<long long>(j - i) * ls[i].sign();
    if (k != 1) {
      out += '^';
      out += std::to_string(k);
    }
    i = j;
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over letter codes.
  std::uint64_t h = 1469598103934665603ull;
  for (Letter l : w.letters()) {
    h ^= static_cast<std::uint32_t>(l.code());
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace fibernorm
