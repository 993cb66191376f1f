#include "fibernorm/automorphism.hpp"

namespace fibernorm {

namespace {

void check_images(const Alphabet& alphabet, const std::vector<Word>& images) {
  if (images.size() != alphabet.size()) {
    throw AlphabetMismatch("automorphism needs one image per generator: got " +
                           std::to_string(images.size()) + " for " +
                           std::to_string(alphabet.size()));
  }
  for (const Word& w : images) {
    for (Letter l : w.letters()) {
      if (l.generator() >= alphabet.size()) {
        throw AlphabetMismatch("image letter outside the alphabet");
      }
    }
  }
}

std::vector<Word> reduced(std::vector<Word> images) {
  for (auto& w : images) {
    w = reduce(w);
  }
  return images;
}

Word substitute(const std::vector<Word>& images, const Word& w, const Budget& budget) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    if (l.generator() >= images.size()) {
      throw UnknownGenerator("#" + std::to_string(l.generator()));
    }
    const auto& img = images[l.generator()].letters();
    if (l.sign() > 0) {
      for (Letter m : img) {
        push_reduced(out, m);
      }
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) {
        push_reduced(out, it->inverse());
      }
    }
    if (out.size() > budget.max_letters) {
      throw BudgetExceeded(out.size(), budget.max_letters);
    }
  }
  return Word(std::move(out));
}

std::vector<Word> compose_images(const std::vector<Word>& outer, const std::vector<Word>& inner,
                                 const Budget& budget) {
  std::vector<Word> out;
  out.reserve(inner.size());
  for (const Word& w : inner) {
    out.push_back(substitute(outer, w, budget));
  }
  return out;
}

bool fixes_generators(const std::vector<Word>& images) {
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] != Word::generator(i)) {
      return false;
    }
  }
  return true;
}

}  // namespace

FreeAutomorphism::FreeAutomorphism(Unchecked, Alphabet alphabet,
                                   std::shared_ptr<const std::vector<Word>> images,
                                   std::shared_ptr<const std::vector<Word>> inverse_images)
    : alphabet_(std::move(alphabet)),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {}

FreeAutomorphism::FreeAutomorphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)) {
  check_images(alphabet_, images);
  images_ = std::make_shared<const std::vector<Word>>(reduced(std::move(images)));
}

FreeAutomorphism::FreeAutomorphism(Alphabet alphabet, std::vector<Word> images,
                                   std::vector<Word> inverse_images)
    : FreeAutomorphism(std::move(alphabet), std::move(images)) {
  check_images(alphabet_, inverse_images);
  auto inv = reduced(std::move(inverse_images));
  if (!fixes_generators(compose_images(*images_, inv, Budget{})) ||
      !fixes_generators(compose_images(inv, *images_, Budget{}))) {
    throw DomainError("supplied inverse does not invert the automorphism");
  }
  inverse_images_ = std::make_shared<const std::vector<Word>>(std::move(inv));
}

FreeAutomorphism FreeAutomorphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    images.push_back(Word::generator(i));
  }
  auto shared = std::make_shared<const std::vector<Word>>(std::move(images));
  return FreeAutomorphism(Unchecked{}, alphabet, shared, shared);
}

FreeAutomorphism FreeAutomorphism::from_strings(const Alphabet& alphabet,
                                                const std::map<std::string, std::string>& images) {
  std::vector<Word> words(alphabet.size());
  std::vector<bool> seen(alphabet.size(), false);
  for (const auto& [name, text] : images) {
    std::size_t g = alphabet.index(name);
    words[g] = parse_word(text, alphabet);
    seen[g] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw AlphabetMismatch("missing image for generator '" + alphabet.name(i) + "'");
    }
  }
  return FreeAutomorphism(alphabet, std::move(words));
}

const std::vector<Word>& FreeAutomorphism::inverse_images() const {
  if (!inverse_images_) {
    throw InversionUnavailable();
  }
  return *inverse_images_;
}

bool FreeAutomorphism::is_identity() const { return fixes_generators(*images_); }

Word apply(const FreeAutomorphism& a, const Word& w, const Budget& budget) {
  return substitute(a.images(), w, budget);
}

Word apply_inverse(const FreeAutomorphism& a, const Word& w, const Budget& budget) {
  return substitute(a.inverse_images(), w, budget);
}

Word iterate(const FreeAutomorphism& a, const Word& w, std::int64_t n, const Budget& budget) {
  const auto& images = n >= 0 ? a.images() : a.inverse_images();
  Word cur = reduce(w);
  for (std::int64_t i = 0; i < (n >= 0 ? n : -n); ++i) {
    cur = substitute(images, cur, budget);
  }
  return cur;
}

FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g,
                         const Budget& budget) {
  if (f.alphabet() != g.alphabet()) {
    throw AlphabetMismatch("cannot compose automorphisms over different alphabets");
  }
  auto images =
      std::make_shared<const std::vector<Word>>(compose_images(f.images(), g.images(), budget));
  std::shared_ptr<const std::vector<Word>> inv;
  if (f.has_inverse() && g.has_inverse()) {
    // (f o g)^-1 = g^-1 o f^-1
    inv = std::make_shared<const std::vector<Word>>(
        compose_images(g.inverse_images(), f.inverse_images(), budget));
  }
  return FreeAutomorphism(FreeAutomorphism::Unchecked{}, f.alphabet(), std::move(images),
                          std::move(inv));
}

FreeAutomorphism invert(const FreeAutomorphism& a) {
  if (!a.has_inverse()) {
    throw InversionUnavailable();
  }
  return FreeAutomorphism(FreeAutomorphism::Unchecked{}, a.alphabet(), a.inverse_images_,
                          a.images_);
}

FreeAutomorphism power(const FreeAutomorphism& a, std::int64_t n, const Budget& budget) {
  FreeAutomorphism base = n >= 0 ? a : invert(a);
  FreeAutomorphism result = FreeAutomorphism::identity(a.alphabet());
  for (std::int64_t i = 0; i < (n >= 0 ? n : -n); ++i) {
    result = compose(base, result, budget);
  }
  return result;
}

FreeAutomorphism braid_generator(const Alphabet& alphabet, std::size_t i, int sign) {
  if (i < 1 || i >= alphabet.size()) {
    throw DomainError("braid generator sigma_" + std::to_string(i) + " needs " +
                      std::to_string(i + 1) + " strands, alphabet has " +
                      std::to_string(alphabet.size()));
  }
  const std::size_t lo = i - 1;
  const std::size_t hi = i;
  std::vector<Word> fwd;
  std::vector<Word> bwd;
  for (std::size_t g = 0; g < alphabet.size(); ++g) {
    fwd.push_back(Word::generator(g));
    bwd.push_back(Word::generator(g));
  }
  fwd[lo] = Word::generator(hi);
  fwd[hi] = Word{Letter(hi, -1), Letter(lo, 1), Letter(hi, 1)};
  bwd[lo] = Word{Letter(lo, 1), Letter(hi, 1), Letter(lo, -1)};
  bwd[hi] = Word::generator(lo);
  auto f = std::make_shared<const std::vector<Word>>(std::move(fwd));
  auto b = std::make_shared<const std::vector<Word>>(std::move(bwd));
  if (sign >= 0) {
    return FreeAutomorphism(FreeAutomorphism::Unchecked{}, alphabet, f, b);
  }
  return FreeAutomorphism(FreeAutomorphism::Unchecked{}, alphabet, b, f);
}

FreeAutomorphism braid_automorphism(const Alphabet& alphabet,
                                    const std::vector<BraidLetter>& braid) {
  FreeAutomorphism result = FreeAutomorphism::identity(alphabet);
  for (const auto& letter : braid) {
    result = compose(braid_generator(alphabet, letter.index, letter.sign), result);
  }
  return result;
}

const Alphabet& fiber_alphabet() {
  static const Alphabet alphabet({"x", "y", "z"});
  return alphabet;
}

const FreeAutomorphism& simplest_braid_monodromy() {
  static const FreeAutomorphism psi =
      braid_automorphism(fiber_alphabet(), {{1, +1}, {2, -1}});
  return psi;
}

}  // namespace fibernorm
