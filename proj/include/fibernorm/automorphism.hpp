#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fibernorm/word.hpp"

namespace fibernorm {

// An endomorphism of the free group on `alphabet`, given by the images of
// the generators. It may carry an attached inverse; automorphisms built from
// braid generators always do, and user-supplied data may provide one.
//
// Composition convention: compose(f, g) is the map w -> f(g(w)), so g acts
// first. A braid word acts leftmost letter first, which makes the braid
// sigma_1 sigma_2^-1 equal to compose(sigma_2^-1, sigma_1).
class FreeAutomorphism {
 public:
  FreeAutomorphism() = default;
  FreeAutomorphism(Alphabet alphabet, std::vector<Word> images);
  // Attaches a user-supplied inverse; throws DomainError unless both
  // composites fix every generator.
  FreeAutomorphism(Alphabet alphabet, std::vector<Word> images, std::vector<Word> inverse_images);

  static FreeAutomorphism identity(const Alphabet& alphabet);
  // images given as generator name -> serialized word.
  static FreeAutomorphism from_strings(const Alphabet& alphabet,
                                       const std::map<std::string, std::string>& images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t rank() const noexcept { return alphabet_.size(); }
  const Word& image(std::size_t generator) const { return images_->at(generator); }
  const std::vector<Word>& images() const noexcept { return *images_; }

  bool has_inverse() const noexcept { return static_cast<bool>(inverse_images_); }
  // Throws InversionUnavailable.
  const std::vector<Word>& inverse_images() const;

  bool is_identity() const;

  // Images compared; attached inverses are determined by the images.
  bool operator==(const FreeAutomorphism& other) const {
    return alphabet_ == other.alphabet_ && *images_ == *other.images_;
  }

 private:
  struct Unchecked {};
  FreeAutomorphism(Unchecked, Alphabet alphabet, std::shared_ptr<const std::vector<Word>> images,
                   std::shared_ptr<const std::vector<Word>> inverse_images);

  friend FreeAutomorphism compose(const FreeAutomorphism&, const FreeAutomorphism&, const Budget&);
  friend FreeAutomorphism invert(const FreeAutomorphism&);
  friend FreeAutomorphism braid_generator(const Alphabet&, std::size_t, int);

  Alphabet alphabet_;
  std::shared_ptr<const std::vector<Word>> images_ = std::make_shared<const std::vector<Word>>();
  std::shared_ptr<const std::vector<Word>> inverse_images_;
};

// Substitutes images and freely reduces on the fly. Throws
// UnknownGenerator for letters outside the alphabet, BudgetExceeded when the
// running result outgrows the budget.
Word apply(const FreeAutomorphism& a, const Word& w, const Budget& budget = {});
// Substitutes the attached inverse images. Throws InversionUnavailable.
Word apply_inverse(const FreeAutomorphism& a, const Word& w, const Budget& budget = {});
// a^n(w) computed one application at a time; n may be negative.
Word iterate(const FreeAutomorphism& a, const Word& w, std::int64_t n, const Budget& budget = {});

// (f o g)(w) = f(g(w)). Throws AlphabetMismatch.
FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g,
                         const Budget& budget = {});
// Throws InversionUnavailable when no inverse is attached.
FreeAutomorphism invert(const FreeAutomorphism& a);
FreeAutomorphism power(const FreeAutomorphism& a, std::int64_t n, const Budget& budget = {});

// One Artin generator sigma_i^{sign} (1-based i) acting on the free group on
// `alphabet` (the based loops around the punctures, in order):
//   sigma_i:      x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
//   sigma_i^-1:   x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
FreeAutomorphism braid_generator(const Alphabet& alphabet, std::size_t i, int sign);

struct BraidLetter {
  std::size_t index;  // 1-based
  int sign;
};

// The automorphism of a braid word, leftmost letter acting first.
FreeAutomorphism braid_automorphism(const Alphabet& alphabet, const std::vector<BraidLetter>& braid);

// The fiber alphabet {x, y, z} of the thrice punctured disk.
const Alphabet& fiber_alphabet();
// The monodromy of the simplest pseudo-Anosov braid sigma_1 sigma_2^-1:
//   x -> y z y^-1,  y -> y z^-1 y^-1 x y z y^-1,  z -> y
const FreeAutomorphism& simplest_braid_monodromy();

}  // namespace fibernorm
