#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibernorm {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A resource condition, never a mathematical answer: the computation would
// have needed more letters than the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t needed, std::size_t limit)
      : Error("letter budget exceeded: needed more than " +
              std::to_string(limit) + " letters (reached " +
              std::to_string(needed) + ")"),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator '" + name + "'") {}
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class InversionUnavailable : public Error {
 public:
  InversionUnavailable()
      : Error("automorphism has no attached inverse or braid factorization") {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NoRoot : public Error {
 public:
  using Error::Error;
};

class RecoveryFailure : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// Letter budget applied uniformly to every operation that can grow words.
struct Budget {
  std::size_t max_letters = std::size_t{1} << 27;
};

}  // namespace fibernorm
