#ifndef LENSALEX_ERRORS_HPP_
#define LENSALEX_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lensalex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact division was requested but the divisor does not divide the dividend
// in the Laurent ring.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at position " + std::to_string(position) + ": " +
              message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotAKnot : public Error {
 public:
  using Error::Error;
};

class InvalidSurgery : public Error {
 public:
  using Error::Error;
};

}  // namespace lensalex

#endif  // LENSALEX_ERRORS_HPP_
