#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adorn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax or semantic error in presentation text; `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A resource cap (cosets, deductions, search budget) was reached.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InfiniteIndex : public Error {
 public:
  using Error::Error;
};

class IncompleteTable : public Error {
 public:
  using Error::Error;
};

class NotKnotLike : public Error {
 public:
  using Error::Error;
};

class DeficiencyMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrbifold : public Error {
 public:
  using Error::Error;
};

class CannotCertifyFactorTriviality : public Error {
 public:
  using Error::Error;
};

class UnknownSolvabilityStep : public Error {
 public:
  using Error::Error;
};

}  // namespace adorn
