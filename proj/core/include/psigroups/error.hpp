#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psigroups {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group expression; `offset` is the byte position of the fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Constructor parameter outside its domain, or order above the table limit.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A multiplication table (or GT1 text) that does not describe a group.
class InvalidTable : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotPGroup : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NotCp2 : public Error {
 public:
  using Error::Error;
};

/// A recursion or comparison whose hypotheses do not hold for the input.
class Inapplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace psigroups
