#pragma once

#include <stdexcept>
#include <string>

namespace pln {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class ColorMismatch : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class MembershipError : public Error {
 public:
  using Error::Error;
};

class IncompatibleRadicands : public Error {
 public:
  using Error::Error;
};

// Raised by scalar traces on elements whose 0+ image is not a multiple of 1.
class NonScalarTrace : public Error {
 public:
  NonScalarTrace(const std::string& msg, std::string vector)
      : Error(msg), vector_(std::move(vector)) {}
  const std::string& vector() const { return vector_; }

 private:
  std::string vector_;
};

}  // namespace pln
