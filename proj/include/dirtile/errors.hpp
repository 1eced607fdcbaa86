#pragma once

#include <stdexcept>
#include <string>

namespace dirtile {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built for different m.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the supported range (m < 3, bad index, bound exceeded).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

class NotRealizableError : public Error {
 public:
  NotRealizableError(int tile, const std::string& what) : Error(what), tile_(tile) {}
  int tile() const { return tile_; }

 private:
  int tile_;
};

class StabilizerError : public Error {
 public:
  using Error::Error;
};

class SchemeError : public Error {
 public:
  using Error::Error;
};

class NoPathError : public Error {
 public:
  using Error::Error;
};

// Malformed input document; message carries the offending field path.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace dirtile
