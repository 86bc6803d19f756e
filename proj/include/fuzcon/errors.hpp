#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzcon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected,
              const std::string& found)
      : Error("syntax error at position " + std::to_string(position) +
              ": expected " + expected + ", found " + found),
        position_(position),
        expected_(expected) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

#define FUZCON_DEFINE_ERROR(Name) \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  };

FUZCON_DEFINE_ERROR(CoverageError)
FUZCON_DEFINE_ERROR(RangeError)
FUZCON_DEFINE_ERROR(ArityMismatch)
FUZCON_DEFINE_ERROR(KindMismatch)
FUZCON_DEFINE_ERROR(NotValidated)
FUZCON_DEFINE_ERROR(NotMonotone)
FUZCON_DEFINE_ERROR(ConstantFunction)
FUZCON_DEFINE_ERROR(NotContinuousNegation)
FUZCON_DEFINE_ERROR(InvalidNegation)
FUZCON_DEFINE_ERROR(AxiomsFailed)
FUZCON_DEFINE_ERROR(SignatureMismatch)
FUZCON_DEFINE_ERROR(UnknownTheorem)
FUZCON_DEFINE_ERROR(UnknownTarget)
FUZCON_DEFINE_ERROR(UnknownName)
FUZCON_DEFINE_ERROR(CatalogCorrupt)
FUZCON_DEFINE_ERROR(ConfigError)

#undef FUZCON_DEFINE_ERROR

}  // namespace fuzcon
