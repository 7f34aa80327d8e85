#pragma once

#include <stdexcept>
#include <string>

namespace gmmn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input data or unreadable files. CLI exit code 1.
struct ParseError : Error {
  using Error::Error;
};

struct OverflowRisk : ParseError {
  using ParseError::ParseError;
};

// The instance is outside the class a solver accepts. CLI exit code 2.
struct WrongClass : Error {
  using Error::Error;
};

struct NotATree : WrongClass {
  using WrongClass::WrongClass;
};

struct NotAPseudotree : WrongClass {
  using WrongClass::WrongClass;
};

struct TriangleFound : WrongClass {
  using WrongClass::WrongClass;
};

// A configured resource limit would be exceeded. CLI exit code 3.
struct CapExceeded : Error {
  using Error::Error;
};

struct WidthCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};

struct CandidateCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};

struct ForestAssertionFailed : Error {
  using Error::Error;
};

struct GenerationFailed : Error {
  using Error::Error;
};

}  // namespace gmmn
