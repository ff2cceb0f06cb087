#ifndef LEXNET_ERRORS_HPP
#define LEXNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lexnet {

// Base of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or inconsistent input: files, formats, parameter ranges, degenerate
// data. The CLI maps these to exit code 2.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A caller broke an API precondition or an internal invariant failed.
// The CLI maps these to exit code 3.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class LanguageMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class EmptyDocument : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class TooManyLinks : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class EmptyGraph : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// No ordered pair of nodes is connected by a path (e.g. an edgeless graph).
class NoPaths : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A small-world ratio could not be formed (undefined L or zero denominator).
class UndefinedMeasure : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class IOError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class FormatError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DuplicateLabel : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class NodeOutOfRange : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace lexnet

#endif  // LEXNET_ERRORS_HPP
