#pragma once

#include <stdexcept>
#include <string>

namespace goldbach {

// Error taxonomy shared by every module. The CLI maps InvalidArgument and
// FormatError to a usage failure and the numeric ones to exit code 2.

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace goldbach
