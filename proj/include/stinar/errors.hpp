#pragma once

#include <stdexcept>
#include <string>

namespace stinar {

/// Parameter outside its mathematical domain (negative mean, inadmissible
/// thinning value, ...). CLI maps this to exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Unreadable or malformed input (series files, config files). Exit code 3.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Data that carries no usable signal (constant series, empty series).
/// Exit code 4.
class DegenerateDataError : public std::runtime_error {
 public:
  explicit DegenerateDataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stinar
