#pragma once

#include <stdexcept>
#include <string>

namespace bmwb {

/// Malformed or out-of-range caller input (bad element id, invalid lambda, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Syntactic or semantic problems while reading an instance file.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or verification request exceeds the configured cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal contract violation (inverted interval bounds and the like).
class LogicError : public std::logic_error {
 public:
  explicit LogicError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bmwb
