#pragma once

#include <stdexcept>
#include <string>

namespace conceptdim {

// Base for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad arguments, malformed files, out-of-range indices.
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what) : Error(what) {}
};

// Unknown language, unparseable config file, bad config values.
class ConfigError : public InvalidInputError {
 public:
  explicit ConfigError(const std::string& what) : InvalidInputError(what) {}
};

// An enumeration or search exceeded its configured bound.
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

}  // namespace conceptdim
