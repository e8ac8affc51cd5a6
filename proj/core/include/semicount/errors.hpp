#pragma once

#include <stdexcept>
#include <string>

namespace semicount {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Iterative method failed to converge or bracket.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A configured size or budget cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration or spec document.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace semicount
