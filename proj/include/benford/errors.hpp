#pragma once

#include <stdexcept>
#include <string>

namespace benford {

// Invalid argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure could not certify its tolerance within its guard.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input exceeds a cost guard (oracle sizes, grid sizes, H limits).
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Inconsistent experiment or command configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace benford
