#pragma once

#include <stdexcept>
#include <string>

namespace symcone {

// Raised when an argument lies outside the domain of an operation, e.g. ln of a
// boundary point or an eigensolver failure on an ill-conditioned block.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class StructureMismatch : public std::invalid_argument {
 public:
  explicit StructureMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

// Malformed structure specs, experiment configs and serialized inputs.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symcone
