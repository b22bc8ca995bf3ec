#pragma once

#include <stdexcept>
#include <string>

namespace fishlab {

/// Malformed arguments: empty input, out-of-range parameters, n = 0.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed object that lies outside the domain of the requested map.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Relation data that does not describe a factorial poset.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A request that exceeds a hard enumeration limit.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace fishlab
