#pragma once

#include <stdexcept>
#include <string>

namespace feyngraph {

/// Enumeration ground set exceeds the configured capacity ceiling.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A moment oracle cannot supply the requested tuple order.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid arguments: mismatched ground sets, non-bijective
/// relabelings, order-incompatible series, malformed blocks.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed external configuration (measure files, CLI schemas).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace feyngraph
