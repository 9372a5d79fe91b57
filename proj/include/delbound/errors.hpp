#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace delbound {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration would exceed its configured cap. Enumerations are exact or
/// absent, never truncated.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : std::runtime_error(what + " (requires " + std::to_string(required) +
                           ", cap " + std::to_string(cap) + ")"),
        required_(required),
        cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// Both candidate deletions in a Delete step produce equally long matches.
class AmbiguousDeletion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The pair is not in the image of the edge constructor.
class NotDeconstructable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace delbound
