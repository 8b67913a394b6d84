#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hitbox {

/// Precondition of a mathematical operation violated (zero denominator,
/// constant polynomial where a degree is required, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A configured size bound was exceeded.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial, rational or permutation text.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// Fixture or configuration content rejected by validation.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace hitbox
