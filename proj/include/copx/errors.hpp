#pragma once

#include <stdexcept>
#include <string>

namespace copx {

// Malformed textual/JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector/matrix length mismatch between operands.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size cap would be exceeded. Message names the cap and the
// requested size so callers can report it verbatim.
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex enumeration of an unbounded system without a box. Carries a textual
// recession-ray witness.
class UnboundedError : public std::runtime_error {
 public:
  UnboundedError(const std::string& msg, std::string ray_text)
      : std::runtime_error(msg + " (ray " + ray_text + ")"), ray_(std::move(ray_text)) {}
  const std::string& ray_text() const { return ray_; }

 private:
  std::string ray_;
};

}  // namespace copx
