#pragma once

#include <stdexcept>
#include <string>

namespace rwdist {

enum class Errc {
  SizeMismatch,
  BadIndices,
  ParseError,
  OutOfRange,
  Duplicate,
  BadSize,
  NonpositiveWeight,
  EqualSides,
  TooLarge,
  NotGenerated,
  TooFew,
  DuplicateLabel,
  NoAdjacentGenerators,
  NotConfluent,
  BadRule,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Errors caused by malformed user input rather than a failed computation.
bool is_usage_error(Errc code) noexcept;

}  // namespace rwdist
