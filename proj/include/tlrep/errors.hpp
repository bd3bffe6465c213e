#pragma once

#include <stdexcept>
#include <string>

namespace tlrep {

/// A label triple (or network) that violates parity, triangle, or the
/// root-of-unity cutoff.
class InadmissibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a constructed object fails its own consistency assertion
/// (realness, orthogonality). Never silently recovered from.
class ConventionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user text (braid words, label lists, grids). Carries the 1-based
/// token position when one applies, 0 otherwise.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int token = 0)
      : std::invalid_argument(what), token_(token) {}
  int token() const noexcept { return token_; }

 private:
  int token_;
};

}  // namespace tlrep
