#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidforce {

// Malformed braid-word text. The message names the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& token, const std::string& reason)
      : std::invalid_argument("cannot parse token '" + token + "': " + reason),
        token_(token) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

// Inputs that are well-formed but violate an operation's precondition
// (strand-count mismatch, index out of range, trivial braid, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource budget was exceeded. This is never a wrong answer:
// callers must treat it as "undecided".
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& budget, std::size_t limit)
      : std::runtime_error("resource budget '" + budget + "' exceeded (limit " +
                           std::to_string(limit) + ")"),
        budget_(budget),
        limit_(limit) {}
  const std::string& budget() const noexcept { return budget_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string budget_;
  std::size_t limit_;
};

}  // namespace braidforce
