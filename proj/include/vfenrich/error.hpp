#ifndef VFENRICH_ERROR_HPP
#define VFENRICH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vfe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. Line and column are 1-based; 0 when the
/// problem is structural rather than tied to a character position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IntegrityError : public Error {
 public:
  IntegrityError(const std::string& what, std::string id)
      : Error(what), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class CycleError : public Error {
 public:
  explicit CycleError(std::vector<std::string> cycle);
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class FrameSyntaxError : public Error {
 public:
  using Error::Error;
};

class UnknownCodeError : public Error {
 public:
  explicit UnknownCodeError(std::string token)
      : Error("unknown complement code '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};

class CaseClashError : public Error {
 public:
  using Error::Error;
};

}  // namespace vfe

#endif  // VFENRICH_ERROR_HPP
