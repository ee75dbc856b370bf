#pragma once

#include <stdexcept>
#include <string>

namespace canonwit {

enum class ErrorKind {
  kMalformedInput,
  kResourceLimit,
  kInsufficientInput,
};

// Every failure the library reports is one of these; callers branch on kind()
// so that "absent" is never confused with "could not decide".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& what)
      : Error(ErrorKind::kMalformedInput, what) {}
};

class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(const std::string& what)
      : Error(ErrorKind::kResourceLimit, what) {}
};

class InsufficientInput : public Error {
 public:
  explicit InsufficientInput(const std::string& what)
      : Error(ErrorKind::kInsufficientInput, what) {}
};

}  // namespace canonwit
