#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace renq {

enum class ErrorKind {
  input = 1,
  model = 2,
  infeasible = 3,
  parse = 4,
  regime = 5,
  degenerate_encoding = 6,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& w) : Error(ErrorKind::input, w) {}
};

class ModelError : public Error {
 public:
  explicit ModelError(const std::string& w) : Error(ErrorKind::model, w) {}
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& w) : Error(ErrorKind::infeasible, w) {}
};

// `path` is the dotted location of the offending key, e.g. "ion.g_ground".
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& w)
      : Error(ErrorKind::parse, path.empty() ? w : path + ": " + w), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class RegimeError : public Error {
 public:
  explicit RegimeError(const std::string& w) : Error(ErrorKind::regime, w) {}
};

class DegenerateEncodingError : public Error {
 public:
  explicit DegenerateEncodingError(const std::string& w) : Error(ErrorKind::degenerate_encoding, w) {}
};

}  // namespace renq
