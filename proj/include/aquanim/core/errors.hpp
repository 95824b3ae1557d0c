#pragma once

#include <stdexcept>
#include <string>

namespace aquanim {

// Base of every error the engine raises. Subclasses are distinguished so the
// CLI and the HTTP layer can map them onto exit codes and status codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain error"; }
};

// Vectors that should line up do not.
class ShapeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "shape error"; }
};

// Endpoints of a transition do not hold the same amount of liquid.
class ConservationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "conservation error"; }
};

// Malformed input data (CSV or out-of-range samples).
class IngestionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ingestion error"; }
};

// Document is not well-formed JSON. `position` is a byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  const char* kind() const noexcept override { return "syntax error"; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed document with the wrong structure. `path` locates the field,
// e.g. "segments[2].area".
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(path) {}
  const char* kind() const noexcept override { return "schema error"; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Structurally valid value that breaks a model invariant (duplicate ids,
// dangling references, stack gaps).
class InvariantError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invariant violation"; }
};

// Planner parameters that do not make sense for the given scene.
class ParameterError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parameter error"; }
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "unsupported"; }
};

class RenderError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "render error"; }
};

}  // namespace aquanim
