#pragma once

#include <stdexcept>
#include <string>

namespace ncpoly {

// Base of all library errors. `code()` is the stable machine-readable name
// used by the CLI when mapping failures to exit codes and messages.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct InvalidOffsetError : Error {
  explicit InvalidOffsetError(const std::string& m) : Error("invalid-offset", m) {}
};

struct InvalidVertexError : Error {
  explicit InvalidVertexError(const std::string& m) : Error("invalid-vertex", m) {}
};

struct SizeLimitError : Error {
  explicit SizeLimitError(const std::string& m) : Error("size-limit", m) {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& m) : Error("shape", m) {}
};

struct UnboundedPolytopeError : Error {
  explicit UnboundedPolytopeError(const std::string& m) : Error("unbounded-polytope", m) {}
};

struct DegeneratePolytopeError : Error {
  explicit DegeneratePolytopeError(const std::string& m) : Error("degenerate-polytope", m) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error("domain", m) {}
};

struct ConsistencyError : Error {
  explicit ConsistencyError(const std::string& m) : Error("consistency", m) {}
};

struct UnsupportedScenarioError : Error {
  explicit UnsupportedScenarioError(const std::string& m) : Error("unsupported-scenario", m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("parse", m) {}
};

}  // namespace ncpoly
