#pragma once

#include <stdexcept>
#include <string>

namespace bih {

enum class ErrorKind {
  Domain,                // point or stencil leaves a non-periodic chart domain
  UnsupportedOrder,      // jet order outside 1..4
  DegenerateImmersion,   // rank-deficient differential / singular metric
  Frame,                 // normal frame construction failed (pivot underflow)
  Precondition,          // operation preconditions violated (CMC, minimality, ...)
  Embedding,             // image not on the declared sphere
  Config,                // malformed scenario / CLI input
  Engine,                // internal failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_error(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace bih
