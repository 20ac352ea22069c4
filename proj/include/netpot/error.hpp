#pragma once

#include <stdexcept>
#include <string>

namespace netpot {

enum class ErrorKind {
  parse,
  asymmetric_weight,
  self_loop,
  non_positive_weight,
  disconnected,
  vertex_cap,
  unknown_vertex,
  invalid_argument,
  solver,
  contract,
  overlap,
  not_a_tree,
  io,
};

/// Library-wide exception. `kind()` lets callers and tests branch on the
/// failure class without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace netpot
