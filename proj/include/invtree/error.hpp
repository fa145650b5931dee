#pragma once

#include <stdexcept>
#include <string>

namespace invtree {

enum class Errc {
  parse_error,
  not_a_tree,
  invalid_vertex,
  same_vertex,
  not_perfect,
  not_invertible,
  singular,
  odd_order,
  bound_exceeded,
  not_spanning_tree_edge,
  edge_already_present,
  invalid_move,
  io_error,
};

const char* to_string(Errc code) noexcept;

/// Exception type for every recoverable failure in the library; `code()`
/// identifies the failure class so front ends can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace invtree
