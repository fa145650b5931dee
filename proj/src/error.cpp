#include "invtree/error.hpp"

namespace invtree {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::not_a_tree: return "NotATree";
    case Errc::invalid_vertex: return "InvalidVertex";
    case Errc::same_vertex: return "SameVertex";
    case Errc::not_perfect: return "NotPerfect";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::singular: return "Singular";
    case Errc::odd_order: return "OddOrder";
    case Errc::bound_exceeded: return "BoundExceeded";
    case Errc::not_spanning_tree_edge: return "NotSpanningTreeEdge";
    case Errc::edge_already_present: return "EdgeAlreadyPresent";
    case Errc::invalid_move: return "InvalidMove";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace invtree
