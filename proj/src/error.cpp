#include "edgeguard/error.hpp"

namespace edgeguard {

const char* to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::TooFewVertices:
      return "TooFewVertices";
    case ValidationKind::RepeatedVertex:
      return "RepeatedVertex";
    case ValidationKind::ConsecutiveCollinear:
      return "ConsecutiveCollinear";
    case ValidationKind::NotSimple:
      return "NotSimple";
  }
  return "?";
}

namespace {

std::string describe(ValidationKind kind, const std::vector<std::size_t>& idx) {
  std::string msg = to_string(kind);
  switch (kind) {
    case ValidationKind::TooFewVertices:
      return msg + ": a polygon needs at least 3 vertices";
    case ValidationKind::RepeatedVertex:
      msg += ": vertices";
      break;
    case ValidationKind::ConsecutiveCollinear:
      msg += ": vertex";
      break;
    case ValidationKind::NotSimple:
      msg += ": edges";
      break;
  }
  for (std::size_t k = 0; k < idx.size(); ++k) {
    msg += (k == 0 ? " " : " and ") + std::to_string(idx[k]);
  }
  return msg;
}

}  // namespace

ValidationError::ValidationError(ValidationKind kind,
                                 std::vector<std::size_t> indices)
    : Error(describe(kind, indices)), kind_(kind), indices_(std::move(indices)) {}

InvalidEdgeId::InvalidEdgeId(std::size_t id, std::size_t n)
    : Error("InvalidEdgeId: " + std::to_string(id) + " (polygon has " +
            std::to_string(n) + " edges)") {}

DominanceViolated::DominanceViolated(std::size_t edge, std::size_t vertex)
    : DefectError("DominanceViolated: vertex " + std::to_string(vertex) +
                  " does not see all of edge " + std::to_string(edge)) {}

CrossingChords::CrossingChords(std::size_t first, std::size_t second)
    : DefectError("CrossingChords: chords " + std::to_string(first) + " and " +
                  std::to_string(second) + " cross") {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace edgeguard
