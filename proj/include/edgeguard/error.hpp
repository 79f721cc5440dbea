#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgeguard {

// Engineering failures. Scientific findings (conjecture violations, bound
// overruns) are returned as data and never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ValidationKind {
  TooFewVertices,
  RepeatedVertex,
  ConsecutiveCollinear,
  NotSimple,
};

const char* to_string(ValidationKind kind);

// Rejected polygon input. `indices` names the offending vertices (for
// RepeatedVertex / ConsecutiveCollinear) or edges (for NotSimple), in the
// numbering of the raw input.
class ValidationError : public Error {
 public:
  ValidationError(ValidationKind kind, std::vector<std::size_t> indices);

  ValidationKind kind() const { return kind_; }
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  ValidationKind kind_;
  std::vector<std::size_t> indices_;
};

class InvalidEdgeId : public Error {
 public:
  InvalidEdgeId(std::size_t id, std::size_t n);
};

class PointOutsidePolygon : public Error {
 public:
  using Error::Error;
};

class DegenerateSegment : public Error {
 public:
  DegenerateSegment() : Error("DegenerateSegment: segment endpoints coincide") {}
};

// Internal-consistency failure: a property the analysis relies on did not
// hold. Indicates a bug or an input outside the supported model.
class DefectError : public Error {
 public:
  using Error::Error;
};

// The vertex picked as closest dominating vertex of an edge does not see
// all of that edge.
class DominanceViolated : public DefectError {
 public:
  DominanceViolated(std::size_t edge, std::size_t vertex);
};

// Partitioning was asked to use chords that properly cross.
class CrossingChords : public DefectError {
 public:
  CrossingChords(std::size_t first, std::size_t second);
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace edgeguard
