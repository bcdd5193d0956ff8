#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gstab {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed text input (graph, representation or layout files).
struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

/// A precondition on the input of an operation does not hold.
struct InvalidInput : Error {
  using Error::Error;
};

/// The representation does not cover exactly the vertex set of the graph.
struct VertexMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct OddCycle : Error {
  explicit OddCycle(std::vector<int> cycle)
      : Error("graph is not bipartite (odd cycle of length " +
              std::to_string(cycle.size()) + ")"),
        witness(std::move(cycle)) {}
  std::vector<int> witness;
};

/// Two parallel segments share more than one point.
struct SameOrientationOverlap : Error {
  using Error::Error;
};

struct EqualAnchors : Error {
  using Error::Error;
};

struct SizeLimitExceeded : Error {
  SizeLimitExceeded(std::size_t n, std::size_t limit)
      : Error("graph has " + std::to_string(n) + " vertices, search limit is " +
              std::to_string(limit)),
        vertices(n),
        limit(limit) {}
  std::size_t vertices;
  std::size_t limit;
};

/// A grounded representation of a bipartite graph is not nice: some A-vertex
/// is met on its vertical segment (or some B-vertex on its horizontal one).
struct NotNice : Error {
  NotNice(const std::string& what, std::vector<std::pair<int, int>> offending)
      : Error(what), pairs(std::move(offending)) {}
  std::vector<std::pair<int, int>> pairs;
};

struct WrongParity : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// Two same-page intervals of a two-page layout cross.
struct CrossingPair : InvalidInput {
  CrossingPair(std::pair<int, int> first, std::pair<int, int> second,
               std::string page)
      : InvalidInput("edges " + std::to_string(first.first) + "-" +
                     std::to_string(first.second) + " and " +
                     std::to_string(second.first) + "-" +
                     std::to_string(second.second) + " cross on the " + page +
                     " page"),
        e1(first),
        e2(second),
        page(std::move(page)) {}
  std::pair<int, int> e1, e2;
  std::string page;
};

struct Unassigned : InvalidInput {
  explicit Unassigned(std::pair<int, int> edge)
      : InvalidInput("edge " + std::to_string(edge.first) + "-" +
                     std::to_string(edge.second) +
                     " has no page assignment"),
        e(edge) {}
  std::pair<int, int> e;
};

}  // namespace gstab
