#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fivelist/validity.hpp"

namespace fivelist {

/// Malformed instance text. `line()` is 1-based; 0 means the problem is
/// semantic and not tied to one line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Line-based instance format:
///
///   GRAPH <n>
///   ROT <v>: <w1> <w2> ...     counterclockwise neighbor order
///   OUTER <v> <w>              outer face = face left of dart v->w; one per component
///   CROSS <a> <b> <c> <d>      edge ab crosses edge cd, a c b d counterclockwise
///   LIST <v>: <c1> <c2> ...
///   PATH <v0> <v1> ...
///   NSET <v> ...
///   MSET <u> <v>               repeatable
///
/// `#` starts a comment. Lists are deduplicated and sorted on input.
Instance parse_instance(std::string_view text);

/// Canonical text: rotations start at the smallest neighbor, crossings in
/// index order written from their smallest endpoint, every vertex gets a
/// LIST line.
std::string serialize_instance(const Instance& inst);

}  // namespace fivelist
