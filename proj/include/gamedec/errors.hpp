#pragma once

#include <stdexcept>
#include <string>

namespace gamedec {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated operation contract: dimension mismatch, index out of range,
// invalid probability vector.
struct contract_error : error {
  using error::error;
};

// Unsatisfied documented precondition, e.g. a sum constant K that does not
// exceed every payoff magnitude.
struct precondition_error : error {
  using error::error;
};

// Input that cannot be what the caller claims it is (e.g. projecting a
// strategy pair that is not an equilibrium of a sum game).
struct invalid_input_error : error {
  using error::error;
};

// Internal consistency failure. Always a bug, never a user error.
struct invariant_error : error {
  using error::error;
};

// Generator configuration that cannot produce a valid game.
struct config_error : error {
  using error::error;
};

// Malformed text or JSON input. line/column are 1-based, 0 when unknown.
struct parse_error : error {
  parse_error(const std::string& msg, int line_ = 0, int column_ = 0)
      : error(msg), line(line_), column(column_) {}
  int line;
  int column;
};

}  // namespace gamedec
