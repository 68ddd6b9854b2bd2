#pragma once

#include <stdexcept>

namespace btwc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid parameter: out-of-range vertex, self-loop, family minimum violated.
struct ParamError : Error {
  using Error::Error;
};

// Malformed spec string or edge-list text.
struct ParseError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// Input graph lacks the required structure (e.g. not a tree).
struct StructureError : Error {
  using Error::Error;
};

// Instance exceeds a configured size cap.
struct SizeError : Error {
  using Error::Error;
};

}  // namespace btwc
