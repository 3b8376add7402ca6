#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace nakaoka {

// Error taxonomy aligned with the CLI exit codes:
//   ParseError -> 2, LevelError/UnsupportedError -> 3, UndecidedError -> 4, ResourceError -> 5.

struct ParseError : std::runtime_error {
  std::size_t pos;  // 0-based offset into the input expression
  ParseError(const std::string& msg, std::size_t p) : std::runtime_error(msg), pos(p) {}
};

// Wrong level, wrong functor, mixed rings, unknown generator at a level.
struct LevelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter combinations outside the supported families (e.g. generator
// recursion for p > 3, fixed-point rings other than the three shipped ones).
struct UnsupportedError : LevelError {
  using LevelError::LevelError;
};

// A query whose answer the engine cannot certify either way.
struct UndecidedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degree cap or similar resource limit hit; message names the cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nakaoka
