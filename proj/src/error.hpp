#pragma once

#include <stdexcept>
#include <string>

namespace ptx {

enum class Errc {
  CenterNotInFan,
  NonSmoothInput,
  NonCompleteInput,
  BasisModelMismatch,
  NotAWall,
  RayPermutationFailure,
  NonVdimZero,
  ParseError,
  InvalidArgument,
  Internal,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  int column;  // >= 0 only for parse errors

  Error(Errc c, const std::string& msg, int col = -1)
      : std::runtime_error(msg), code(c), column(col) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg, int col = -1) {
  throw Error(c, msg, col);
}

}  // namespace ptx
