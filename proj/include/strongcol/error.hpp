#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strongcol {

enum class ErrorCode {
  kDuplicateEdge,
  kSelfLoop,
  kBadVertexIndex,
  kParse,
  kEmptyGraph,
  kPartialColouring,
  kDisconnected,
  kNotOuterplanar,
  kNotTwoConnected,
  kNotInducedCycle,
  kMergeConflict,
  kBadParameter,
  kApexOverlap,
  kNotBipartite,
  kDocumentMismatch,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports is an Error carrying a code. Input errors
// that come from a text source also carry the 1-based line number.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace strongcol
