#include "strongcol/error.hpp"

namespace strongcol {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kBadVertexIndex: return "BadVertexIndex";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kPartialColouring: return "PartialColouring";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNotOuterplanar: return "NotOuterplanar";
    case ErrorCode::kNotTwoConnected: return "NotTwoConnected";
    case ErrorCode::kNotInducedCycle: return "NotInducedCycle";
    case ErrorCode::kMergeConflict: return "MergeConflict";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kApexOverlap: return "ApexOverlap";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kDocumentMismatch: return "DocumentMismatch";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, int line) {
  std::string out(to_string(code));
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

}  // namespace strongcol
