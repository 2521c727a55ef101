#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strongcol/graph.hpp"
#include "strongcol/puffer.hpp"

namespace strongcol {

inline constexpr std::string_view kToolVersion = "0.3.0";

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,         // verification failed, or an internal error
  kExitNotOuterplanar = 2,  // also disconnected or empty input
  kExitUsage = 3,           // parse errors, bad flags, document mismatch
  kExitTimeout = 4,
};

struct DocumentEdge {
  VertexId u = 0;
  VertexId v = 0;
  Colour colour = kNoColour;
};

struct ColouringDocument {
  std::vector<DocumentEdge> edges;
  int num_colours = 0;
  int bound_value = 0;
  Exactness bound_exactness = Exactness::kUpper;
  std::string input_hash;  // FNV-1a 64 of the canonical edge list, hex
  std::string tool_version{kToolVersion};
  std::optional<std::uint64_t> seed;
};

// Two-space indented JSON with a fixed key order and a trailing newline.
std::string render_document(const ColouringDocument& doc);
// Throws kParse on malformed JSON or missing fields.
ColouringDocument parse_document(std::string_view text);

std::string input_hash(const Graph& g);

// Matches the document's edges to g's edges as unordered pairs. Throws
// kDocumentMismatch unless the two edge sets coincide.
EdgeColouring colouring_from_document(const Graph& g, const ColouringDocument& doc);

// argv[0] is the program name. Never throws; failures become exit codes with
// a message on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strongcol
