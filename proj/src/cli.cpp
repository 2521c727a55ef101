#include "strongcol/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "strongcol/colourer.hpp"
#include "strongcol/error.hpp"
#include "strongcol/gen.hpp"
#include "strongcol/oracle.hpp"

namespace strongcol {

using Json = nlohmann::ordered_json;

std::string render_document(const ColouringDocument& doc) {
  Json edges = Json::array();
  for (const auto& e : doc.edges) edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"colour", e.colour}});
  Json j;
  j["edges"] = std::move(edges);
  j["num_colours"] = doc.num_colours;
  j["bound"] = Json{{"value", doc.bound_value}, {"exactness", std::string(to_string(doc.bound_exactness))}};
  Json meta;
  meta["input_hash"] = doc.input_hash;
  meta["tool_version"] = doc.tool_version;
  meta["seed"] = doc.seed ? Json(*doc.seed) : Json(nullptr);
  j["metadata"] = std::move(meta);
  return j.dump(2) + "\n";
}

ColouringDocument parse_document(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    ColouringDocument doc;
    for (const auto& e : j.at("edges")) {
      doc.edges.push_back(DocumentEdge{e.at("u").get<VertexId>(), e.at("v").get<VertexId>(), e.at("colour").get<Colour>()});
    }
    doc.num_colours = j.at("num_colours").get<int>();
    const auto& b = j.at("bound");
    doc.bound_value = b.at("value").get<int>();
    const auto ex = b.at("exactness").get<std::string>();
    if (ex == to_string(Exactness::kExact)) {
      doc.bound_exactness = Exactness::kExact;
    } else if (ex == to_string(Exactness::kUpper)) {
      doc.bound_exactness = Exactness::kUpper;
    } else {
      throw Error(ErrorCode::kParse, "unknown exactness '" + ex + "'");
    }
    const auto& meta = j.at("metadata");
    doc.input_hash = meta.at("input_hash").get<std::string>();
    doc.tool_version = meta.at("tool_version").get<std::string>();
    if (meta.contains("seed") && !meta.at("seed").is_null()) doc.seed = meta.at("seed").get<std::uint64_t>();
    return doc;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("colouring document: ") + e.what());
  }
}

std::string input_hash(const Graph& g) {
  std::ostringstream canonical;
  write_edge_list(canonical, g);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical.str()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << h;
  return hex.str();
}

EdgeColouring colouring_from_document(const Graph& g, const ColouringDocument& doc) {
  if (static_cast<EdgeId>(doc.edges.size()) != g.edge_count()) {
    throw Error(ErrorCode::kDocumentMismatch, "document has " + std::to_string(doc.edges.size()) +
                                                  " edges, graph has " + std::to_string(g.edge_count()));
  }
  EdgeColouring c(g.edge_count());
  for (const auto& de : doc.edges) {
    const auto e = (de.u >= 0 && de.v >= 0 && de.u < g.vertex_count() && de.v < g.vertex_count())
                       ? g.find_edge(de.u, de.v)
                       : std::nullopt;
    const std::string name = std::to_string(de.u) + "-" + std::to_string(de.v);
    if (!e) throw Error(ErrorCode::kDocumentMismatch, "edge " + name + " is not in the graph");
    if (c.coloured(*e)) throw Error(ErrorCode::kDocumentMismatch, "edge " + name + " listed twice");
    if (de.colour < 1) throw Error(ErrorCode::kParse, "edge " + name + " has colour " + std::to_string(de.colour));
    c.set(*e, de.colour);
  }
  return c;
}

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDisconnected:
    case ErrorCode::kNotOuterplanar:
    case ErrorCode::kEmptyGraph:
      return kExitNotOuterplanar;
    case ErrorCode::kParse:
    case ErrorCode::kDuplicateEdge:
    case ErrorCode::kSelfLoop:
    case ErrorCode::kBadVertexIndex:
    case ErrorCode::kDocumentMismatch:
    case ErrorCode::kBadParameter:
    case ErrorCode::kApexOverlap:
      return kExitUsage;
    default:
      return kExitInvalid;
  }
}

std::optional<std::uint64_t> seed_from_comments(const std::vector<std::string>& comments) {
  for (const auto& c : comments) {
    if (c.rfind("gen ", 0) != 0) continue;
    const auto at = c.find(" seed=");
    if (at == std::string::npos) continue;
    try {
      return std::stoull(c.substr(at + 6));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  f << text;
}

void print_violations(const Graph& g, const VerificationReport& r, std::ostream& out) {
  auto name = [&](EdgeId e) { return std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v); };
  for (const auto& v : r.violations) out << name(v.first) << ' ' << name(v.second) << ' ' << to_string(v.kind) << '\n';
}

struct ColourArgs {
  std::string input, output;
  bool check = false;
};

int cmd_colour(const ColourArgs& a, std::ostream& out, std::ostream& err) {
  const auto doc_in = read_edge_list_file(a.input);
  const Graph& g = doc_in.graph;
  const auto result = strong_colour(g);
  if (a.check) {
    const auto report = verify_strong(g, result.colouring);
    if (!report.valid) {
      err << "colouring failed verification\n";
      print_violations(g, report, err);
      return kExitInvalid;
    }
  }
  ColouringDocument doc;
  for (EdgeId e = 0; e < g.edge_count(); ++e) doc.edges.push_back({g.edge(e).u, g.edge(e).v, result.colouring[e]});
  doc.num_colours = result.colours_used;
  doc.bound_value = result.theorem_bound.value;
  doc.bound_exactness = result.theorem_bound.exactness;
  doc.input_hash = input_hash(g);
  doc.seed = seed_from_comments(doc_in.comments);
  write_text(a.output, render_document(doc), out);
  return kExitOk;
}

struct ExactArgs {
  std::string input;
  int max_colours = INT_MAX;
  double timeout_s = 10.0;
};

int cmd_exact(const ExactArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = read_edge_list_file(a.input).graph;
  const auto r = exact_sci(g, a.max_colours, a.timeout_s);
  switch (r.status) {
    case SearchStatus::kExact:
      out << r.value << '\n';
      return kExitOk;
    case SearchStatus::kTimeout:
      out << "timeout lower=" << r.lower << " upper=" << r.upper << '\n';
      return kExitTimeout;
    case SearchStatus::kAboveCap:
      err << "no strong colouring with at most " << a.max_colours << " colours\n";
      out << "above-cap lower=" << r.lower << '\n';
      return kExitInvalid;
  }
  return kExitInvalid;
}

struct VerifyArgs {
  std::string graph, document;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = read_edge_list_file(a.graph).graph;
  const auto doc = parse_document(read_file(a.document));
  const auto c = colouring_from_document(g, doc);
  const auto report = verify_strong(g, c);
  if (!report.valid) {
    err << report.violations.size() << " violating pairs\n";
    print_violations(g, report, out);
    return kExitInvalid;
  }
  if (report.colours_used != doc.num_colours) {
    err << "document claims " << doc.num_colours << " colours, found " << report.colours_used << '\n';
    return kExitInvalid;
  }
  out << "valid " << report.colours_used << " colours\n";
  return kExitOk;
}

struct GenArgs {
  std::string kind = "cycle", output;
  GenSpec spec;
};

int cmd_gen(GenArgs a, std::ostream& out) {
  if (a.kind == "cycle") {
    a.spec.kind = GenKind::kCycle;
  } else if (a.kind == "puffer") {
    a.spec.kind = GenKind::kPuffer;
    if (a.spec.pendants.empty()) a.spec.pendants.assign(static_cast<std::size_t>(std::max(a.spec.cycle_len, 0)), 0);
  } else {
    a.spec.kind = GenKind::kOuterplanar;
  }
  const Graph g = generate(a.spec);
  std::ostringstream text;
  const std::string header[] = {"gen " + a.spec.canonical()};
  write_edge_list(text, g, header);
  write_text(a.output, text.str(), out);
  return kExitOk;
}

struct BenchArgs {
  std::vector<int> sizes;
  std::uint64_t seed = 1;
  std::string csv;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  if (a.sizes.empty()) {
    err << "--sizes needs at least one value\n";
    return kExitUsage;
  }
  std::ostringstream csv;
  csv << "n,m,time_ms,colours,bound,lb\n";
  for (int n : a.sizes) {
    const Graph g = gen_outerplanar(n, n / 6, n / 4, false, a.seed);
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = strong_colour(g);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    csv << n << ',' << g.edge_count() << ',' << std::fixed << std::setprecision(3) << ms << ',' << r.colours_used
        << ',' << r.theorem_bound.value << ',' << r.theorem_bound.lower_bound << '\n';
  }
  write_text(a.csv, csv.str(), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong edge colouring of outerplanar graphs", args.empty() ? "strongcol" : args[0]};
  app.require_subcommand(1);

  ColourArgs colour;
  auto* c = app.add_subcommand("colour", "colour a connected outerplanar graph");
  c->add_option("input", colour.input, "edge list")->required();
  c->add_option("-o,--output", colour.output, "colouring document (stdout when absent)");
  c->add_flag("--check", colour.check, "verify the colouring before writing it");

  ExactArgs exact;
  auto* x = app.add_subcommand("exact", "strong chromatic index by exhaustive search");
  x->add_option("input", exact.input, "edge list")->required();
  x->add_option("--max-colours", exact.max_colours)->check(CLI::PositiveNumber);
  x->add_option("--timeout-s", exact.timeout_s)->check(CLI::NonNegativeNumber);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check a colouring document against an edge list");
  v->add_option("graph", verify.graph, "edge list")->required();
  v->add_option("document", verify.document, "colouring document")->required();

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "write a generated edge list");
  g->add_option("--kind", gen.kind)->check(CLI::IsMember({"cycle", "puffer", "outerplanar"}));
  g->add_option("--k", gen.spec.k);
  g->add_option("--cycle", gen.spec.cycle_len);
  g->add_option("--pendants", gen.spec.pendants)->delimiter(',');
  g->add_option("--apexes", gen.spec.apexes)->delimiter(',');
  g->add_option("--n", gen.spec.n);
  g->add_option("--faces", gen.spec.faces);
  g->add_option("--pendant-budget", gen.spec.pendant_budget);
  g->add_flag("--bipartite", gen.spec.bipartite);
  g->add_option("--seed", gen.spec.seed);
  g->add_option("-o,--output", gen.output);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "time the colouring driver on generated graphs");
  b->add_option("--sizes", bench.sizes)->delimiter(',');
  b->add_option("--seed", bench.seed);
  b->add_option("--csv", bench.csv, "csv path (stdout when absent)");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c) return cmd_colour(colour, out, err);
    if (*x) return cmd_exact(exact, out, err);
    if (*v) return cmd_verify(verify, out, err);
    if (*g) return cmd_gen(gen, out);
    if (*b) return cmd_bench(bench, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace strongcol
