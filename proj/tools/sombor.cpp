// sombor — compute degree-based topological indices, verify inequality
// families over graph corpora, enumerate small graphs, and compare closed
// forms against direct computation.
//
// Subcommands:
//   compute    index tables (CSV/JSON) for input graphs
//   verify     run bound checkers over a corpus; exit 1 on any violation
//   enumerate  exhaustive small-graph corpora as graph6 lines
//   families   closed form vs direct value for classic families
//
// Exit codes: 0 success / all bounds hold; 1 at least one bound violation;
// 2 usage or input error.  Machine output (CSV/JSON) goes to stdout or
// --output and is byte-deterministic; progress and summaries go to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sombor/sombor.hpp"

namespace {

using namespace sombor;

// --- input loading -----------------------------------------------------------

/// Read a whole file or fail with a message naming it.
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Graph input files carry either graph6 lines (one graph per line, optional
/// ">>graph6<<" header) or a single edge-list graph ("n m" header line, then
/// edges).  Sniff: a ">>graph6<<" header decides immediately; otherwise the
/// first non-whitespace byte of a graph6 line is at least '?' (63), while an
/// edge list starts with a digit or a '#' comment.
bool looks_like_graph6(const std::string& text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    if (text.compare(i, 10, ">>graph6<<") == 0) return true;
    return static_cast<unsigned char>(c) >= 63;
  }
  return false;
}

std::vector<Graph> load_graph_file(const std::string& path) {
  const std::string text = slurp(path);
  std::vector<Graph> graphs;
  if (looks_like_graph6(text)) {
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string trimmed = line;
      trimmed.erase(0, trimmed.find_first_not_of(" \t"));
      trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
      if (trimmed.empty() || trimmed == ">>graph6<<") continue;  // bare header line
      try {
        graphs.push_back(parse_graph6(trimmed));
      } catch (const Graph6ParseError& e) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
  } else {
    try {
      graphs.push_back(parse_edge_list(text));
    } catch (const EdgeListParseError& e) {
      throw std::runtime_error(path + ":" + std::to_string(e.line()) + ": " + e.what());
    }
  }
  if (graphs.empty()) throw std::runtime_error(path + ": no graphs found");
  return graphs;
}

/// The named family with the given integer parameters (the CLI face of the
/// family generators).
Graph graph_from_family(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family " + name + " takes " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (name == "complete") { need(1); return make_complete(params[0]); }
  if (name == "empty") { need(1); return make_empty(params[0]); }
  if (name == "path") { need(1); return make_path(params[0]); }
  if (name == "cycle") { need(1); return make_cycle(params[0]); }
  if (name == "star") {
    if (params.size() == 2 && params[0] == 1) return make_star(params[1]);
    need(1);
    return make_star(params[0]);
  }
  if (name == "complete_bipartite") { need(2); return make_complete_bipartite(params[0], params[1]); }
  throw std::invalid_argument("unknown family: " + name);
}

// --- option plumbing ----------------------------------------------------------

AlphaGrid grid_from_option(const std::vector<double>& alphas) {
  return alphas.empty() ? AlphaGrid::default_grid() : AlphaGrid(alphas);
}

void write_output(const std::string& document, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << document;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::runtime_error(output_path + ": cannot open for writing");
  out << document;
  if (!out) throw std::runtime_error(output_path + ": write failed");
}

std::string json_text(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

struct EnumerateSource {
  int n = 0;
  bool connected = false;
  bool dedup = false;
};

/// "n=<k>" option values for enumeration-backed corpora.
EnumerateSource parse_enumerate_spec(const std::string& s, bool connected, bool dedup) {
  if (s.rfind("n=", 0) != 0) throw std::invalid_argument("expected n=<k>, got '" + s + "'");
  EnumerateSource src;
  src.n = static_cast<int>(parse_double(s.substr(2)));
  if (std::to_string(src.n) != s.substr(2))
    throw std::invalid_argument("expected n=<k> with integer k, got '" + s + "'");
  src.connected = connected;
  src.dedup = dedup;
  return src;
}

struct RandomSource {
  int n = 0;
  double p = 0;
  int count = 0;
};

/// "n,p,count" for seeded random corpora.
RandomSource parse_random_spec(const std::string& s) {
  const auto c1 = s.find(',');
  const auto c2 = c1 == std::string::npos ? std::string::npos : s.find(',', c1 + 1);
  if (c2 == std::string::npos)
    throw std::invalid_argument("expected n,p,count, got '" + s + "'");
  RandomSource src;
  src.n = static_cast<int>(parse_double(s.substr(0, c1)));
  src.p = parse_double(s.substr(c1 + 1, c2 - c1 - 1));
  src.count = static_cast<int>(parse_double(s.substr(c2 + 1)));
  if (src.n < 1 || src.count < 1)
    throw std::invalid_argument("random corpus needs n >= 1 and count >= 1");
  return src;
}

// --- subcommands ----------------------------------------------------------------

struct ComputeArgs {
  std::vector<std::string> inputs;
  std::string family;
  std::vector<int> params;
  std::vector<double> alphas;
  std::string format = "csv";
  std::string output;
};

int run_compute(const ComputeArgs& args) {
  std::vector<Graph> graphs;
  for (const auto& path : args.inputs)
    for (auto& g : load_graph_file(path)) graphs.push_back(std::move(g));
  if (!args.family.empty()) graphs.push_back(graph_from_family(args.family, args.params));
  if (graphs.empty()) throw std::runtime_error("compute: no input graphs (use --input or --family)");
  const AlphaGrid grid = grid_from_option(args.alphas);
  std::vector<IndexRow> rows;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (auto& row : index_rows(graphs[i], static_cast<long long>(i), grid))
      rows.push_back(std::move(row));
  write_output(args.format == "json" ? json_text(index_json(rows)) : index_csv(rows),
               args.output);
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> inputs;
  std::string enumerate_spec;
  bool connected = false;
  bool dedup = false;
  std::string random_spec;
  std::uint64_t seed = 42;
  std::vector<double> alphas;
  std::vector<std::string> bounds;
  std::string format = "csv";
  std::string output;
  bool witnesses = false;
  bool self_test_corrupt = false;
};

int run_verify(const VerifyArgs& args) {
  const int sources = (!args.inputs.empty() ? 1 : 0) + (!args.enumerate_spec.empty() ? 1 : 0) +
                      (!args.random_spec.empty() ? 1 : 0);
  if (sources != 1)
    throw std::invalid_argument(
        "verify: exactly one corpus source (--input, --enumerate, or --random)");

  VerifyOptions options;
  options.grid = grid_from_option(args.alphas);
  options.bounds = args.bounds;
  options.corrupt_aux_zagreb = args.self_test_corrupt;

  GraphProducer producer;
  std::optional<EnumerationCursor> cursor;
  if (!args.enumerate_spec.empty()) {
    const EnumerateSource src =
        parse_enumerate_spec(args.enumerate_spec, args.connected, args.dedup);
    EnumerationSpec spec;
    spec.n = src.n;
    spec.connected_only = src.connected;
    spec.dedup_isomorphism = src.dedup;
    cursor.emplace(spec);  // validates the cap
    producer = [&cursor]() { return cursor->next(); };
  } else if (!args.random_spec.empty()) {
    const RandomSource src = parse_random_spec(args.random_spec);
    auto state = std::make_shared<int>(0);
    const std::uint64_t seed = args.seed;
    producer = [src, seed, state]() -> std::optional<Graph> {
      if (*state >= src.count) return std::nullopt;
      return random_graph(src.n, src.p, seed + static_cast<std::uint64_t>((*state)++));
    };
  } else {
    std::vector<Graph> graphs;
    for (const auto& path : args.inputs)
      for (auto& g : load_graph_file(path)) graphs.push_back(std::move(g));
    producer = producer_from_vector(std::move(graphs));
  }

  const auto reports = verify_corpus(std::move(producer), options);

  for (const auto& report : reports) std::cerr << report_summary_line(report) << '\n';
  if (reports.empty())
    std::cerr << "no applicable (bound, alpha) combinations for this grid\n";
  else
    std::cerr << "runtime: " << format_double(reports.front().runtime_seconds) << " s\n";

  write_output(args.format == "json" ? json_text(verify_json(reports, args.witnesses))
                                     : verify_csv(reports, args.witnesses),
               args.output);
  return any_violations(reports) ? 1 : 0;
}

struct EnumerateArgs {
  std::string spec;
  bool connected = false;
  bool dedup = false;
  std::string output;
};

int run_enumerate(const EnumerateArgs& args) {
  const EnumerateSource src = parse_enumerate_spec(args.spec, args.connected, args.dedup);
  EnumerationSpec spec;
  spec.n = src.n;
  spec.connected_only = src.connected;
  spec.dedup_isomorphism = src.dedup;
  EnumerationCursor cursor(spec);
  std::string out;
  while (auto g = cursor.next()) {
    out += serialize_graph6(*g);
    out += '\n';
  }
  write_output(out, args.output);
  return 0;
}

struct FamiliesArgs {
  std::string family;
  std::vector<int> params;
  std::vector<double> alphas;
  std::string format = "csv";
  std::string output;
};

int run_families(const FamiliesArgs& args) {
  if (args.params.size() != 1)
    throw std::invalid_argument("families: --params takes exactly one integer (n)");
  const auto rows = family_rows(args.family, args.params[0], grid_from_option(args.alphas));
  write_output(args.format == "json" ? json_text(family_json(rows)) : family_csv(rows),
               args.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "degree-based topological indices: computation, bound verification, and enumeration"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand("compute", "index tables for input graphs");
  compute->add_option("--input", compute_args.inputs,
                      "graph file (graph6 lines or edge list); repeatable");
  compute->add_option("--family", compute_args.family,
                      "generated input: complete|empty|path|cycle|star|complete_bipartite");
  compute->add_option("--params", compute_args.params, "family parameters")->delimiter(',');
  compute->add_option("--alphas", compute_args.alphas, "exponent grid (default built in)")
      ->delimiter(',');
  compute->add_option("--format", compute_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  compute->add_option("--output", compute_args.output, "write the document here instead of stdout");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "check bound families over a corpus");
  verify->add_option("--input", verify_args.inputs,
                     "corpus file (graph6 lines or edge list); repeatable");
  verify->add_option("--enumerate", verify_args.enumerate_spec,
                     "exhaustive corpus, n=<k> (labeled; filters below apply)");
  verify->add_flag("--connected", verify_args.connected, "keep connected graphs only");
  verify->add_flag("--dedup", verify_args.dedup, "one representative per isomorphism class");
  verify->add_option("--random", verify_args.random_spec,
                     "seeded random corpus, n,p,count (seeds seed+0..count-1)");
  verify->add_option("--seed", verify_args.seed, "base seed for --random (default 42)");
  verify->add_option("--alphas", verify_args.alphas, "exponent grid (default built in)")
      ->delimiter(',');
  verify->add_option("--bounds", verify_args.bounds,
                     "bound ids to run: families (B4) and/or sub-ids (B4.2.hi); default all")
      ->delimiter(',');
  verify->add_option("--format", verify_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--output", verify_args.output, "write the document here instead of stdout");
  verify->add_flag("--witnesses", verify_args.witnesses,
                   "include equality-witness records in the output");
  verify
      ->add_flag("--self-test-corrupt", verify_args.self_test_corrupt,
                 "negative control: corrupt one checker and expect violations")
      ->group("");  // hidden

  EnumerateArgs enumerate_args;
  CLI::App* enumerate = app.add_subcommand("enumerate", "emit a small-graph corpus as graph6");
  enumerate->add_option("spec", enumerate_args.spec, "n=<k>")->required();
  enumerate->add_flag("--connected", enumerate_args.connected, "keep connected graphs only");
  enumerate->add_flag("--dedup", enumerate_args.dedup,
                      "one representative per isomorphism class");
  enumerate->add_option("--output", enumerate_args.output,
                        "write the lines here instead of stdout");

  FamiliesArgs families_args;
  CLI::App* families = app.add_subcommand("families", "closed form vs direct computation");
  families->add_option("--family", families_args.family, "complete|cycle|path|empty")->required();
  families->add_option("--params", families_args.params, "family parameter n")->delimiter(',');
  families->add_option("--alphas", families_args.alphas, "exponent grid (default built in)")
      ->delimiter(',');
  families->add_option("--format", families_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  families->add_option("--output", families_args.output,
                       "write the document here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(compute_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (enumerate->parsed()) return run_enumerate(enumerate_args);
    if (families->parsed()) return run_families(families_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;  // unreachable: require_subcommand(1)
}
