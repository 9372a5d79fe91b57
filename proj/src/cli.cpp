#include "delbound/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "delbound/bounds.hpp"
#include "delbound/codec.hpp"
#include "delbound/errors.hpp"
#include "delbound/oracle.hpp"

namespace delbound {

namespace {

std::string both(const Rational& v) { return to_fraction_string(v) + " (" + to_decimal_string(v) + ")"; }

struct Options {
  std::vector<int> qs, ns, ss;
  std::string format = "text";
  std::string output;

  int q = 2;
  int n = 0;
  int l = 0;
  int a = 0;
  int b = 0;
  int s = 0;
  int max_n = 7;
  int max_s = 2;
  unsigned workers = 1;
  std::uint64_t max_strings = EnumerationCaps{}.max_strings;
  std::uint64_t max_vertices = SearchOptions{}.max_vertices;
  double time_limit = 0;

  std::string edges_path;
  std::string certificate_path;

  std::vector<std::string> deconstruct;
  std::string construct_path;
  bool roundtrip = false;
  bool trace = false;

  EnumerationCaps caps() const {
    EnumerationCaps c;
    c.max_strings = max_strings;
    return c;
  }
};

int cmd_bounds(const Options& o, std::ostream& out) {
  const auto rows = bound_table(o.qs, o.ns, o.ss);
  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw DomainError("cannot open output file '" + o.output + "'");
    sink = &file;
  }
  if (o.format == "csv")
    write_bounds_csv(*sink, rows);
  else if (o.format == "json")
    write_bounds_json(*sink, rows);
  else
    write_bounds_text(*sink, rows);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyConfig cfg;
  cfg.max_n = o.max_n;
  cfg.max_s = o.max_s;
  cfg.caps = o.caps();
  cfg.workers = o.workers;
  const VerifyReport report = verify_all_properties(o.q, cfg);
  write_verify_report(out, report);
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const ChannelGraph g = build_channel_graph(o.q, o.l, o.a, o.b, o.caps());
  const BigInt params = parameter_count_closed(o.q, o.l, o.a, o.b);
  const BigInt upper = edge_count_upper(o.q, o.l, o.a, o.b);
  const DegreeStats deg = left_degree_stats(g);
  const BigInt edges = g.edge_count();

  out << "graph B(q=" << o.q << ", l=" << o.l << ", a=" << o.a << ", b=" << o.b << ")\n";
  out << "left vertices: " << g.left_count() << "\n";
  out << "right vertices: " << g.right_count() << "\n";
  out << "edges |E|: " << edges << "\n";
  out << "constructable |P|: " << params << "\n";
  out << "upper bound: " << upper << "\n";
  out << "left degree min/avg/max: " << deg.min << " / " << both(deg.mean) << " / " << deg.max << "\n";
  out << "|P|/|E|: " << (edges == 0 ? std::string("undefined") : both(Rational(params, edges))) << "\n";
  out << "sandwich |P| <= |E| <= upper: " << (params <= edges && edges <= upper ? "holds" : "VIOLATED") << "\n";

  if (!o.edges_path.empty()) {
    std::ofstream file(o.edges_path);
    if (!file) throw DomainError("cannot open edge list file '" + o.edges_path + "'");
    g.write_edge_list(file);
    out << "edge list written to " << o.edges_path << "\n";
  }
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  const ConflictGraph graph = build_conflict_graph(o.q, o.n, o.s, o.caps());
  SearchOptions so;
  so.max_vertices = o.max_vertices;
  if (o.time_limit > 0)
    so.time_limit = std::chrono::milliseconds(static_cast<long long>(o.time_limit * 1000));
  const CodeCertificate cert = max_code_exact(graph, so);

  out << "q=" << o.q << " n=" << o.n << " s=" << o.s << "\n";
  if (cert.optimal)
    out << "max code size: " << cert.codewords.size() << "\n";
  else
    out << "max code size: >= " << cert.codewords.size() << " (lower bound only, search timed out)\n";
  out << "certificate verified: " << (cert.verified ? "yes" : "NO") << "\n";
  if (!o.certificate_path.empty()) {
    std::ofstream file(o.certificate_path);
    if (!file) throw DomainError("cannot open certificate file '" + o.certificate_path + "'");
    write_certificate(file, cert);
    out << "certificate: " << o.certificate_path << "\n";
  }
  if (o.q == 2 && o.s == 1) out << "best VT code size: " << best_vt_code(o.n).codewords.size() << "\n";

  if (o.s <= o.n) {
    const Rational exact(static_cast<long long>(cert.codewords.size()));
    out << "bounds (asymptotic formula values at this n):\n";
    for (int b = 0; b <= o.s; ++b) {
      const Rational v = generalized_code_bound(o.q, o.n, o.s - b, b);
      out << "  b=" << b << ": " << both(v) << (cert.optimal && v < exact ? "  [below exact maximum]" : "") << "\n";
    }
    out << "  insertion: " << both(insertion_code_bound(o.q, o.n, o.s)) << "\n";
    out << "  best b: " << optimal_b(o.q, o.s) << "\n";
    std::uint64_t packing = UINT64_MAX;
    for (int b = 0; b <= o.s; ++b) packing = std::min(packing, packing_bound(o.q, o.n, o.s - b, b, o.caps()));
    out << "certified packing bound: " << packing << "\n";
  }
  return cert.optimal ? kExitOk : kExitTimeout;
}

int cmd_codec(const Options& o, std::ostream& out) {
  if (!o.deconstruct.empty()) {
    if (o.deconstruct.size() != 2) throw DomainError("--deconstruct takes two strings");
    const QaryString x = QaryString::parse(o.deconstruct[0], o.q);
    const QaryString y = QaryString::parse(o.deconstruct[1], o.q);
    std::vector<DeleteResult> trace;
    try {
      const DecodedEdge e = deconstruct(x, y, &trace);
      if (o.trace)
        for (const auto& step : trace) out << format_trace_line(step) << "\n";
      out << format_decoded(e) << "\n";
      return kExitOk;
    } catch (const NotDeconstructable& e) {
      for (const auto& step : trace) out << format_trace_line(step) << "\n";
      out << "NotDeconstructable: " << e.what() << "\n";
      return kExitCheckFailed;
    }
  }
  if (!o.construct_path.empty()) {
    std::ifstream file(o.construct_path);
    if (!file) throw DomainError("cannot open parameter file '" + o.construct_path + "'");
    std::stringstream text;
    text << file.rdbuf();
    const DecodedEdge e = parse_decoded(text.str(), o.q);
    const auto [x, y] = construct(e.z0, e.triples);
    out << x << " " << y << "\n";
    return kExitOk;
  }
  if (o.roundtrip) {
    std::uint64_t count = 0, bad = 0;
    for_each_parameter(
        o.q, o.l, o.a, o.b,
        [&](const EdgeParameter& p) {
          ++count;
          const auto [x, y] = construct(p);
          try {
            const DecodedEdge back = deconstruct(x, y);
            if (back.z0 == p.z0() && back.triples == p.triples()) return;
          } catch (const NotDeconstructable&) {
          }
          if (++bad <= 5) out << "mismatch: " << x << " " << y << "\n";
        },
        o.caps());
    if (bad == 0) {
      out << "all " << count << " parameters round-trip\n";
      return kExitOk;
    }
    out << bad << " of " << count << " parameters fail to round-trip\n";
    return kExitCheckFailed;
  }
  throw DomainError("codec needs one of --deconstruct, --construct or --roundtrip");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of deletion/insertion channels: bounds, graphs, codes and exhaustive checks"};
  app.require_subcommand(1);
  Options o;

  auto* bounds = app.add_subcommand("bounds", "Code-size bound table for every b in [0, s]");
  bounds->add_option("--q", o.qs, "Alphabet sizes")->required()->delimiter(',');
  bounds->add_option("--n", o.ns, "Code lengths")->required()->delimiter(',');
  bounds->add_option("--s", o.ss, "Total numbers of errors")->required()->delimiter(',');
  bounds->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json", "text"}));
  bounds->add_option("--output", o.output, "Write to this file instead of stdout");

  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--max-strings", o.max_strings, "Enumeration cap on any single string space")
        ->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "Exhaustively check every property at small lengths");
  verify->add_option("--q", o.q);
  verify->add_option("--max-n", o.max_n)->check(CLI::PositiveNumber);
  verify->add_option("--max-s", o.max_s)->check(CLI::NonNegativeNumber);
  verify->add_option("--workers", o.workers, "Threads for independent checks")->check(CLI::PositiveNumber);
  add_caps(verify);

  auto* graph = app.add_subcommand("graph", "Statistics of the channel graph B(q,l,a,b)");
  graph->add_option("--q", o.q);
  graph->add_option("--l", o.l)->required()->check(CLI::NonNegativeNumber);
  graph->add_option("--a", o.a)->required()->check(CLI::NonNegativeNumber);
  graph->add_option("--b", o.b)->required()->check(CLI::NonNegativeNumber);
  graph->add_option("--edges", o.edges_path, "Export the edge list to this file");
  add_caps(graph);

  auto* search = app.add_subcommand("search", "Exact maximum s-deletion correcting code");
  search->add_option("--q", o.q);
  search->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  search->add_option("--s", o.s)->required()->check(CLI::NonNegativeNumber);
  search->add_option("--certificate", o.certificate_path, "Write the code certificate to this file");
  search->add_option("--time-limit", o.time_limit, "Seconds before settling for a lower bound");
  search->add_option("--max-vertices", o.max_vertices)->check(CLI::PositiveNumber);
  add_caps(search);

  auto* codec = app.add_subcommand("codec", "Construct and deconstruct channel graph edges");
  codec->add_option("--q", o.q);
  codec->add_option("--deconstruct", o.deconstruct, "Deconstruct the edge (x, y)")->expected(2);
  codec->add_option("--construct", o.construct_path, "Construct the edge described in this parameter file");
  codec->add_flag("--roundtrip", o.roundtrip, "Check deconstruct(construct(p)) = p over all of P(q,l,a,b)");
  codec->add_flag("--trace", o.trace, "Print one line per delete step");
  codec->add_option("--l", o.l)->check(CLI::NonNegativeNumber);
  codec->add_option("--a", o.a)->check(CLI::NonNegativeNumber);
  codec->add_option("--b", o.b)->check(CLI::NonNegativeNumber);
  add_caps(codec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bounds) return cmd_bounds(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*graph) return cmd_graph(o, out);
    if (*search) return cmd_search(o, out);
    if (*codec) return cmd_codec(o, out);
  } catch (const ResourceError& e) {
    err << "resource cap exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("delbound");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace delbound
