#include "nprime/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>

#include "nprime/families.hpp"
#include "nprime/io.hpp"
#include "nprime/labelers.hpp"
#include "nprime/search.hpp"
#include "nprime/trees.hpp"

namespace nprime {
namespace {

struct Options {
  std::string family, out, dot, graph_out, graph, labels, order = "deg", fail_dir;
  std::uint64_t budget = 10'000'000;
  bool all = false;
  int max_n = 0, jobs = 1, n = 0;
};

int cmd_gen(const Options& o, std::ostream& out) {
  const Graph g = generate(parse_family(o.family));
  if (o.out.empty())
    out << write_edge_list(g);
  else
    write_file(o.out, write_edge_list(g));
  if (!o.dot.empty()) write_file(o.dot, write_dot(g));
  return kExitOk;
}

int cmd_label(const Options& o, std::ostream& out, std::ostream& err) {
  const auto spec = parse_family(o.family);
  Labeled result;
  try {
    result = label_family(spec);
  } catch (const UnsupportedParameters& e) {
    err << "UnsupportedParameters: " << e.what() << " (try: nprime gen --family " << o.family
        << " --out g.el && nprime search --graph g.el)\n";
    return kExitError;
  } catch (const UnsupportedStructure& e) {
    err << "UnsupportedStructure: " << e.what() << " (try `nprime search`)\n";
    return kExitError;
  }
  const auto report = verify(result.graph, result.labeling);
  if (!report.ok) {
    err << "internal error: labeling for " << o.family << " failed verification\n" << format_report(report);
    return kExitError;
  }
  if (o.out.empty())
    out << write_labels(result.labeling);
  else
    write_file(o.out, write_labels(result.labeling));
  if (!o.graph_out.empty()) write_file(o.graph_out, write_edge_list(result.graph));
  if (!o.dot.empty()) write_file(o.dot, write_dot(result.graph, &result.labeling, &report));
  out << "VERIFIED\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = parse_edge_list(read_file(o.graph));
  const Labeling f = parse_labels(read_file(o.labels));
  if (f.size() != g.vertex_count()) {
    err << "UsageError: " << f.size() << " labels for " << g.vertex_count() << " vertices\n";
    return kExitError;
  }
  VerificationReport report;
  try {
    report = verify(g, f);
  } catch (const LabelingInvalid& e) {
    err << "LabelingInvalid: " << e.what() << "\n";
    return kExitError;
  }
  out << format_report(report);
  if (!o.dot.empty()) write_file(o.dot, write_dot(g, &f, &report));
  return report.ok ? kExitOk : kExitError;
}

int cmd_search(const Options& o, std::ostream& out) {
  const Graph g = parse_edge_list(read_file(o.graph));
  SearchConfig cfg;
  cfg.node_budget = o.budget;
  cfg.find_all = o.all;
  cfg.order = o.order == "nat" ? VertexOrder::Natural : VertexOrder::DegreeDescending;
  const auto outcome = find_labeling(g, cfg);
  out << to_string(outcome.status) << "\n";
  out << "nodes " << outcome.nodes_explored << "\n";
  if (o.all) {
    out << "solutions " << outcome.all_solutions.size() << "\n";
    for (const auto& f : outcome.all_solutions) {
      for (int i = 0; i < f.size(); ++i) out << (i ? " " : "") << f.values()[static_cast<std::size_t>(i)];
      out << "\n";
    }
  } else if (outcome.labeling) {
    out << write_labels(*outcome.labeling);
  }
  switch (outcome.status) {
    case SearchStatus::Found: return kExitOk;
    case SearchStatus::Exhausted: return kExitExhausted;
    case SearchStatus::Inconclusive: return kExitInconclusive;
  }
  return kExitError;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  SearchConfig cfg;
  cfg.node_budget = o.budget;
  int failure_index = 0;
  auto on_failure = [&](const Graph& t) {
    err << "COUNTEREXAMPLE\n" << write_edge_list(t);
    if (o.fail_dir.empty()) return;
    std::filesystem::create_directories(o.fail_dir);
    const auto name = "n" + std::to_string(t.vertex_count()) + "_" + std::to_string(failure_index++) + ".el";
    write_file((std::filesystem::path(o.fail_dir) / name).string(), write_edge_list(t));
  };
  const auto report = scan_conjecture(o.max_n, cfg, o.jobs, on_failure);
  out << format_report(report);
  bool inconclusive = false;
  for (const auto& s : report.sizes) inconclusive = inconclusive || !s.inconclusive.empty();
  if (!report.holds()) return kExitExhausted;
  return inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_match(const Options& o, std::ostream& out) {
  const auto m = coprime_matching(o.n);
  for (int x = 1; x <= o.n; ++x) out << x << " " << m[x] << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neighborhood-prime labelings: generators, labelers, verifier, exact search"};
  app.name("nprime");
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a family graph as an edge list");
  gen->add_option("--family", o.family, "Family spec, e.g. gear:7")->required();
  gen->add_option("--out", o.out, "Edge-list output file (default stdout)");
  gen->add_option("--dot", o.dot, "Also write Graphviz DOT");

  auto* label = app.add_subcommand("label", "Label a family with its construction and verify it");
  label->add_option("--family", o.family, "Family spec")->required();
  label->add_option("--out", o.out, "Labels output file (default stdout)");
  label->add_option("--graph-out", o.graph_out, "Edge-list output of the labeled graph");
  label->add_option("--dot", o.dot, "DOT output with labels");

  auto* ver = app.add_subcommand("verify", "Check a labeling of a graph");
  ver->add_option("--graph", o.graph, "Edge-list file")->required();
  ver->add_option("--labels", o.labels, "Labels file")->required();
  ver->add_option("--dot", o.dot, "DOT output; violating vertices in red");

  auto* search = app.add_subcommand("search", "Exact backtracking search");
  search->add_option("--graph", o.graph, "Edge-list file")->required();
  search->add_option("--budget", o.budget, "Maximum decision nodes")->check(CLI::PositiveNumber);
  search->add_flag("--all", o.all, "Enumerate every labeling");
  search->add_option("--order", o.order, "Vertex order")->check(CLI::IsMember({"deg", "nat"}));

  auto* scan = app.add_subcommand("scan-trees", "Search every free tree up to a size");
  scan->add_option("--max-n", o.max_n, "Largest tree size")->required()->check(CLI::Range(1, kMaxEnumerationSize));
  scan->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--fail-dir", o.fail_dir, "Directory for counterexample edge lists");
  scan->add_option("--budget", o.budget, "Maximum decision nodes per tree")->check(CLI::PositiveNumber);

  auto* match = app.add_subcommand("match-coprime", "Coprime matching {1..n} -> {2n+1..3n}");
  match->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (label->parsed()) return cmd_label(o, out, err);
    if (ver->parsed()) return cmd_verify(o, out, err);
    if (search->parsed()) return cmd_search(o, out);
    if (scan->parsed()) return cmd_scan(o, out, err);
    if (match->parsed()) return cmd_match(o, out);
  } catch (const ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
  } catch (const LabelingInvalid& e) {
    err << "LabelingInvalid: " << e.what() << "\n";
  } catch (const InvalidSpec& e) {
    err << "InvalidSpec: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace nprime
