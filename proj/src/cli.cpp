#include "sbub/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "sbub/generators.hpp"
#include "sbub/hierarchy.hpp"
#include "sbub/superbubble.hpp"

namespace sbub::cli {

std::string dataset_name(const std::filesystem::path& path) {
  auto name = path.filename();
  if (name.extension() == ".gz") name = name.stem();
  return name.stem().string();
}

AnalysisRow analyze_graph(const Digraph& g, const std::string& dataset, const RunConfig& config) {
  AnalysisRow row;
  row.dataset = dataset;
  const auto policy = config.threads > 1 ? std::launch::async : std::launch::deferred;
  std::future<void> u, d, s;
  if (config.undirected) u = std::async(policy, [&] { row.undirected = undirected_report(g); });
  if (config.directed) d = std::async(policy, [&] { row.directed = directed_report(g); });
  if (config.superbubble) s = std::async(policy, [&] { row.superbubble = superbubble_report(g); });
  for (auto* f : {&u, &d, &s})
    if (f->valid()) f->get();
  return row;
}

namespace {

std::string bubble_line(const Digraph& g, const Superbubble& sb) {
  std::ostringstream line;
  line << g.label(sb.entrance) << '\t' << g.label(sb.exit) << '\t' << sb.vertex_count << '\t' << sb.edge_count;
  return line.str();
}

std::vector<std::string> sorted_lines(const Digraph& g, std::vector<Superbubble> sbs) {
  std::sort(sbs.begin(), sbs.end(), [&](const Superbubble& a, const Superbubble& b) {
    return std::tuple(g.label(a.entrance), g.label(a.exit)) < std::tuple(g.label(b.entrance), g.label(b.exit));
  });
  std::vector<std::string> lines;
  lines.reserve(sbs.size());
  for (const auto& sb : sbs) lines.push_back(bubble_line(g, sb));
  return lines;
}

}  // namespace

std::vector<std::string> enumerate_lines(const Digraph& g, const Detection& d) {
  return sorted_lines(g, d.superbubbles);
}

std::vector<std::string> enumerate_lines(const Digraph& g, const std::vector<ExplicitSuperbubble>& sbs) {
  std::vector<Superbubble> plain;
  plain.reserve(sbs.size());
  for (const auto& e : sbs) plain.push_back(e.bubble);
  return sorted_lines(g, std::move(plain));
}

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Digraph load(const std::string& path, const RunConfig& config) {
  if (config.format != "snap") throw CLI::ValidationError("--format", "unsupported format '" + config.format + "'");
  try {
    return load_edge_list(std::filesystem::path(path));
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

void parse_tables(const std::string& spec, RunConfig& config) {
  config.undirected = config.directed = config.superbubble = false;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "u" || item == "undirected")
      config.undirected = true;
    else if (item == "d" || item == "directed")
      config.directed = true;
    else if (item == "s" || item == "superbubble")
      config.superbubble = true;
    else
      throw CLI::ValidationError("--tables", "unknown table '" + item + "'");
  }
  if (!(config.undirected || config.directed || config.superbubble))
    throw CLI::ValidationError("--tables", "select at least one table");
}

void emit_table(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows, bool latex) {
  if (!latex) out << tsv_line(header) << '\n';
  for (const auto& r : rows) out << (latex ? latex_line(r) : tsv_line(r)) << '\n';
}

int cmd_analyze(const RunConfig& config, std::ostream& out) {
  std::vector<std::vector<std::string>> u_rows, d_rows, s_rows;
  for (const auto& path : config.inputs) {
    const auto g = load(path, config);
    const auto row = analyze_graph(g, dataset_name(path), config);
    u_rows.push_back(undirected_cells(row.dataset, row.undirected));
    d_rows.push_back(directed_cells(row.dataset, row.directed));
    s_rows.push_back(superbubble_cells(row.dataset, row.superbubble, config.bigint));
  }

  struct Table {
    bool selected;
    const char* name;
    std::vector<std::string> header;
    const std::vector<std::vector<std::string>>* rows;
  };
  const Table tables[] = {{config.undirected, "undirected", undirected_columns(), &u_rows},
                          {config.directed, "directed", directed_columns(), &d_rows},
                          {config.superbubble, "superbubble", superbubble_columns(), &s_rows}};

  if (config.out_dir.empty()) {
    bool first = true;
    for (const auto& t : tables) {
      if (!t.selected) continue;
      if (!first) out << '\n';
      first = false;
      emit_table(out, t.header, *t.rows, config.latex);
    }
    return kOk;
  }

  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) throw IoError("cannot create " + config.out_dir + ": " + ec.message());
  for (const auto& t : tables) {
    if (!t.selected) continue;
    const auto file = std::filesystem::path(config.out_dir) / (std::string(t.name) + (config.latex ? ".tex" : ".tsv"));
    std::ofstream f(file);
    if (!f) throw IoError("cannot write " + file.string());
    emit_table(f, t.header, *t.rows, config.latex);
    if (!f) throw IoError("write failed for " + file.string());
  }
  return kOk;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
  const auto g = load(config.inputs.front(), config);
  const auto d = detect(g);
  for (const auto& line : enumerate_lines(g, d)) out << line << '\n';
  if (config.paren) out << "# " << d.parens.to_string(g) << '\n';
  return kOk;
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto g = load(config.inputs.front(), config);
  std::vector<ExplicitSuperbubble> brute;
  try {
    brute = enumerate_brute(g, config.oracle_limit);
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  for (const auto& line : enumerate_lines(g, brute)) out << line << '\n';
  if (!config.diff) return kOk;

  const auto fast = materialize(detect(g));
  if (fast == brute) return kOk;
  std::vector<ExplicitSuperbubble> only_fast, only_brute;
  std::set_difference(fast.begin(), fast.end(), brute.begin(), brute.end(), std::back_inserter(only_fast));
  std::set_difference(brute.begin(), brute.end(), fast.begin(), fast.end(), std::back_inserter(only_brute));
  for (const auto& line : enumerate_lines(g, only_fast)) err << "only in detection:\t" << line << '\n';
  for (const auto& line : enumerate_lines(g, only_brute)) err << "only in oracle:\t" << line << '\n';
  if (only_fast.empty() && only_brute.empty()) err << "interior sets differ\n";
  return kMismatch;
}

int cmd_generate(const GeneratorSpec& spec, const std::string& output, std::ostream& out) {
  spec.validate();
  const auto g = generate(spec);
  auto write = [&](std::ostream& os) {
    os << "# generator: " << spec.describe() << '\n';
    os << "# Nodes: " << g.num_vertices() << " Edges: " << g.num_arcs() << '\n';
    write_edge_list(os, g);
  };
  if (output.empty() || output == "-") {
    write(out);
    return kOk;
  }
  std::ofstream f(output);
  if (!f) throw IoError("cannot write " + output);
  write(f);
  if (!f) throw IoError("write failed for " + output);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superbubble enumeration and directed graph descriptors", "sbub"};
  app.require_subcommand(1);

  RunConfig config;
  std::string tables = "u,d,s";
  std::string bigint = "exact";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "Input format")->capture_default_str();
    cmd->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "Write the descriptor tables for one or more edge lists");
  analyze->add_option("inputs", config.inputs, "Edge-list files")->required();
  analyze->add_option("--tables", tables, "Tables to emit: u,d,s")->capture_default_str();
  analyze->add_option("--out", config.out_dir, "Directory for the table files (default: stdout)");
  analyze->add_flag("--latex", config.latex, "Emit LaTeX tabular rows instead of TSV");
  analyze->add_option("--bigint", bigint, "Path-count printing: exact or table-compat")
      ->check(CLI::IsMember({"exact", "table-compat"}))
      ->capture_default_str();
  add_common(analyze);

  auto* enumerate = app.add_subcommand("enumerate", "List all superbubbles");
  enumerate->add_option("input", config.inputs, "Edge-list file")->required()->expected(1);
  enumerate->add_flag("--paren", config.paren, "Also print the annotated postorder");
  add_common(enumerate);

  auto* oracle = app.add_subcommand("oracle", "List superbubbles by brute force");
  oracle->add_option("input", config.inputs, "Edge-list file")->required()->expected(1);
  oracle->add_option("--limit", config.oracle_limit, "Largest vertex count accepted")->capture_default_str();
  oracle->add_flag("--diff", config.diff, "Compare with fast detection; exit 3 on mismatch");
  add_common(oracle);

  GeneratorSpec spec;
  std::string family;
  std::string output;
  auto* gen = app.add_subcommand("generate", "Write a random digraph as an edge list");
  gen->add_option("family", family, "er, ba or ws")->required()->check(CLI::IsMember({"er", "ba", "ws"}));
  gen->add_option("--n", spec.n, "Vertices")->required();
  gen->add_option("--p", spec.p, "Arc probability (er)");
  gen->add_option("--k", spec.k, "Successors per vertex (ws)")->capture_default_str();
  gen->add_option("--beta", spec.beta, "Rewiring probability (ws)");
  gen->add_option("--seed", spec.seed, "PRNG seed")->capture_default_str();
  gen->add_option("-o,--output", output, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (*analyze) {
      parse_tables(tables, config);
      config.bigint = bigint == "exact" ? BigIntMode::exact : BigIntMode::table_compat;
      return cmd_analyze(config, out);
    }
    if (*enumerate) return cmd_enumerate(config, out);
    if (*oracle) return cmd_oracle(config, out, err);
    spec.family = family == "er" ? Family::er : family == "ba" ? Family::ba : Family::ws;
    try {
      return cmd_generate(spec, output, out);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n\n" << gen->help();
      return kUsage;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace sbub::cli
