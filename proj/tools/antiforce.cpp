// Command-line surface: validation, forcing/anti-forcing numbers, cyclic
// edge connectivity, boundary-code digraph exports, fullerene synthesis,
// and the one-shot verification battery.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fullerene/fixtures.hpp"
#include "fullerene/forcing.hpp"
#include "fullerene/io.hpp"
#include "fullerene/seeds.hpp"
#include "fullerene/verify.hpp"

using namespace fullerene;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDomain = 4;

struct Reporter {
  bool timings = true;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  void command(const std::string& name) {
    std::cout << "command: " << name << '\n';
  }
  void check(const std::string& what, bool pass) {
    std::cout << "check " << what << ": " << (pass ? "pass" : "fail") << '\n';
  }
  void line(const std::string& s) { std::cout << s << '\n'; }
  void artifact(const std::string& path) {
    std::cout << "wrote: " << path << '\n';
  }
  ~Reporter() {
    if (timings) {
      auto secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      char buf[48];
      std::snprintf(buf, sizeof buf, "time: %.3fs", secs);
      std::cout << buf << '\n';
    }
  }
};

int load_graph(const std::string& path, FullereneGraph& out, Reporter& rep) {
  std::ifstream in(path);
  if (!in) {
    rep.line("error: cannot open " + path);
    return kExitInputError;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  auto parsed = graph_from_text(ss.str());
  if (!parsed.ok) {
    rep.line("parse error: " + parsed.error);
    return kExitInputError;
  }
  out = std::move(parsed.graph);
  return kExitOk;
}

bool write_file(const std::string& path, const std::string& content,
                Reporter& rep) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    rep.line("error: cannot write " + path);
    return false;
  }
  out << content;
  rep.artifact(path);
  return true;
}

std::string edge_set_line(const char* label, const EdgeSet& s) {
  std::string out = label;
  for (int e : s) out += ' ' + std::to_string(e);
  return out;
}

int cmd_validate(const std::string& path, Reporter& rep) {
  rep.command("validate");
  FullereneGraph g;
  if (int rc = load_graph(path, g, rep)) return rc;
  auto verdict = validate_fullerene(g);
  rep.check("fullerene", verdict.ok);
  if (!verdict.ok) {
    rep.line("diagnostic: " + verdict.diagnostic);
    return kExitCheckFailed;
  }
  auto fs = faces(g);
  rep.line("vertices: " + std::to_string(g.g.n));
  rep.line("pentagons: " + std::to_string(pentagon_count(fs)) +
           ", hexagons: " + std::to_string(hexagon_count(fs)));
  return kExitOk;
}

int cmd_af(const std::string& path, int budget, int jobs, bool accelerated,
           Reporter& rep) {
  rep.command("af");
  FullereneGraph g;
  if (int rc = load_graph(path, g, rep)) return rc;
  auto verdict = validate_fullerene(g);
  if (!verdict.ok) {
    rep.line("not a fullerene: " + verdict.diagnostic);
    return kExitInputError;
  }
  forcing::SearchOptions opt;
  opt.jobs = jobs;
  opt.prefer_non_matching = accelerated;
  auto cert = forcing::anti_forcing_number(g.g, budget, opt);
  if (cert.over_budget) {
    rep.line("af > " + std::to_string(budget));
    return kExitBudget;
  }
  rep.line("af = " + std::to_string(cert.number));
  std::cout << forcing::certificate_text(cert);
  return kExitOk;
}

int cmd_forcing(const std::string& path, int budget, Reporter& rep) {
  rep.command("forcing");
  FullereneGraph g;
  if (int rc = load_graph(path, g, rep)) return rc;
  auto verdict = validate_fullerene(g);
  if (!verdict.ok) {
    rep.line("not a fullerene: " + verdict.diagnostic);
    return kExitInputError;
  }
  auto cert = forcing::forcing_number(g.g, budget);
  if (cert.over_budget) {
    rep.line("f > " + std::to_string(budget));
    return kExitBudget;
  }
  rep.line("f = " + std::to_string(cert.number));
  std::cout << forcing::certificate_text(cert);
  return kExitOk;
}

int cmd_cec(const std::string& path, Reporter& rep) {
  rep.command("cec");
  FullereneGraph g;
  if (int rc = load_graph(path, g, rep)) return rc;
  auto verdict = validate_fullerene(g);
  if (!verdict.ok) {
    rep.line("not a fullerene: " + verdict.diagnostic);
    return kExitInputError;
  }
  auto v = cyclic_edge_connectivity_at_most_5(g);
  rep.check("cyclic edge connectivity 5", v.value5);
  rep.line(edge_set_line(v.value5 ? "witness 5-cut:" : "smaller cut:",
                         v.witness));
  return v.value5 ? kExitOk : kExitCheckFailed;
}

int cmd_digraph(const std::string& dot_path, const std::string& dump_path,
                Reporter& rep) {
  rep.command("digraph");
  auto d = patchwork::generate_digraph();
  rep.line(std::to_string(d.nodes.size()) + " nodes, " +
           std::to_string(d.arcs.size()) + " arcs, " +
           std::to_string(d.loop_count()) + " loop, " +
           std::to_string(d.symmetric_pair_count()) + " symmetric pairs");
  if (!dot_path.empty() && !write_file(dot_path, patchwork::to_dot(d), rep))
    return kExitInputError;
  if (!dump_path.empty() && !write_file(dump_path, patchwork::to_dump(d), rep))
    return kExitInputError;
  return kExitOk;
}

std::string graph_with_marks(const FullereneGraph& g, const EdgeSet& e0) {
  std::string text = graph_to_text(g);
  text += edge_set_line("# antiforcing:", e0);
  text += '\n';
  return text;
}

int report_construction(const patchwork::SynthesisResult& res,
                        const std::string& out_path, int jobs, Reporter& rep) {
  rep.line("vertices: " + std::to_string(res.graph.g.n));
  rep.line(edge_set_line("marked set:", res.e0));
  if (!out_path.empty() &&
      !write_file(out_path, graph_with_marks(res.graph, res.e0), rep))
    return kExitInputError;
  if (res.graph.g.n <= 32) {
    forcing::SearchOptions opt;
    opt.jobs = jobs;
    auto cert = forcing::anti_forcing_number(res.graph.g, 4, opt);
    bool ok = cert.number == 4;
    rep.check("af = 4 (verified)", ok);
    if (!ok) return kExitCheckFailed;
  } else {
    rep.line("af = 4 (by construction; oracle check skipped for n > 32)");
  }
  return kExitOk;
}

int cmd_construct(int n, const std::string& out_path, int jobs, Reporter& rep) {
  rep.command("construct");
  try {
    auto res = patchwork::construct_af4(n);
    return report_construction(res, out_path, jobs, rep);
  } catch (const patchwork::DomainError& e) {
    rep.line(std::string("domain error: ") + e.what());
    return kExitDomain;
  }
}

int cmd_synthesize(const std::string& seed, const std::string& walk_path,
                   const std::string& out_path, int jobs, Reporter& rep) {
  rep.command("synthesize");
  const patchwork::SeedGraph* sg = patchwork::seed_by_name(seed);
  if (!sg) {
    rep.line("unknown seed: " + seed);
    return kExitDomain;
  }
  std::ifstream in(walk_path);
  if (!in) {
    rep.line("error: cannot open " + walk_path);
    return kExitInputError;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  std::string err;
  auto steps = patchwork::parse_walk_steps(ss.str(), &err);
  if (!err.empty()) {
    rep.line("parse error: " + err);
    return kExitInputError;
  }
  try {
    auto res = patchwork::synthesize({sg->index, steps});
    return report_construction(res, out_path, jobs, rep);
  } catch (const patchwork::GrowError& e) {
    rep.line(std::string("walk error: ") + e.what());
    return kExitDomain;
  }
}

int cmd_verify_all(int jobs, bool timings, Reporter& rep) {
  rep.command("verify-all");
  auto results = verify::run_all_criteria(jobs);
  verify::print_report(std::cout, results, timings);
  return verify::failed_count(results) == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_export(const std::string& dir, Reporter& rep) {
  rep.command("export");
  struct Item {
    const char* file;
    const FullereneGraph* g;
    EdgeSet e0;
  } items[] = {
      {"f20.graph", &f20(), f20_reference_antiforcing()},
      {"f24.graph", &f24(), f24_reference_antiforcing()},
      {"f26.graph", &f26(), f26_reference_antiforcing()},
  };
  for (auto& it : items)
    if (!write_file(dir + "/" + it.file, graph_with_marks(*it.g, it.e0), rep))
      return kExitInputError;
  const Graph& g = unique_matching_gadget();
  std::string text = "# two pentagons joined by one edge; edge list\n";
  for (int e = 0; e < g.edge_ids(); ++e)
    text += std::to_string(g.edges[e][0]) + " " +
            std::to_string(g.edges[e][1]) + "\n";
  if (!write_file(dir + "/gadget.txt", text, rep)) return kExitInputError;
  if (!write_file(dir + "/f20.walk",
                  patchwork::walk_to_text(patchwork::f20_reference_walk()),
                  rep))
    return kExitInputError;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "anti-forcing numbers and boundary-code synthesis for fullerene graphs"};
  app.require_subcommand(1);
  bool no_timings = false;
  int jobs = 1;
  app.add_flag("--no-timings", no_timings, "omit timing lines from reports");
  app.add_option("--jobs", jobs, "worker threads for subset sweeps");

  std::string path, dot_path, dump_path, out_path, seed_name, walk_path, dir;
  int budget_af = 6, budget_f = 5, n = 0;
  bool accelerated = false;

  auto* validate =
      app.add_subcommand("validate", "check the fullerene property");
  validate->add_option("file", path)->required();

  auto* af = app.add_subcommand("af", "anti-forcing number");
  af->add_option("file", path)->required();
  af->add_option("--budget", budget_af);
  af->add_flag("--accelerated", accelerated,
               "try subsets with adjacent pairs first");

  auto* forcing_cmd = app.add_subcommand("forcing", "minimum forcing number");
  forcing_cmd->add_option("file", path)->required();
  forcing_cmd->add_option("--budget", budget_f);

  auto* cec = app.add_subcommand("cec", "cyclic edge connectivity check");
  cec->add_option("file", path)->required();

  auto* digraph =
      app.add_subcommand("digraph", "generate the boundary-code digraph");
  digraph->add_option("--dot", dot_path);
  digraph->add_option("--dump", dump_path);

  auto* construct = app.add_subcommand(
      "construct", "build a fullerene with anti-forcing number 4");
  construct->add_option("--n", n)->required();
  construct->add_option("--out", out_path);

  auto* synthesize =
      app.add_subcommand("synthesize", "replay a walk file from a seed");
  synthesize->add_option("--seed", seed_name)->required();
  synthesize->add_option("--walk", walk_path)->required();
  synthesize->add_option("--out", out_path);

  auto* verify_all =
      app.add_subcommand("verify-all", "run the acceptance battery");

  auto* export_cmd =
      app.add_subcommand("export", "write embedded fixtures to files");
  export_cmd->add_option("--dir", dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  Reporter rep;
  rep.timings = !no_timings;
  if (validate->parsed()) return cmd_validate(path, rep);
  if (af->parsed()) return cmd_af(path, budget_af, jobs, accelerated, rep);
  if (forcing_cmd->parsed()) return cmd_forcing(path, budget_f, rep);
  if (cec->parsed()) return cmd_cec(path, rep);
  if (digraph->parsed()) return cmd_digraph(dot_path, dump_path, rep);
  if (construct->parsed()) return cmd_construct(n, out_path, jobs, rep);
  if (synthesize->parsed())
    return cmd_synthesize(seed_name, walk_path, out_path, jobs, rep);
  if (verify_all->parsed()) return cmd_verify_all(jobs, !no_timings, rep);
  if (export_cmd->parsed()) return cmd_export(dir, rep);
  return kExitInputError;
}
