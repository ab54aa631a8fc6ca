// pln: dimension tables, bases, verification runs and tangle evaluation for
// the star graph planar algebra of a subgroup H < G.

#include "pln/error.hpp"
#include "pln/graph_io.hpp"
#include "pln/group_spec.hpp"
#include "pln/isomorphism.hpp"
#include "pln/serialize.hpp"
#include "pln/tangle_expr.hpp"
#include "pln/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace pln;

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

struct Config {
  std::string pair;
  std::string group_file;
  int depth = 0;
  std::string format = "table";
  int jobs = 1;
  std::uint64_t seed = 20240601;
  std::string out;
  int trees = 200;
  std::string color;
  std::string side = "loop";
  std::string flavor = "N";
  std::string expr;
  std::string file;
  std::string bindings;
  std::string graph_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupPair load_pair(const Config& cfg) {
  if (!cfg.pair.empty() && !cfg.group_file.empty())
    throw UsageError("give either --pair or --group-file, not both");
  if (!cfg.group_file.empty()) return parse_group_spec(read_file(cfg.group_file));
  if (cfg.pair.empty()) throw UsageError("--pair or --group-file is required");
  return builtin_pair(cfg.pair);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string describe(const PAElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, s] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << s.to_string() << ")<" << l.base;
    for (int e : l.edges) os << "," << e;
    os << ">";
  }
  return os.str();
}

// ---- dims ----

int cmd_dims(const Config& cfg) {
  PairContext ctx(load_pair(cfg));
  int depth = cfg.depth > 0 ? cfg.depth : default_depth(ctx.n());
  auto t = dimension_table(ctx, depth);
  Output out(cfg.out);
  auto& os = out.os();
  if (cfg.format == "json") {
    Json j = dims_to_json(t);
    j["pair"] = {{"group", ctx.pair().group_name}, {"subgroup", ctx.pair().subgroup_name}};
    j["depth"] = depth;
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "k,formula,burnside,matrix_model,loop_model\n";
    for (std::size_t i = 0; i < t.k.size(); ++i)
      os << t.k[i] << "," << t.formula[i] << "," << t.burnside[i] << "," << t.matrix_model[i] << ","
         << t.loop_model[i] << "\n";
  } else {
    os << std::setw(3) << "k" << std::setw(10) << "formula" << std::setw(10) << "burnside"
       << std::setw(10) << "matrix" << std::setw(10) << "loop" << "\n";
    for (std::size_t i = 0; i < t.k.size(); ++i)
      os << std::setw(3) << t.k[i] << std::setw(10) << t.formula[i] << std::setw(10) << t.burnside[i]
         << std::setw(10) << t.matrix_model[i] << std::setw(10) << t.loop_model[i] << "\n";
  }
  if (!t.agree()) {
    std::cerr << "dimension columns disagree:\n";
    for (std::size_t i = 0; i < t.k.size(); ++i)
      if (t.formula[i] != t.burnside[i] || t.formula[i] != t.matrix_model[i] ||
          t.formula[i] != t.loop_model[i])
        std::cerr << "  k=" << t.k[i] << ": " << t.formula[i] << " " << t.burnside[i] << " "
                  << t.matrix_model[i] << " " << t.loop_model[i] << "\n";
    return kCheckFailed;
  }
  return 0;
}

// ---- verify ----

int cmd_verify(const Config& cfg) {
  PairContext ctx(load_pair(cfg));
  VerifyOptions opt;
  opt.depth = cfg.depth;
  opt.jobs = cfg.jobs;
  opt.seed = cfg.seed;
  opt.random_trees = cfg.trees;
  auto report = run_verify(ctx, opt);
  Output out(cfg.out);
  auto& os = out.os();
  bool ok = report.passed();
  if (cfg.format == "json" || !ok) {
    // failures always carry the JSON report
    if (cfg.format != "json") os << "verification FAILED\n";
    os << report_to_json(report).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "tangle,color,basis_size,status\n";
    for (const auto& c : report.checks)
      os << c.tangle << "," << c.color << "," << c.basis_size << "," << (c.passed ? "pass" : "fail")
         << "\n";
  } else {
    os << "pair " << report.group << ":" << report.subgroup << ", depth " << report.depth << "\n";
    for (const auto& c : report.checks)
      os << "  " << std::left << std::setw(32) << (c.tangle + " ") << std::setw(6) << c.color
         << std::right << std::setw(8) << c.basis_size << "  " << (c.passed ? "pass" : "FAIL")
         << "\n";
    os << "dims agree: " << (report.dims.agree() ? "yes" : "no") << "\n";
    os << report.closure_note << "\n";
    os << "all checks passed\n";
  }
  return ok ? 0 : kCheckFailed;
}

// ---- basis ----

Color parse_color_arg(const std::string& text) {
  try {
    return Color::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string("bad --color: ") + e.what());
  }
}

int cmd_basis(const Config& cfg) {
  if (cfg.color.empty()) throw UsageError("--color is required");
  Color c = parse_color_arg(cfg.color);
  PairContext ctx(load_pair(cfg));
  Output out(cfg.out);
  auto& os = out.os();
  Json items = Json::array();
  if (cfg.side == "loop") {
    const auto& b = ctx.invariants().basis(c);
    for (std::size_t o = 0; o < b.size(); ++o) {
      Json j = element_to_json(ctx.loops(), b.elements[o]);
      j["representative"] = loop_to_json(ctx.loops(), c, b.reps[o]);
      j["stabilizer"] = b.stabilizer[o];
      items.push_back(std::move(j));
      if (cfg.format == "table")
        os << "#" << o << " stabilizer " << b.stabilizer[o] << ": " << describe(b.elements[o]) << "\n";
    }
  } else {
    Flavor f = cfg.flavor == "M" ? Flavor::m_prime : Flavor::n_prime;
    const auto& b = ctx.commutant_basis(c, f);
    for (std::size_t o = 0; o < b.size(); ++o) {
      Json j = matrix_to_json(ctx.cosets(), {c, b.elements[o]});
      j["representative"] = {{"row", b.reps[o].first}, {"col", b.reps[o].second}};
      j["stabilizer"] = b.stabilizer[o];
      items.push_back(std::move(j));
      if (cfg.format == "table") {
        os << "#" << o << " [" << Json(b.reps[o].first).dump() << ", "
           << Json(b.reps[o].second).dump() << "] stabilizer " << b.stabilizer[o] << ", "
           << b.elements[o].entries.size() << " entries\n";
      }
    }
  }
  if (cfg.format == "json") {
    Json j{{"pair", {{"group", ctx.pair().group_name}, {"subgroup", ctx.pair().subgroup_name}}},
           {"color", c.str()},
           {"side", cfg.side},
           {"size", items.size()},
           {"elements", items}};
    if (cfg.side == "matrix") j["flavor"] = cfg.flavor;
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "index,stabilizer\n";
    for (std::size_t o = 0; o < items.size(); ++o) os << o << "," << items[o]["stabilizer"] << "\n";
  } else {
    os << items.size() << " basis elements\n";
  }
  return 0;
}

// ---- eval ----

int cmd_eval(const Config& cfg) {
  if (cfg.expr.empty() == cfg.file.empty()) throw UsageError("give exactly one of --expr or --file");
  PairContext ctx(load_pair(cfg));
  std::map<std::string, Binding> bindings;
  if (!cfg.bindings.empty()) {
    Json bj;
    try {
      bj = Json::parse(read_file(cfg.bindings));
    } catch (const Json::exception& e) {
      throw UsageError(std::string("bindings: ") + e.what());
    }
    bindings = parse_bindings(ctx, bj);
  }
  std::map<std::string, Color> colors;
  std::map<std::string, MatrixElement> mb;
  std::map<std::string, PAElement> lb;
  for (const auto& [name, b] : bindings) {
    colors.emplace(name, b.color);
    mb.emplace(name, b.matrix);
    lb.emplace(name, b.loop);
  }
  std::vector<std::string> lines =
      cfg.expr.empty() ? batch_lines(read_file(cfg.file)) : std::vector<std::string>{cfg.expr};

  // parse everything first so usage errors exit before any output
  std::vector<ExprPtr> exprs;
  for (const auto& line : lines) {
    try {
      exprs.push_back(parse_expr(line, colors));
    } catch (const Error& e) {
      throw UsageError("'" + line + "': " + e.what());
    }
  }

  Output out(cfg.out);
  auto& os = out.os();
  Json results = Json::array();
  bool all = true;
  for (const auto& e : exprs) {
    auto q = evaluate(*e, mb, ctx.matrices());
    auto p = evaluate(*e, lb, ctx.loops());
    bool match = ctx.phi(q) == p;
    all = all && match;
    if (cfg.format == "json") {
      results.push_back({{"expr", print_expr(*e)},
                         {"color", e->color.str()},
                         {"matrix", matrix_to_json(ctx.cosets(), q)},
                         {"loop", element_to_json(ctx.loops(), p)},
                         {"match", match}});
    } else if (cfg.format == "csv") {
      os << "\"" << print_expr(*e) << "\"," << e->color.str() << "," << (match ? "match" : "MISMATCH")
         << "\n";
    } else {
      os << print_expr(*e) << "  [colour " << e->color.str() << "]\n"
         << "  loop:   " << describe(p) << "\n"
         << "  matrix: " << q.m.entries.size() << " nonzero entries, trace "
         << ctx.matrices().trace(q).to_string() << "\n"
         << "  phi(matrix) == loop: " << (match ? "yes" : "NO") << "\n";
    }
  }
  if (cfg.format == "json") {
    Json j{{"pair", {{"group", ctx.pair().group_name}, {"subgroup", ctx.pair().subgroup_name}}},
           {"results", results}};
    os << j.dump(2) << "\n";
  }
  return all ? 0 : kCheckFailed;
}

// ---- graph ----

int cmd_graph(const Config& cfg) {
  if (cfg.graph_file.empty()) throw UsageError("--graph-file is required");
  SpinGraph sg = parse_graph(read_file(cfg.graph_file));
  const auto& g = sg.graph;
  bool connected = g.is_connected();
  Json j{{"even", g.n_even()}, {"odd", g.n_odd()}, {"edges", g.edge_count()}, {"connected", connected}};
  bool ok = connected;
  if (connected) {
    auto pf = check_pf(sg);
    ok = pf.ok;
    j["pf"] = {{"ok", pf.ok}, {"eigenvalue", scalar_to_json(pf.eigenvalue)}};
    j["spectral_norm"] = spectral_norm(g);
    int depth = cfg.depth > 0 ? cfg.depth : 3;
    GraphPlanarAlgebra pa(sg);
    Json counts = Json::object();
    counts["0+"] = pa.loops(Color::plus0()).size();
    counts["0-"] = pa.loops(Color::minus0()).size();
    for (int k = 1; k <= depth; ++k) counts[std::to_string(k)] = pa.loops(Color::of(k)).size();
    j["loops"] = counts;
  }
  Output out(cfg.out);
  auto& os = out.os();
  if (cfg.format == "json") {
    os << j.dump(2) << "\n";
  } else {
    os << "even " << g.n_even() << ", odd " << g.n_odd() << ", edges " << g.edge_count() << "\n"
       << "connected: " << (connected ? "yes" : "no") << "\n";
    if (connected) {
      os << "PF eigen-identity: " << (j["pf"]["ok"].get<bool>() ? "holds" : "fails")
         << ", spectral norm " << j["spectral_norm"].get<double>() << "\n";
      for (const auto& [k, v] : j["loops"].items()) os << "  loops at colour " << k << ": " << v << "\n";
    }
  }
  return ok ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact star-graph planar algebra and subgroup subfactor verifier"};
  app.require_subcommand(1);
  Config cfg;

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--pair", cfg.pair, "builtin pair G:H, e.g. S3:S2, C4:C2");
    sub->add_option("--group-file", cfg.group_file, "group/subgroup spec file")->check(CLI::ExistingFile);
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--depth", cfg.depth, "maximal colour (default from n)")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--out", cfg.out, "write output here instead of stdout");
  };

  auto* dims = app.add_subcommand("dims", "dimension table, four ways");
  add_pair(dims);
  add_common(dims);

  auto* verify = app.add_subcommand("verify", "full verification run");
  add_pair(verify);
  add_common(verify);
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "seed for random composite tangles");
  verify->add_option("--trees", cfg.trees, "number of random composite tangles")
      ->check(CLI::NonNegativeNumber);

  auto* basis = app.add_subcommand("basis", "orbit-sum basis at one colour");
  add_pair(basis);
  add_common(basis);
  basis->add_option("--color", cfg.color, "0+, 0- or k")->required();
  basis->add_option("--side", cfg.side, "loop or matrix")->check(CLI::IsMember({"loop", "matrix"}));
  basis->add_option("--flavor", cfg.flavor, "N (N' cap M_k) or M (M' cap M_k), matrix side")
      ->check(CLI::IsMember({"N", "M"}));

  auto* eval = app.add_subcommand("eval", "evaluate tangle expressions in both models");
  add_pair(eval);
  add_common(eval);
  eval->add_option("--expr", cfg.expr, "one expression");
  eval->add_option("--file", cfg.file, "batch file, one expression per line")->check(CLI::ExistingFile);
  eval->add_option("--bindings", cfg.bindings, "JSON bindings for variables")->check(CLI::ExistingFile);

  auto* graph = app.add_subcommand("graph", "inspect a graph document");
  add_common(graph);
  graph->add_option("--graph-file", cfg.graph_file, "graph document")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*dims) return cmd_dims(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*basis) return cmd_basis(cfg);
    if (*eval) return cmd_eval(cfg);
    if (*graph) return cmd_graph(cfg);
  } catch (const std::exception& e) {
    // configuration and input problems; check failures return above
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
