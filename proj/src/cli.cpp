#include "crossnum/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "crossnum/audit.hpp"
#include "crossnum/bounds.hpp"
#include "crossnum/crossing.hpp"
#include "crossnum/pancake.hpp"
#include "crossnum/planarity.hpp"

namespace crossnum {

namespace {

struct Args {
  std::string gen_kind;
  std::vector<int> gen_params;
  std::string file, cert, out_path, classes;
  bool witness = false;
  int max_k = 8;
  double budget = 60.0;
  bool budget_given = false;
  std::uint64_t seed = 1;
  std::string level = "fast";
  std::string format = "both";
};

int expect_params(const Args &a, std::size_t count) {
  if (a.gen_params.size() != count)
    throw InvalidInput("gen " + a.gen_kind + " takes " +
                       std::to_string(count) + " integer argument(s)");
  return count ? a.gen_params[0] : 0;
}

Graph generate(const Args &a) {
  const std::string &k = a.gen_kind;
  if (k == "pancake")
    return pancake_graph(expect_params(a, 1));
  if (k == "complete")
    return complete_graph(expect_params(a, 1));
  if (k == "bipartite") {
    expect_params(a, 2);
    return complete_bipartite(a.gen_params[0], a.gen_params[1]);
  }
  if (k == "cycle")
    return cycle_graph(expect_params(a, 1));
  if (k == "g12") {
    expect_params(a, 0);
    return g12_reference();
  }
  if (k == "petersen") {
    expect_params(a, 0);
    return petersen_graph();
  }
  throw InvalidInput("unknown generator '" + k + "'");
}

void write_edges(std::ostream &out, std::span<const Edge> edges) {
  for (const Edge &e : edges)
    out << "e " << e.u << ' ' << e.v << '\n';
}

int cmd_gen(const Args &a, std::ostream &out) {
  const Graph g = generate(a);
  if (a.out_path.empty()) {
    write_graph(out, g);
  } else {
    std::ofstream f(a.out_path);
    if (!f)
      throw InvalidInput("cannot open '" + a.out_path + "' for writing");
    write_graph(f, g);
  }
  return kExitOk;
}

int cmd_planar(const Args &a, std::ostream &out) {
  const Graph g = read_graph_file(a.file);
  if (is_planar(g)) {
    out << "planar\n";
    return kExitOk;
  }
  out << "nonplanar\n";
  if (a.witness) {
    const KuratowskiWitness w = kuratowski_witness(g);
    out << "witness " << to_string(w.kind) << " branch";
    for (Vertex v : w.branch_vertices)
      out << ' ' << v;
    out << '\n';
    write_edges(out, w.edges);
    if (!validate_witness(g, w))
      throw std::logic_error("extracted witness failed validation");
  }
  return kExitOk;
}

int cmd_skewness(const Args &a, std::ostream &out) {
  const Graph g = read_graph_file(a.file);
  const SkewnessResult r = skewness_exact(g, a.max_k, Seconds(a.budget));
  switch (r.status) {
  case SkewnessResult::Status::Exact:
    out << "skewness " << r.value << '\n';
    write_edges(out, r.deletion_set);
    return kExitOk;
  case SkewnessResult::Status::AboveMax:
    out << "skewness > " << a.max_k << '\n';
    return kExitUndecided;
  case SkewnessResult::Status::Timeout:
    out << "skewness >= " << r.value << " (timeout)\n";
    return kExitUndecided;
  }
  return kExitUndecided;
}

void save_certificate(const std::string &path, const DrawingCertificate &c) {
  std::ofstream f(path);
  if (!f)
    throw InvalidInput("cannot open '" + path + "' for writing");
  write_certificate(f, c);
}

int cmd_cr(const Args &a, std::ostream &out) {
  const Graph g = read_graph_file(a.file);
  SolverOptions opt;
  opt.seed = a.seed;
  const ExactResult r = cr_exact(g, a.max_k, Seconds(a.budget), opt);
  if (r.certificate) {
    verify_certificate(g, *r.certificate);
    if (!a.cert.empty())
      save_certificate(a.cert, *r.certificate);
  }
  if (r.status == ExactResult::Status::Exact) {
    out << "cr " << r.lower << '\n';
    return kExitOk;
  }
  out << "cr in [" << r.lower << ", " << r.upper << "]"
      << (r.timed_out ? " (timeout)" : " (max-k reached)") << '\n';
  return kExitUndecided;
}

int cmd_verify(const Args &a, std::ostream &out, std::ostream &err) {
  const Graph g = read_graph_file(a.file);
  const DrawingCertificate c = read_certificate_file(a.cert);
  try {
    const CrossingReport r = verify_certificate(g, c);
    out << "valid " << r.count << " crossings\n";
    return kExitOk;
  } catch (const CertificateError &e) {
    out << "invalid\n";
    for (const ViolationDetail &v : e.violations())
      err << to_string(v.kind) << ": " << v.detail << '\n';
    return kExitAuditFailure;
  }
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    parts.push_back(cur);
  return parts;
}

// `u-v+u-v...`
std::set<Edge> parse_edge_list(const Graph &g, const std::string &text) {
  std::set<Edge> out;
  for (const std::string &item : split(text, '+')) {
    const auto dash = item.find('-');
    Vertex u = -1, v = -1;
    try {
      if (dash == std::string::npos)
        throw std::invalid_argument("");
      std::size_t used = 0;
      u = std::stoi(item.substr(0, dash), &used);
      if (used != dash)
        throw std::invalid_argument("");
      v = std::stoi(item.substr(dash + 1), &used);
      if (used != item.size() - dash - 1)
        throw std::invalid_argument("");
    } catch (const std::logic_error &) {
      throw InvalidInput("malformed edge '" + item + "' in --classes");
    }
    if (u == v || u < 0 || v < 0 || u >= g.vertex_count() ||
        v >= g.vertex_count() || !g.has_edge(Edge(u, v)))
      throw InvalidInput("'" + item + "' is not an edge of the graph");
    out.insert(Edge(u, v));
  }
  return out;
}

EdgeClassPartition parse_classes(const Graph &g, const std::string &spec) {
  EdgeClassPartition parts;
  std::optional<PancakeDecomposition> dec;
  auto decomposition = [&]() -> const PancakeDecomposition & {
    if (!dec)
      dec = decompose(g);
    return *dec;
  };
  for (const std::string &item : split(spec, ',')) {
    const auto eq = item.find('=');
    if (eq != std::string::npos) {
      parts.add(item.substr(0, eq), parse_edge_list(g, item.substr(eq + 1)));
      continue;
    }
    auto digit = [](char c) { return c >= '1' && c <= '4' ? c - '1' : -1; };
    if (item.size() == 2 && item[0] == 'E' && digit(item[1]) >= 0) {
      parts.add(item, decomposition().cycle_edges[digit(item[1])]);
    } else if (item.size() == 3 && item[0] == 'E' && digit(item[1]) >= 0 &&
               digit(item[2]) >= 0 && item[1] < item[2]) {
      parts.add(item, decomposition().between[digit(item[1])][digit(item[2])]);
    } else if (item.size() == 3 && item.starts_with("Ep") &&
               digit(item[2]) >= 0) {
      parts.add(item, decomposition().closed_class(digit(item[2])));
    } else {
      throw InvalidInput("unknown class '" + item +
                         "' (presets: E1..E4, E12..E34, Ep1..Ep4, or "
                         "NAME=u-v+u-v)");
    }
  }
  return parts;
}

int cmd_account(const Args &a, std::ostream &out) {
  const Graph g = read_graph_file(a.file);
  const DrawingCertificate c = read_certificate_file(a.cert);
  verify_certificate(g, c);
  const EdgeClassPartition parts = parse_classes(g, a.classes);
  const AccountTable t = account(c, parts);
  const std::size_t k = t.names.size();
  for (std::size_t i = 0; i < k; ++i)
    out << "within " << t.names[i] << ' ' << t.within[i] << '\n';
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      out << "between " << t.names[i] << ' ' << t.names[j] << ' '
          << t.between[i][j] << '\n';
  out << "unclassified " << t.unclassified << '\n';
  out << "total " << t.total << '\n';
  return kExitOk;
}

int cmd_paper_verify(const Args &a, std::ostream &out) {
  AuditOptions opt;
  if (a.level == "full") {
    if (!a.budget_given)
      throw InvalidInput("--level full requires an explicit --budget");
    opt.level = AuditLevel::Full;
  }
  opt.budget = Seconds(a.budget_given ? a.budget : 300.0);
  opt.seed = a.seed;
  const AuditReport r = run_audit_suite(opt);
  if (a.format != "machine")
    out << r.human();
  if (a.format != "human")
    out << r.machine();
  if (r.any_failed())
    return kExitAuditFailure;
  return r.all_passed() ? kExitOk : kExitUndecided;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
  Args a;
  CLI::App app{"exact crossing numbers and drawing certificates", "crossnum"};
  app.require_subcommand(1);

  auto *gen = app.add_subcommand("gen", "write a named graph in .gr format");
  gen->add_option("kind", a.gen_kind,
                  "pancake N | complete N | bipartite A B | cycle N | g12 | "
                  "petersen")
      ->required();
  gen->add_option("params", a.gen_params, "integer parameters");
  gen->add_option("-o,--out", a.out_path, "output file (default stdout)");

  auto *planar = app.add_subcommand("planar", "test planarity");
  planar->add_option("file", a.file)->required();
  planar->add_flag("--witness", a.witness, "print a Kuratowski subdivision");

  auto budget_opt = [&](CLI::App *sub) {
    sub->add_option("--budget", a.budget, "seconds")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string &) { a.budget_given = true; });
  };

  auto *skew = app.add_subcommand("skewness", "minimum planarizing deletions");
  skew->add_option("file", a.file)->required();
  skew->add_option("--max-k", a.max_k)->check(CLI::NonNegativeNumber);
  budget_opt(skew);

  auto *cr = app.add_subcommand("cr", "exact crossing number");
  cr->add_option("file", a.file)->required();
  cr->add_option("--max-k", a.max_k)->check(CLI::NonNegativeNumber);
  cr->add_option("--cert", a.cert, "write the optimal certificate here");
  cr->add_option("--seed", a.seed);
  budget_opt(cr);

  auto *verify = app.add_subcommand("verify", "check a drawing certificate");
  verify->add_option("file", a.file)->required();
  verify->add_option("--cert", a.cert)->required();

  auto *acc = app.add_subcommand("account", "per-class crossing counts");
  acc->add_option("file", a.file)->required();
  acc->add_option("--cert", a.cert)->required();
  acc->add_option("--classes", a.classes)->required();

  auto *pv = app.add_subcommand("paper-verify", "run the P4 audit chain");
  pv->add_option("--level", a.level)
      ->check(CLI::IsMember({"fast", "full"}));
  pv->add_option("--seed", a.seed);
  pv->add_option("--format", a.format)
      ->check(CLI::IsMember({"human", "machine", "both"}));
  budget_opt(pv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.back()->help());
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "crossnum: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (gen->parsed())
      return cmd_gen(a, out);
    if (planar->parsed())
      return cmd_planar(a, out);
    if (skew->parsed())
      return cmd_skewness(a, out);
    if (cr->parsed())
      return cmd_cr(a, out);
    if (verify->parsed())
      return cmd_verify(a, out, err);
    if (acc->parsed())
      return cmd_account(a, out);
    if (pv->parsed())
      return cmd_paper_verify(a, out);
  } catch (const CertificateError &e) {
    err << "crossnum: invalid certificate: " << e.what() << '\n';
    return kExitAuditFailure;
  } catch (const Error &e) {
    err << "crossnum: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

} // namespace crossnum
