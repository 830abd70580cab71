#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "acedag/dependency.hpp"
#include "acedag/evaluator.hpp"
#include "acedag/formats.hpp"
#include "acedag/graph.hpp"
#include "acedag/indexsets.hpp"
#include "acedag/verify.hpp"

namespace acedag::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunSpec {
  std::string group = "T";
  std::string p = "1";
  int D = -1;
  int Dmin = 1;
  int Dmax = -1;
  int nu = -1;
  std::vector<int> numax;
  std::vector<std::string> alg{"orig"};
  int n = 2;
  std::string out;
  std::uint64_t seed = 1;
  bool count_only = false;
  std::string tuple;
  std::string graph_path;
  std::string config_path;
  std::string coeffs_path;
  bool real_part = false;
  std::string suite = "all";
  int configs = 100;
};

Group group_of(const RunSpec& s) {
  try {
    return parse_group(s.group);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Norm norm_of(const RunSpec& s) {
  try {
    return parse_norm(s.p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int require_D(const RunSpec& s) {
  if (s.D < 0) throw UsageError("--D is required and must be >= 0");
  return s.D;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --out when given, otherwise to `out`.
void emit(const RunSpec& s, std::ostream& out, const std::string& text) {
  if (s.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(s.out, std::ios::binary);
  if (!f || !(f << text)) throw std::runtime_error("cannot write '" + s.out + "'");
}

std::string fmt_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

int cmd_enumerate(const RunSpec& s, std::ostream& out) {
  const auto g = group_of(s);
  const DegreeSpec spec{norm_of(s), require_D(s)};
  if (s.nu < 1) throw UsageError("--nu must be >= 1");
  const auto tuples = enumerate_K(g, s.nu, spec);
  std::string text;
  if (s.count_only) {
    text = std::to_string(tuples.size()) + "\n";
  } else {
    for (const auto& t : tuples) text += format_tuple(t, g) + "\n";
  }
  emit(s, out, text);
  return kExitOk;
}

int cmd_classify(const RunSpec& s, std::ostream& out) {
  const auto g = group_of(s);
  std::ostringstream text;
  if (!s.tuple.empty()) {
    BasisTuple t;
    try {
      t = parse_tuple(s.tuple, g);
    } catch (const FormatError& e) {
      throw UsageError(e.what());
    }
    if (!satisfies_constraints(t, g)) throw UsageError("tuple violates the group constraints");
    text << (classify(t, g) == Dependence::dependent ? "dependent" : "independent") << '\n';
    if (t.order() >= 2) {
      for (const auto& d : invariant_decompositions(t, g)) {
        text << '[' << format_tuple(d.left, g) << "] [" << format_tuple(d.right, g) << "]\n";
      }
    }
  } else {
    const DegreeSpec spec{norm_of(s), require_D(s)};
    if (s.nu < 1) throw UsageError("--nu must be >= 1 (or pass --tuple)");
    const auto c = count_sets(g, s.nu, spec);
    text << "total,dependent,independent\n" << c.total << ',' << c.dependent << ',' << c.independent << '\n';
  }
  emit(s, out, text.str());
  return kExitOk;
}

Algorithm single_alg(const RunSpec& s) {
  if (s.alg.size() != 1) throw UsageError("--alg takes a single value here");
  try {
    return parse_algorithm(s.alg.front());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_build(const RunSpec& s, std::ostream& out) {
  const auto g = group_of(s);
  const DegreeSpec spec{norm_of(s), require_D(s)};
  if (s.numax.size() != 1 || s.numax.front() < 1) throw UsageError("--numax takes a single value >= 1");
  const auto alg = single_alg(s);
  if (s.n < 1) throw UsageError("--n must be >= 1");
  emit(s, out, serialize(build(g, spec, s.numax.front(), alg, s.n)));
  return kExitOk;
}

int cmd_stats(const RunSpec& s, std::ostream& out) {
  const auto g = group_of(s);
  const auto p = norm_of(s);
  if (s.numax.empty()) throw UsageError("--numax is required");
  int lo = s.Dmin;
  int hi = s.Dmax;
  if (s.D >= 0) lo = hi = s.D;
  if (hi < 0 || lo < 0 || lo > hi) throw UsageError("give --D or a range --Dmin..--Dmax");
  if (s.n < 1) throw UsageError("--n must be >= 1");
  std::vector<Algorithm> algs;
  for (const auto& a : s.alg) {
    try {
      algs.push_back(parse_algorithm(a));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::sort(algs.begin(), algs.end());
  algs.erase(std::unique(algs.begin(), algs.end()), algs.end());
  auto numax = s.numax;
  std::sort(numax.begin(), numax.end());
  numax.erase(std::unique(numax.begin(), numax.end()), numax.end());
  if (numax.front() < 1) throw UsageError("--numax values must be >= 1");

  std::ostringstream csv;
  csv << "group,p,numax,D,alg,n,num_targets,num_dependent,num_independent,num_aux,num_total,ratio_dep,ratio_aux\n";
  for (int nu : numax) {
    for (int D = lo; D <= hi; ++D) {
      for (auto alg : algs) {
        const int n = alg == Algorithm::original ? 1 : s.n;
        const auto st = stats(build(g, {p, D}, nu, alg, n));
        csv << group_name(g) << ',' << norm_name(p) << ',' << nu << ',' << D << ',' << algorithm_name(alg) << ','
            << n << ',' << st.num_targets << ',' << st.num_dependent << ',' << st.num_independent << ','
            << st.num_aux << ',' << st.num_total << ',' << fmt_double(st.ratio_dep) << ','
            << fmt_double(st.ratio_aux) << '\n';
      }
    }
  }
  emit(s, out, csv.str());
  return kExitOk;
}

int cmd_eval(const RunSpec& s, std::ostream& out) {
  if (s.graph_path.empty() || s.config_path.empty()) throw UsageError("eval needs --graph and --config");
  const auto graph = deserialize(read_file(s.graph_path));
  const auto config = parse_config(read_file(s.config_path));
  if (config.group != graph.meta().group) throw std::runtime_error("configuration group does not match the graph");
  std::ostringstream text;
  if (!s.coeffs_path.empty()) {
    const auto coeffs = parse_coefficients(read_file(s.coeffs_path), graph.meta().group);
    const auto phi = eval_model(graph, coeffs, config, {s.real_part});
    text << fmt_double(phi.real()) << ' ' << fmt_double(phi.imag()) << '\n';
  } else {
    const auto values = eval_graph(graph, pool(graph.meta().group, graph.meta().spec, config));
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      text << i << ' ' << fmt_double(values(i).real()) << ' ' << fmt_double(values(i).imag()) << '\n';
    }
  }
  emit(s, out, text.str());
  return kExitOk;
}

int cmd_verify(const RunSpec& s, std::ostream& out) {
  static const std::vector<std::string> known{"oracle", "t-exact-count", "invariance", "classifier", "all"};
  if (std::find(known.begin(), known.end(), s.suite) == known.end()) throw UsageError("unknown suite '" + s.suite + "'");
  const auto g = group_of(s);
  const auto p = norm_of(s);
  const int numax = s.numax.empty() ? 4 : s.numax.front();
  const int D = s.D >= 0 ? s.D : 6;
  const auto want = [&](const char* name) { return s.suite == "all" || s.suite == name; };

  std::vector<SuiteResult> results;
  if (want("t-exact-count")) results.push_back(verify_torus_exact_count(s.numax.empty() ? 6 : numax, s.Dmax >= 0 ? s.Dmax : 30));
  if (want("classifier")) results.push_back(verify_classifier(g, numax, {p, D}));
  if (want("oracle")) results.push_back(verify_eval_oracle(g, numax, {p, D}, s.configs, s.seed));
  if (want("invariance")) results.push_back(verify_invariance(g, numax, {p, D}, s.configs, s.seed));

  bool ok = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitRuntime;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric polynomial basis enumeration and recursive evaluation graphs"};
  app.require_subcommand(1);
  RunSpec s;

  auto common = [&s](CLI::App* sub) {
    sub->add_option("--group", s.group, "Symmetry group: T, SO2, O3, O3F");
    sub->add_option("--p", s.p, "Degree norm: 1, 2, inf");
    sub->add_option("--D", s.D, "Maximum degree");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List K_G(nu, D)");
  common(enumerate);
  enumerate->add_option("--nu", s.nu, "Correlation order")->required();
  enumerate->add_flag("--count-only", s.count_only, "Print only the number of tuples");
  enumerate->add_option("--out", s.out, "Output file");

  auto* classify_cmd = app.add_subcommand("classify", "Dependent/independent classification");
  common(classify_cmd);
  classify_cmd->add_option("--nu", s.nu, "Correlation order (counts mode)");
  classify_cmd->add_option("--tuple", s.tuple, "Single tuple, comma-separated components");
  classify_cmd->add_option("--out", s.out, "Output file");

  auto* build_cmd = app.add_subcommand("build", "Build an evaluation graph");
  common(build_cmd);
  build_cmd->add_option("--numax", s.numax, "Maximum correlation order")->required();
  build_cmd->add_option("--alg", s.alg, "Insertion heuristic: orig or gen");
  build_cmd->add_option("--n", s.n, "Sub-tuple size for gen");
  build_cmd->add_option("--out", s.out, "Graph file");

  auto* stats_cmd = app.add_subcommand("stats", "CSV of node counts and ratios");
  common(stats_cmd);
  stats_cmd->add_option("--numax", s.numax, "Maximum correlation order(s)")->required()->delimiter(',');
  stats_cmd->add_option("--Dmin", s.Dmin, "First degree of the range");
  stats_cmd->add_option("--Dmax", s.Dmax, "Last degree of the range");
  stats_cmd->add_option("--alg", s.alg, "Heuristic(s): orig, gen")->delimiter(',');
  stats_cmd->add_option("--n", s.n, "Sub-tuple size for gen");
  stats_cmd->add_option("--out", s.out, "CSV file");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate node values or a model");
  eval_cmd->add_option("--graph", s.graph_path, "Graph file")->required();
  eval_cmd->add_option("--config", s.config_path, "Particle configuration file")->required();
  eval_cmd->add_option("--coeffs", s.coeffs_path, "Coefficient file");
  eval_cmd->add_flag("--real", s.real_part, "Report the real part of the model only");
  eval_cmd->add_option("--out", s.out, "Output file");

  auto* verify_cmd = app.add_subcommand("verify", "Run self-check suites");
  common(verify_cmd);
  verify_cmd->add_option("--suite", s.suite, "oracle, t-exact-count, invariance, classifier, all");
  verify_cmd->add_option("--numax", s.numax, "Maximum correlation order");
  verify_cmd->add_option("--Dmax", s.Dmax, "Largest degree (t-exact-count)");
  verify_cmd->add_option("--seed", s.seed, "RNG seed");
  verify_cmd->add_option("--configs", s.configs, "Random configurations per suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(s, out);
    if (classify_cmd->parsed()) return cmd_classify(s, out);
    if (build_cmd->parsed()) return cmd_build(s, out);
    if (stats_cmd->parsed()) return cmd_stats(s, out);
    if (eval_cmd->parsed()) return cmd_eval(s, out);
    if (verify_cmd->parsed()) return cmd_verify(s, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace acedag::cli
