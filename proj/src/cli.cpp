#include "cobweb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <vector>

#include "cobweb/bench.hpp"
#include "cobweb/chains.hpp"
#include "cobweb/export.hpp"
#include "cobweb/fibcalc.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/zeta.hpp"

namespace cobweb::cli {

namespace {

constexpr const char* kGrammar =
    "usage: cobweb <verb> [args] [--format plain|csv|dot|structured] "
    "[--out <path>] [--max-n <int>] [--unsafe-enumeration-limit <int>]\n"
    "verbs:\n"
    "  fib <n>                  Fibonacci number F_n\n"
    "  fibfact <n>              F-factorial n_F!\n"
    "  falling <n> <k>          falling F-factorial F_n ... F_{n-k+1}\n"
    "  binom <n> <k>            Fibonomial coefficient\n"
    "  row <n>                  Fibonomial row (plain|csv)\n"
    "  build <depth>            cobweb poset summary (plain|structured)\n"
    "  export <depth>           zeta matrix or Hasse diagram (csv|dot)\n"
    "  chains <n> | <k> <n>     chains to level n, formula vs enumeration "
    "(plain|csv)\n"
    "  verify [--obs 1|2|3|all] sweep the counting observations "
    "(plain|structured)\n"
    "  bench <max_n>            formula vs enumeration timings\n";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format;
  std::string out_path;
  std::optional<std::uint32_t> max_n;
  std::optional<std::uint64_t> enumeration_limit;
  std::string obs = "all";
};

void require_format(const Globals& g, std::initializer_list<const char*> allowed,
                    const std::string& verb) {
  for (const char* a : allowed) {
    if (g.format == a) {
      return;
    }
  }
  std::string list;
  for (const char* a : allowed) {
    list += list.empty() ? a : std::string("|") + a;
  }
  throw UsageError("--format " + g.format + " is not supported by '" + verb +
                   "' (expected " + list + ")");
}

void warn_depth(std::uint32_t depth, std::ostream& err) {
  if (depth > kWarnDepth) {
    err << "warning: depth " << depth << " materializes "
        << CobwebPoset(depth).vertex_count() << " vertices\n";
  }
}

EnumerationOptions enumeration_options(const Globals& g, std::ostream& err) {
  EnumerationOptions opts;
  if (g.enumeration_limit) {
    opts.limit = *g.enumeration_limit;
    err << "WARNING: enumeration guard overridden: limit " << opts.limit
        << " chains (default " << kDefaultEnumerationLimit << ")\n";
  }
  return opts;
}

int cmd_verify(const Globals& g, std::ostream& os, std::ostream& err) {
  require_format(g, {"plain", "structured"}, "verify");
  std::vector<Observation> which;
  if (g.obs == "all") {
    which = {Observation::obs1, Observation::obs2, Observation::obs3};
  } else if (auto o = parse_observation(g.obs)) {
    which = {*o};
  } else {
    throw UsageError("--obs expects 1, 2, 3 or all, got '" + g.obs + "'");
  }
  const std::uint32_t max_n = g.max_n.value_or(7);
  const auto opts = enumeration_options(g, err);
  bool all_pass = true;
  for (auto obs : which) {
    const auto report = verify_observation(obs, max_n, opts);
    all_pass = all_pass && report.passed();
    if (g.format == "structured") {
      os << to_structured(report);
    } else {
      os << observation_id(obs) << ": "
         << (report.passed() ? "pass" : "FAIL") << " ("
         << report.cases().size() << " cases, "
         << report.counterexamples().size() << " counterexamples, max_n "
         << max_n << ")\n";
      for (const auto& c : report.counterexamples()) {
        os << "  counterexample k=" << c.k << " n=" << c.n;
        if (c.start) {
          os << " start=" << vertex_name(*c.start);
        }
        os << " formula=" << to_decimal(c.formula)
           << " oracle=" << to_decimal(c.oracle) << '\n';
      }
    }
  }
  return all_pass ? kOk : kVerificationFailed;
}

int cmd_chains(const Globals& g, const std::vector<std::uint32_t>& levels,
               std::ostream& os, std::ostream& err) {
  require_format(g, {"plain", "csv"}, "chains");
  const std::uint32_t n = levels.back();
  const std::uint32_t k = levels.size() == 2 ? levels.front() : 1;
  if (n == 0 || k == 0 || k > n) {
    throw UsageError("chains needs 1 <= k <= n");
  }
  if (levels.size() == 2 && k == n) {
    throw UsageError("chains <k> <n> needs k < n");
  }
  warn_depth(n, err);
  const auto opts = enumeration_options(g, err);
  const CobwebPoset poset(n);
  const Vertex start{k, 0};
  if (g.format == "csv") {
    auto visit = [&](std::span<const Vertex> chain) {
      for (std::size_t i = 0; i < chain.size(); ++i) {
        os << (i ? "," : "") << vertex_name(chain[i]);
      }
      os << '\n';
    };
    if (k == 1) {
      stream_from_root(poset, n, visit, opts.limit);
    } else {
      stream_layer_chains(poset, LayerSpec{start, n}, visit, opts.limit);
    }
    return kOk;
  }
  const BigCount formula = levels.size() == 1
                               ? count_from_root_formula(n)
                               : count_layer_chains_formula(k, n);
  const BigCount enumerated =
      levels.size() == 1 ? enumerate_from_root(poset, n, opts)
                         : enumerate_layer_chains(poset, LayerSpec{start, n}, opts);
  os << "from " << vertex_name(start) << " to level " << n << '\n'
     << "formula " << to_decimal(formula) << '\n'
     << "enumerated " << to_decimal(enumerated) << '\n';
  return formula == enumerated ? kOk : kVerificationFailed;
}

int cmd_bench(const Globals& g, std::uint32_t max_n, std::ostream& os,
              std::ostream& err) {
  require_format(g, {"plain"}, "bench");
  const auto rows = run_bench(max_n, enumeration_options(g, err));
  os << format_bench(rows);
  bool skipped = false;
  for (const auto& r : rows) {
    if (!r.counts_equal()) {
      err << "error: counts differ at n=" << r.n << '\n';
      return kVerificationFailed;
    }
    skipped = skipped || !r.enumerated;
  }
  if (skipped) {
    err << "note: enumeration skipped by the guard for some n; formula rows "
           "were still emitted\n";
    return kGuardRefused;
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fibonomial calculus and cobweb poset toolkit", "cobweb"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  Globals g;
  app.add_option("--format", g.format, "plain|csv|dot|structured")
      ->check(CLI::IsMember({"plain", "csv", "dot", "structured"}));
  app.add_option("--out", g.out_path, "write data output to this file");
  app.add_option("--max-n", g.max_n, "largest level for sweeps and bench");
  app.add_option("--unsafe-enumeration-limit", g.enumeration_limit,
                 "override the enumeration guard (chains visited)");

  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t depth = 0;
  std::optional<std::uint32_t> bench_n;
  std::vector<std::uint32_t> chain_levels;

  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci number F_n");
  fib_cmd->add_option("n", n)->required();
  auto* fibfact_cmd = app.add_subcommand("fibfact", "F-factorial n_F!");
  fibfact_cmd->add_option("n", n)->required();
  auto* falling_cmd = app.add_subcommand("falling", "falling F-factorial");
  falling_cmd->add_option("n", n)->required();
  falling_cmd->add_option("k", k)->required();
  auto* binom_cmd = app.add_subcommand("binom", "Fibonomial coefficient");
  binom_cmd->add_option("n", n)->required();
  binom_cmd->add_option("k", k)->required();
  auto* row_cmd = app.add_subcommand("row", "Fibonomial row");
  row_cmd->add_option("n", n)->required();
  auto* build_cmd = app.add_subcommand("build", "cobweb poset summary");
  build_cmd->add_option("depth", depth)->required();
  auto* export_cmd = app.add_subcommand("export", "zeta CSV or Hasse DOT");
  export_cmd->add_option("depth", depth)->required();
  auto* chains_cmd = app.add_subcommand("chains", "count chains to level n");
  chains_cmd->add_option("levels", chain_levels, "<n> or <k> <n>")
      ->required()
      ->expected(1, 2);
  auto* verify_cmd = app.add_subcommand("verify", "observation sweeps");
  verify_cmd->add_option("--obs", g.obs, "1|2|3|all");
  auto* bench_cmd = app.add_subcommand("bench", "formula vs enumeration");
  bench_cmd->add_option("max_n", bench_n);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << kGrammar;
    return kUsage;
  }

  std::ostringstream os;
  int status = kOk;
  try {
    if (fib_cmd->parsed() || fibfact_cmd->parsed() || falling_cmd->parsed() ||
        binom_cmd->parsed()) {
      if (g.format.empty()) g.format = "plain";
      require_format(g, {"plain"}, app.get_subcommands().front()->get_name());
      if (fib_cmd->parsed()) {
        os << to_decimal(fib(n)) << '\n';
      } else if (fibfact_cmd->parsed()) {
        os << to_decimal(fib_factorial(n)) << '\n';
      } else if (falling_cmd->parsed()) {
        os << to_decimal(falling_f_factorial(n, k)) << '\n';
      } else {
        os << to_decimal(fibonomial(n, k)) << '\n';
      }
    } else if (row_cmd->parsed()) {
      if (g.format.empty()) g.format = "plain";
      require_format(g, {"plain", "csv"}, "row");
      const char sep = g.format == "csv" ? ',' : ' ';
      const auto row = fibonomial_row(n);
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << sep;
        os << to_decimal(row[i]);
      }
      os << '\n';
    } else if (build_cmd->parsed()) {
      if (g.format.empty()) g.format = "plain";
      require_format(g, {"plain", "structured"}, "build");
      warn_depth(depth, err);
      const CobwebPoset poset(depth);
      std::string levels;
      for (auto s : poset.level_sizes()) {
        levels += (levels.empty() ? "" : ",") + std::to_string(s);
      }
      if (g.format == "structured") {
        os << "depth=" << depth << " levels=" << levels
           << " vertices=" << poset.vertex_count()
           << " covers=" << poset.cover_count() << '\n';
      } else {
        os << "depth " << depth << '\n'
           << "levels " << levels << '\n'
           << "vertices " << poset.vertex_count() << '\n'
           << "covers " << poset.cover_count() << '\n';
      }
    } else if (export_cmd->parsed()) {
      if (g.format.empty()) g.format = "csv";
      require_format(g, {"csv", "dot"}, "export");
      warn_depth(depth, err);
      const CobwebPoset poset(depth);
      os << (g.format == "csv" ? to_csv(zeta_matrix(poset)) : hasse_dot(poset));
    } else if (chains_cmd->parsed()) {
      if (g.format.empty()) g.format = "plain";
      status = cmd_chains(g, chain_levels, os, err);
    } else if (verify_cmd->parsed()) {
      if (g.format.empty()) g.format = "plain";
      status = cmd_verify(g, os, err);
    } else if (bench_cmd->parsed()) {
      if (g.format.empty()) g.format = "plain";
      if (bench_n && g.max_n && *bench_n != *g.max_n) {
        throw UsageError("bench: positional max_n and --max-n disagree");
      }
      const auto max_n = bench_n ? bench_n : g.max_n;
      if (!max_n) {
        throw UsageError("bench needs <max_n>");
      }
      status = cmd_bench(g, *max_n, os, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << kGrammar;
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n' << kGrammar;
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n' << kGrammar;
    return kUsage;
  } catch (const GuardRefusal& e) {
    err << "refused: " << e.what() << '\n';
    return kGuardRefused;
  } catch (const DenseCapExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kGuardRefused;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }

  if (g.out_path.empty()) {
    out << os.str();
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open --out " << g.out_path << '\n';
      return kUsage;
    }
    file << os.str();
  }
  return status;
}

}  // namespace cobweb::cli
