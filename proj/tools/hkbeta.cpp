#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hkd/commands.hpp"
#include "hkd/errors.hpp"

namespace {

using hkd::Json;

constexpr int kExitInvalid = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitComputation = 1;

/// One polytope source: a JSON file (or "-" for stdin) or a builtin string.
struct Source {
  std::string file;
  std::string builtin;

  void add(CLI::App* app, const std::string& prefix) {
    auto* f = app->add_option("--" + prefix + "spec", file, "PairSpec JSON file ('-' reads stdin)");
    auto* b = app->add_option("--" + prefix + "builtin", builtin, "builtin spec, e.g. hirzebruch:1,2,1");
    f->excludes(b);
  }

  bool given() const { return !file.empty() || !builtin.empty(); }

  Json json() const {
    if (!builtin.empty()) return Json(builtin);
    if (file.empty()) throw hkd::InvalidInput("no spec given");
    std::stringstream text;
    if (file == "-") {
      text << std::cin.rdbuf();
    } else {
      std::ifstream in(file);
      if (!in) throw hkd::InvalidInput("cannot read " + file);
      text << in.rdbuf();
    }
    try {
      return Json::parse(text.str());
    } catch (const Json::parse_error& e) {
      throw hkd::InvalidInput(std::string("malformed JSON: ") + e.what());
    }
  }

  hkd::Polytope polytope() const { return hkd::polytope_from_json(json()); }
  hkd::ToricPair pair() const { return hkd::pair_from_json(json()); }
};

std::vector<hkd::Rational> parse_rational_list(const std::string& text) {
  std::vector<hkd::Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(hkd::parse_rational(item));
    } catch (const std::exception&) {
      throw hkd::InvalidInput("bad rational '" + item + "'");
    }
  }
  return out;
}

unsigned default_threads() {
  const char* env = std::getenv("HKBETA_THREADS");
  return env ? static_cast<unsigned>(std::strtoul(env, nullptr, 10)) : 0U;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Kunz and beta density functions of projective toric pairs"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads (0 = all cores; env HKBETA_THREADS)");

  auto* density = app.add_subcommand("density", "piecewise f and g, e_HK and beta (d <= 4)");
  Source density_src;
  density_src.add(density, "");
  bool with_float = false;
  density->add_flag("--float", with_float, "add approximate IEEE doubles");

  auto* count = app.add_subcommand("count", "lattice counts of q times the Eto region by degree (CSV q,m,count)");
  Source count_src;
  count_src.add(count, "");
  std::uint64_t q = 0;
  std::uint64_t m = 0;
  count->add_option("--q", q, "Frobenius power q")->required();
  auto* m_opt = count->add_option("--m", m, "single degree");
  auto* all_flag = count->add_flag("--all", "every degree");
  m_opt->excludes(all_flag);

  auto* conv = app.add_subcommand("converge", "f_n, g_n against f, g on a lambda grid (CSV)");
  Source conv_src;
  conv_src.add(conv, "");
  std::vector<std::uint64_t> q_list;
  std::size_t grid = 40;
  std::string margin_text = "1/64";
  conv->add_option("--q-list", q_list, "values of q")->delimiter(',')->required();
  conv->add_option("--grid", grid, "number of interior grid points k lambda_max/(grid+1)");
  conv->add_option("--margin", margin_text, "minimum distance from a breakpoint");

  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart quasi-polynomials and Minkowski chamber checks");
  Source ehr_src, ehr_second;
  ehr_src.add(ehr, "");
  ehr_second.add(ehr, "second-");
  hkd::EhrhartOptions eopts;
  std::string lambdas_text, r1_text = "1", r2_text = "1";
  ehr->add_option("--mode", eopts.mode, "qp | reciprocity | minkowski | slice-scan | chambers")
      ->check(CLI::IsMember({"qp", "reciprocity", "minkowski", "slice-scan", "chambers"}));
  ehr->add_option("--n-max", eopts.n_max, "largest dilate");
  ehr->add_option("--lambdas", lambdas_text, "comma-separated slice heights for slice-scan");
  ehr->add_option("--r1", r1_text, "first Minkowski factor");
  ehr->add_option("--r2", r2_text, "second Minkowski factor");
  ehr->add_option("--samples", eopts.samples, "chamber samples");
  ehr->add_option("--seed", eopts.seed, "chamber sampling seed");

  auto* segre = app.add_subcommand("segre", "g of a Segre product by formula and by direct slicing");
  Source segre_a, segre_b;
  segre_a.add(segre, "a-");
  segre_b.add(segre, "b-");

  auto* cat = app.add_subcommand("catalog", "list builtin specs");
  auto* echo_cmd = app.add_subcommand("echo", "explicit form of a spec");
  Source echo_src;
  echo_src.add(echo_cmd, "");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*density) {
      print(hkd::cmd_density(density_src.pair(), threads, with_float));
    } else if (*count) {
      std::optional<std::uint64_t> single;
      if (m_opt->count() > 0) single = m;
      if (!single && all_flag->count() == 0) throw hkd::InvalidInput("count needs --m or --all");
      std::cout << hkd::cmd_count(count_src.pair(), q, single, threads);
    } else if (*conv) {
      hkd::ConvergeOptions copts;
      copts.qs = q_list;
      copts.grid = grid;
      copts.margin = parse_rational_list(margin_text).at(0);
      copts.threads = threads;
      std::cout << hkd::cmd_converge(conv_src.pair(), copts);
    } else if (*ehr) {
      eopts.threads = threads;
      eopts.lambdas = parse_rational_list(lambdas_text);
      eopts.r1 = parse_rational_list(r1_text).at(0);
      eopts.r2 = parse_rational_list(r2_text).at(0);
      if (ehr_second.given()) eopts.second = ehr_second.polytope();
      print(hkd::cmd_ehrhart(ehr_src.polytope(), eopts));
    } else if (*segre) {
      if (!segre_a.given() || !segre_b.given()) throw hkd::InvalidInput("segre needs both --a-* and --b-* specs");
      print(hkd::cmd_segre(segre_a.pair(), segre_b.pair(), threads));
    } else if (*cat) {
      print(Json{{"schema", hkd::kSchema}, {"command", "catalog"}, {"builtins", hkd::catalog()}});
    } else if (*echo_cmd) {
      print(Json{{"schema", hkd::kSchema}, {"command", "echo"}, {"pair", hkd::echo(echo_src.polytope())}});
    }
  } catch (const hkd::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const hkd::UnsupportedDimension& e) {
    std::cerr << "unsupported dimension: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const hkd::ComputationError& e) {
    std::cerr << "computation error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: missing value\n";
    return kExitInvalid;
  }
  return 0;
}
