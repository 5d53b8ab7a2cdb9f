#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgeom/bounds.hpp"
#include "pgeom/embed.hpp"
#include "pgeom/error.hpp"
#include "pgeom/extremal.hpp"
#include "pgeom/geometry.hpp"
#include "pgeom/io.hpp"

namespace pgeom::cli {
namespace {

constexpr const char* kThreadsEnv = "PGEOM_THREADS";

struct BudgetFlags {
  std::uint64_t max_nodes = Budget{}.max_nodes;
  double max_seconds = 0;
  unsigned threads = 0;
  bool deterministic = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-nodes", max_nodes, "Node budget before the result degrades to a lower bound")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-seconds", max_seconds, "Wall-clock budget (0 = none)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--threads", threads, "Worker threads (overrides " + std::string(kThreadsEnv) + ")")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--deterministic", deterministic, "Single worker; reproducible witnesses");
  }

  Budget resolve() const {
    Budget b;
    b.max_nodes = max_nodes;
    if (max_seconds > 0) b.max_time = std::chrono::milliseconds(static_cast<long long>(max_seconds * 1000));
    b.threads = 1;
    if (deterministic) return b;
    if (threads > 0) {
      b.threads = threads;
    } else if (const char* env = std::getenv(kThreadsEnv); env && *env) {
      try {
        const long v = std::stol(env);
        if (v < 1) throw std::invalid_argument(env);
        b.threads = static_cast<unsigned>(v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::invalid_argument, std::string(kThreadsEnv) + " must be a positive integer");
      }
    }
    return b;
  }
};

void print_error(std::ostream& err, std::string_view code, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = code;
  j["message"] = message;
  err << j.dump() << '\n';
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

Geometry load(const std::string& path) { return io::geometry_from_json(io::read_file(path)); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations over finite projective geometries", "pgeom"};
  app.require_subcommand(1);

  // make
  std::string family;
  int make_m = 0, make_q = 0, make_c = 0;
  std::string make_out;
  auto* make = app.add_subcommand("make", "Write PG(m-1,q), AG(m-1,q) or G(m-1,q,c) as geometry JSON");
  make->add_option("--family", family, "pg | ag | g")->required()->check(CLI::IsMember({"pg", "ag", "g"}));
  make->add_option("--m", make_m, "Rank")->required();
  make->add_option("--q", make_q, "Field order")->required();
  make->add_option("--c", make_c, "Co-rank of the removed flat (family g)");
  make->add_option("--out", make_out, "Output path (default stdout)");

  // critical
  std::string critical_in;
  auto* critical = app.add_subcommand("critical", "Print the critical exponent");
  critical->add_option("geometry", critical_in)->required();

  // contains
  std::string host_in, guest_in;
  auto* cont = app.add_subcommand("contains", "Decide whether guest is a restriction of host");
  cont->add_option("host", host_in)->required();
  cont->add_option("guest", guest_in)->required();

  // extremal
  std::string forbid_in;
  int ex_n = 0;
  BudgetFlags ex_budget;
  auto* extremal = app.add_subcommand("extremal", "Exact ex_q(H; n) with a witness");
  extremal->add_option("forbid", forbid_in)->required();
  extremal->add_option("--n", ex_n, "Ambient rank")->required();
  ex_budget.attach(extremal);

  // density
  std::string density_in, density_out;
  int n_min = 0, n_max = 0;
  BudgetFlags density_budget;
  auto* density = app.add_subcommand("density", "CSV table of ex_q(H; n) / |PG(n-1, q)|");
  density->add_option("forbid", density_in)->required();
  density->add_option("--n-min", n_min)->required();
  density->add_option("--n-max", n_max)->required();
  density->add_option("--out", density_out, "CSV path (default stdout)");
  density_budget.attach(density);

  // sparse-flat
  std::string sparse_in;
  int sparse_m = 0, sparse_c = 0;
  auto* sparse = app.add_subcommand("sparse-flat", "Find a rank-m flat F with rank(F ∩ G) <= m - c");
  sparse->add_option("geometry", sparse_in)->required();
  sparse->add_option("--m", sparse_m)->required();
  sparse->add_option("--c", sparse_c)->required();

  // bounds
  int bound_q = 0;
  std::string bound_m, bound_eps, mode = "closed-form";
  std::uint64_t bound_c = 0;
  std::size_t digit_cap = kDefaultDigitCap;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form or recursive bound");
  bounds->add_option("--q", bound_q)->required();
  bounds->add_option("--m", bound_m, "Rank (arbitrary precision)")->required();
  bounds->add_option("--c", bound_c)->required();
  bounds->add_option("--eps", bound_eps, "Exact rational num/den")->required();
  bounds->add_option("--mode", mode)->check(CLI::IsMember({"closed-form", "recursive"}));
  bounds->add_option("--digit-cap", digit_cap, "Decimal digits kept exact")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, to_string(ErrorCode::invalid_argument), e.what());
    return kExitError;
  }

  try {
    if (*make) {
      if (make_m < 1) throw Error(ErrorCode::invalid_argument, "--m must be at least 1");
      const Field f = Field::make(make_q);
      std::optional<Geometry> g;
      if (family == "pg") {
        g = make_pg(make_m, f);
      } else if (family == "ag") {
        g = make_ag(make_m, f);
      } else {
        if (make->count("--c") == 0) throw Error(ErrorCode::invalid_argument, "family g needs --c");
        if (make_c < 1 || make_c > make_m) throw Error(ErrorCode::invalid_argument, "--c must lie in [1, m]");
        g = make_g(make_m, f, make_c);
      }
      emit(out, make_out, io::geometry_to_json(*g) + "\n");
      return kExitOk;
    }
    if (*critical) {
      out << critical_exponent(load(critical_in)) << '\n';
      return kExitOk;
    }
    if (*cont) {
      const Geometry host = load(host_in);
      const Geometry guest = load(guest_in);
      const auto w = contains(host, guest);
      if (!w) {
        out << "not-contained\n";
        return kExitNegative;
      }
      if (!verify_witness(host, guest, *w)) throw std::logic_error("embedding witness failed verification");
      out << io::witness_to_json(*w) << '\n';
      return kExitOk;
    }
    if (*extremal) {
      if (ex_n < 1) throw Error(ErrorCode::invalid_argument, "--n must be at least 1");
      const Budget budget = ex_budget.resolve();
      out << io::extremal_to_json(ex_exact(load(forbid_in), ex_n, budget)) << '\n';
      return kExitOk;
    }
    if (*density) {
      if (n_min < 1) throw Error(ErrorCode::invalid_argument, "--n-min must be at least 1");
      const Budget budget = density_budget.resolve();
      emit(out, density_out, io::density_to_csv(density_table(load(density_in), n_min, n_max, budget)));
      return kExitOk;
    }
    if (*sparse) {
      const Geometry g = load(sparse_in);
      const auto flat = find_sparse_flat(g, sparse_m, sparse_c);
      if (!flat) {
        out << "not-found\n";
        return kExitNegative;
      }
      out << io::flat_to_json(g.space(), *flat) << '\n';
      return kExitOk;
    }
    if (*bounds) {
      const Rational eps = parse_rational(bound_eps);
      BigInt m;
      if (m.set_str(bound_m, 10) != 0) throw Error(ErrorCode::parse_error, "--m must be an integer");
      Field::make(bound_q);
      if (mode == "closed-form") {
        if (bound_q != 2) throw Error(ErrorCode::unsupported, "the closed-form bound exists only for q = 2");
        out << io::closed_form_bound_to_json(m, bound_c, eps, r_main2_binary(m, bound_c, eps, digit_cap)) << '\n';
      } else {
        if (bound_q != 2)
          throw Error(ErrorCode::unsupported, "no base bound for q > 2; use the library with an injected base");
        const RecursiveBound b = r_main2_recursive(m, bound_q, bound_c, eps, binary_base(digit_cap));
        out << io::recursive_bound_to_json(bound_q, m, bound_c, eps, b) << '\n';
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    print_error(err, to_string(e.code()), e.what());
    return kExitError;
  } catch (const std::exception& e) {
    print_error(err, "InternalError", e.what());
    return kExitError;
  }
  return kExitError;
}

}  // namespace pgeom::cli
