// pvclift command-line driver: runs the verifiers on cliques, stars and
// user graphs and prints reproducible JSON certificates or CSV tables.
//
// Exit codes: 0 verified / as expected, 2 negative verdict, 1 usage or IO.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pvclift/cert/certificate.hpp"
#include "pvclift/hierarchy/verifier.hpp"
#include "pvclift/instances/graph.hpp"
#include "pvclift/lasserre/lasserre.hpp"
#include "pvclift/parallel.hpp"

namespace {

using namespace pvclift;
using linalg::Rational;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;

struct Common {
  int threads = 0;
  std::string out;
  std::string format = "json";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const Common& c) {
  std::cout << text;
  if (c.out.empty()) return;
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot open " + c.out + " for writing");
  f << text;
  if (!f) throw UsageError("write to " + c.out + " failed");
}

Rational default_p(int n, int r, int t) {
  if (n - 2 * r < 2) throw UsageError("default p needs n - 2r >= 2; pass --p");
  return linalg::make_rational(linalg::Integer(t), linalg::binomial(static_cast<unsigned long>(n - 2 * r), 2));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

const char* kCsvHeader =
    "n,r,t,p,p_decimal,sa_objective,sa_objective_decimal,opt,gap_bound,gap_bound_decimal,feasible,hypothesis_ok,"
    "error\n";

struct Row {
  int n = 0, r = 0, t = 0;
  std::optional<Rational> p, objective, opt, gap;
  std::optional<bool> feasible;
  std::string error;
};

Row blank_row(int n, int r, int t) {
  Row row;
  row.n = n;
  row.r = r;
  row.t = t;
  return row;
}

std::string csv_row(const Row& row) {
  auto exact = [](const std::optional<Rational>& q) { return q ? linalg::to_fraction_string(*q) : std::string(); };
  auto dec = [](const std::optional<Rational>& q) { return q ? linalg::to_decimal(*q) : std::string(); };
  std::ostringstream os;
  os << row.n << ',' << row.r << ',' << row.t << ',' << exact(row.p) << ',' << dec(row.p) << ','
     << exact(row.objective) << ',' << dec(row.objective) << ',' << exact(row.opt) << ',' << exact(row.gap) << ','
     << dec(row.gap) << ',' << (row.feasible ? (*row.feasible ? "true" : "false") : "") << ','
     << (row.n >= 2 * row.r + 2 * row.t + 2 ? "true" : "false") << ',' << csv_field(row.error) << '\n';
  return os.str();
}

hierarchy::SaVerdict run_level(const std::string& level, const moments::MomentVector& mv, int t, int r,
                               std::optional<std::size_t> sample, std::uint64_t seed) {
  if (level == "sa") return hierarchy::verify_sa(mv, t, r);
  if (level == "sap") return hierarchy::verify_sap(mv, t, r);
  hierarchy::XynOptions opts;
  opts.sample = sample;
  opts.seed = seed;
  return hierarchy::verify_xyn_family(mv, t, r, opts);
}

Row to_row(int n, int r, int t, const Rational& p, const hierarchy::SaVerdict& v) {
  Row row = blank_row(n, r, t);
  row.p = p;
  row.objective = v.objective_value;
  row.opt = v.integral_opt;
  row.gap = v.integrality_gap_lower_bound;
  row.feasible = v.feasible;
  return row;
}

std::vector<std::array<int, 3>> parse_grid(const std::string& text) {
  std::vector<std::array<int, 3>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::array<int, 3> v{};
    char c1 = 0, c2 = 0;
    std::istringstream is(item);
    if (!(is >> v[0] >> c1 >> v[1] >> c2 >> v[2]) || c1 != ':' || c2 != ':' || !(is >> std::ws).eof()) {
      throw UsageError("bad grid entry '" + item + "', expected n:r:t");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty grid");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifiers for lift-and-project relaxations of partial vertex cover"};
  app.set_version_flag("--version", std::string(cert::tool_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--threads", common.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", common.out, "Also write the output to this file");
  app.add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  int n = 0, r = 0, t = 0;
  std::string level = "sa", p_text, grid, graph_path;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 1;
  std::size_t sa1_cap = 100;

  auto* verify = app.add_subcommand("verify", "Check the D_p moment vector on K_n against a hierarchy level");
  verify->add_option("--level", level, "sa, sap or xyn")->required()->check(CLI::IsMember({"sa", "sap", "xyn"}));
  verify->add_option("--n", n, "Clique size")->required()->check(CLI::Range(1, 1 << 20));
  verify->add_option("--r", r, "Level")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--t", t, "Demand")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--p", p_text, "Vertex probability, e.g. 1/28 (default t/binom(n-2r,2))");
  verify->add_option("--sample", sample, "xyn: check this many seeded random pairs");
  verify->add_option("--seed", seed, "Sampling seed");

  auto* star = app.add_subcommand("star", "LP, SDP, level-1 SA and integral optimum on the star");
  star->add_option("--n", n, "Number of leaves")->required()->check(CLI::PositiveNumber);
  star->add_option("--t", t, "Demand")->required()->check(CLI::PositiveNumber);
  star->add_option("--sa1-max-vars", sa1_cap, "Skip the level-1 SA LP above this many variables");

  auto* lass = app.add_subcommand("lasserre", "Refute level-1 Lasserre feasibility of the SA point on K_n");
  lass->add_option("--n", n, "Clique size")->required()->check(CLI::PositiveNumber);
  lass->add_option("--r", r, "SA level the point comes from")->required()->check(CLI::NonNegativeNumber);
  lass->add_option("--t", t, "Demand")->required()->check(CLI::NonNegativeNumber);

  auto* table = app.add_subcommand("gap-table", "Run a verifier over a grid and tabulate gap bounds");
  table->add_option("--grid", grid, "Comma-separated n:r:t triples")->required();
  table->add_option("--level", level, "sa, sap or xyn")->check(CLI::IsMember({"sa", "sap", "xyn"}));
  table->add_option("--sample", sample, "xyn: pairs sampled per row");
  table->add_option("--seed", seed, "Sampling seed");

  auto* gopt = app.add_subcommand("graph-opt", "Brute-force optimum and LP relaxation of a graph file");
  gopt->add_option("--graph", graph_path, "Graph file")->required();
  gopt->add_option("--t", t, "Demand")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    set_thread_count(common.threads);

    if (verify->parsed()) {
      const Rational p = p_text.empty() ? default_p(n, r, t) : linalg::parse_rational(p_text);
      const moments::MomentVector mv(moments::DistParams(instances::make_clique(n), p));
      const auto v = run_level(level, mv, t, r, sample, seed);
      if (common.format == "csv") {
        emit(std::string(kCsvHeader) + csv_row(to_row(n, r, t, p, v)), common);
      } else {
        auto j = cert::sa_certificate(level, mv, t, r, v);
        if (level == "xyn" && sample) {
          j["parameters"]["sample"] = *sample;
          j["parameters"]["seed"] = seed;
        }
        emit(cert::render(j), common);
      }
      return v.feasible ? kOk : kNegative;
    }

    if (star->parsed()) {
      const auto s = cert::run_star(n, t, sa1_cap, Execution::parallel);
      emit(cert::render(cert::star_certificate(s)), common);
      return s.as_expected ? kOk : kNegative;
    }

    if (lass->parsed()) {
      const auto c = lasserre::lasserre1_refutes(n, r, t);
      emit(cert::render(cert::lasserre_certificate(r, c)), common);
      return c.refuted ? kOk : kNegative;
    }

    if (table->parsed()) {
      const bool as_json = app.get_option("--format")->count() > 0 && common.format == "json";
      const auto cells = parse_grid(grid);
      std::string csv = kCsvHeader;
      cert::Json rows = cert::Json::array();
      for (const auto& [gn, gr, gt] : cells) {
        Row row = blank_row(gn, gr, gt);
        try {
          const Rational p = default_p(gn, gr, gt);
          row.p = p;
          const moments::MomentVector mv(moments::DistParams(instances::make_clique(gn), p));
          const auto v = run_level(level, mv, gt, gr, sample, seed);
          row = to_row(gn, gr, gt, p, v);
          if (as_json) rows.push_back(cert::sa_certificate(level, mv, gt, gr, v));
        } catch (const std::exception& e) {
          row.error = e.what();
          if (as_json) {
            rows.push_back(cert::Json{{"n", gn}, {"r", gr}, {"t", gt}, {"error", row.error}});
          }
        }
        csv += csv_row(row);
      }
      emit(as_json ? cert::render(rows) : csv, common);
      return kOk;
    }

    if (gopt->parsed()) {
      const auto g = instances::read_graph_file(graph_path);
      const auto rep = cert::run_graph_opt(g, t, Execution::parallel);
      emit(cert::render(cert::graph_opt_certificate(g, t, rep)), common);
      return rep.lp_certified ? kOk : kNegative;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
