#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdd/errors.hpp"

namespace mdd::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (item.empty() || pos != item.size()) throw CLI::ValidationError("--dims", "not a list of integers: " + text);
    dims.push_back(value);
  }
  if (dims.empty()) throw CLI::ValidationError("--dims", "empty dimension list");
  return dims;
}

json dimension_histogram(const std::vector<std::size_t>& dims) {
  std::map<std::size_t, std::size_t> counts;
  std::size_t other = 0;
  for (const auto d : dims) {
    if (d >= 2 && d <= 5) {
      ++counts[d];
    } else {
      ++other;
    }
  }
  json h = json::object();
  for (std::size_t d = 2; d <= 5; ++d) h[std::to_string(d)] = counts[d];
  h["other"] = other;
  return h;
}

std::string ket(const BasisIndex& digits) {
  std::string s = "|";
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (it != digits.rbegin() && digits.size() > 1) s += ",";
    s += std::to_string(*it);
  }
  return s + ">";
}

double tolerance_from_env() {
  if (const char* env = std::getenv("MDDSIM_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
    throw CLI::ValidationError("MDDSIM_TOL", std::string("invalid tolerance '") + env + "'");
  }
  return kDefaultTolerance;
}

}  // namespace

BenchRow make_row(std::string benchmark, const Circuit& circuit, const RunResult& result) {
  const auto dims = circuit.reg.dims();
  return BenchRow{std::move(benchmark),
                  {dims.begin(), dims.end()},
                  result.op_count,
                  result.stats.node_count,
                  result.stats.distinct_complex,
                  result.runtime_seconds,
                  result.samples};
}

std::string to_json(const BenchRow& row) {
  json j;
  j["benchmark"] = row.benchmark;
  j["qudits"] = row.dims.size();
  j["dims"] = dimension_histogram(row.dims);
  j["operations"] = row.operations;
  j["nodes"] = row.nodes;
  j["distinct_complex"] = row.distinct_complex;
  j["runtime_seconds"] = row.runtime_seconds;
  j["samples"] = row.samples;
  return j.dump();
}

std::string to_table(const BenchRow& row) {
  const auto h = dimension_histogram(row.dims);
  char runtime[32];
  std::snprintf(runtime, sizeof runtime, "%.6f", row.runtime_seconds);
  std::ostringstream os;
  os << "benchmark  qudits  d2  d3  d4  d5  other  operations  nodes  distinct_complex  runtime_s\n";
  os << row.benchmark << "  " << row.dims.size() << "  " << h["2"] << "  " << h["3"] << "  " << h["4"] << "  "
     << h["5"] << "  " << h["other"] << "  " << row.operations << "  " << row.nodes << "  " << row.distinct_complex
     << "  " << runtime << "\n";
  for (const auto& s : row.samples) os << ket(s) << "\n";
  return os.str();
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed-dimensional qudit circuit simulator on decision diagrams", "mddsim"};
  app.require_subcommand(1);

  double tol = 0.0;
  bool as_json = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  std::string file;
  auto* simulate = app.add_subcommand("simulate", "Simulate a circuit file");
  simulate->add_option("file", file, "Circuit file")->required();
  simulate->add_option("--samples", samples, "Number of measurement samples");
  simulate->add_option("--seed", seed, "Sampling seed");
  simulate->add_option("--tol", tol, "Complex-table tolerance (fallback: MDDSIM_TOL)")->check(CLI::PositiveNumber);
  simulate->add_flag("--json", as_json, "Print a JSON object");

  auto* bench = app.add_subcommand("bench", "Run a generated benchmark");
  bench->require_subcommand(1);

  std::size_t ghz_n = 0;
  std::size_t ghz_dim = 3;
  auto* ghz = bench->add_subcommand("ghz", "GHZ state on n qudits");
  ghz->add_option("--n", ghz_n, "Number of qudits")->required();
  ghz->add_option("--dim", ghz_dim, "Qudit dimension")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));

  std::string w_dims;
  auto* wstate = bench->add_subcommand("wstate", "W-state on levels {0,1}");
  wstate->add_option("--dims", w_dims, "Comma-separated dimensions")->required();

  std::string r_dims;
  std::size_t r_ops = 0;
  std::uint64_t r_seed = 0;
  auto* random = bench->add_subcommand("random", "Random circuit");
  random->add_option("--dims", r_dims, "Comma-separated dimensions")->required();
  random->add_option("--ops", r_ops, "Number of gates")->required();
  random->add_option("--seed", r_seed, "Generator seed")->required();

  for (auto* sub : {ghz, wstate, random}) {
    sub->add_option("--tol", tol, "Complex-table tolerance (fallback: MDDSIM_TOL)")->check(CLI::PositiveNumber);
    sub->add_flag("--json", as_json, "Print a JSON object");
  }

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (tol == 0.0) tol = tolerance_from_env();
    RunOptions options;
    options.tolerance = tol;
    options.samples = samples;
    options.seed = seed;

    std::string name;
    Circuit circuit = [&] {
      if (simulate->parsed()) {
        std::ifstream in(file);
        if (!in) throw InputError("cannot open circuit file '" + file + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        name = file;
        return parse_circuit(buffer.str());
      }
      if (ghz->parsed()) {
        name = "ghz";
        return gen_ghz(ghz_n, ghz_dim);
      }
      if (wstate->parsed()) {
        name = "wstate";
        return gen_wstate(parse_dims(w_dims));
      }
      name = "random";
      return gen_random(parse_dims(r_dims), r_ops, r_seed);
    }();

    auto pkg = make_package(circuit, options);
    const auto result = mdd::run(pkg, circuit, options);
    const auto row = make_row(name, circuit, result);
    out << (as_json ? to_json(row) + "\n" : to_table(row));
    return kExitOk;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitSimulation;
  }
}

}  // namespace mdd::cli
