#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mdd/circuit.hpp"

namespace mdd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSimulation = 2;

/// One executed instance, as printed by `simulate` and `bench`.
struct BenchRow {
  std::string benchmark;
  std::vector<std::size_t> dims;
  std::size_t operations = 0;
  std::size_t nodes = 0;
  std::size_t distinct_complex = 0;
  double runtime_seconds = 0.0;
  std::vector<BasisIndex> samples;
};

BenchRow make_row(std::string benchmark, const Circuit& circuit, const RunResult& result);

/// JSON object with exactly the keys benchmark, qudits, dims, operations,
/// nodes, distinct_complex, runtime_seconds, samples.
std::string to_json(const BenchRow& row);
std::string to_table(const BenchRow& row);

/// Entry point; argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace mdd::cli
