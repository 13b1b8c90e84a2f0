#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdd/gates.hpp"
#include "mdd/package.hpp"
#include "mdd/register.hpp"

namespace mdd {

enum class GateKind { H, X, Z, Givens, Cex, Csum };

[[nodiscard]] std::string_view gate_name(GateKind kind) noexcept;

/// One line of a circuit file. `levels` is used by givens and cex, the
/// angles by givens, `csum_control` by csum.
struct Operation {
  GateKind kind = GateKind::H;
  std::size_t target = 0;
  std::vector<Control> controls;
  std::optional<std::pair<std::size_t, std::size_t>> levels;
  double theta = 0.0;
  double phi = 0.0;
  std::optional<std::size_t> csum_control;

  friend bool operator==(const Operation&, const Operation&) = default;
};

struct Circuit {
  QuditRegister reg;
  std::vector<Operation> ops;
  bool measure_all = false;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Parses the line-oriented circuit format:
///
///   qudits d0 d1 ... d(n-1)
///   gate NAME target=T [ctrl=L@V]* [levels=i,j] [theta=R] [phi=R] [ctrl2=L]
///   measure all
///
/// NAME is one of h, x, z, givens, cex, csum. `#` starts a comment.
/// Throws ParseError with the line and column of the offending token.
[[nodiscard]] Circuit parse_circuit(std::string_view text);

/// Canonical text form; angles use round-trip precision.
[[nodiscard]] std::string to_text(const Circuit& circuit);

/// Elementary controlled gates realizing one operation. Throws InputError if
/// the operation does not fit the register.
[[nodiscard]] std::vector<GateSpec> lower(const QuditRegister& reg, const Operation& op);

/// Throws InputError on the first operation that does not fit the register.
void validate(const Circuit& circuit);

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double tolerance = kDefaultTolerance;
  bool caching = true;
};

struct RunResult {
  Edge final_state;
  DDStats stats;
  /// Gate-DD applications performed.
  std::size_t op_count = 0;
  double runtime_seconds = 0.0;
  std::vector<BasisIndex> samples;
};

/// Package sized for the circuit with the run's tolerance and caching flags.
[[nodiscard]] Package make_package(const Circuit& circuit, const RunOptions& options = {});

/// Starts from |0...0>, applies every operation in order and records stats
/// of the final state. The final state stays referenced in `pkg`.
RunResult run(Package& pkg, const Circuit& circuit, const RunOptions& options = {});

/// GHZ preparation on n qudits of dimension d: H on the top line, then a
/// CSUM ladder down to line 0.
[[nodiscard]] Circuit gen_ghz(std::size_t n, std::size_t d = 3);

/// W-state on levels {0,1} of each qudit: X on the top line, then per step
/// a controlled Givens rotation with theta_k = arccos(1/sqrt(n-k)) and a
/// CEX(0,1) moving the excitation down one line.
[[nodiscard]] Circuit gen_wstate(const std::vector<std::size_t>& dims);

/// Random circuit of op_count gates. Each gate kind is drawn uniformly from
/// {h, givens, cex, csum, controlled x, controlled z}; entangling kinds are
/// redrawn on single-qudit registers.
[[nodiscard]] Circuit gen_random(const std::vector<std::size_t>& dims, std::size_t op_count, std::uint64_t seed);

}  // namespace mdd
