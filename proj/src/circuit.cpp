#include "mdd/circuit.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#include "mdd/dense.hpp"
#include "mdd/errors.hpp"
#include "mdd/operations.hpp"
#include "mdd/rng.hpp"

namespace mdd {

std::string_view gate_name(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::H:
      return "h";
    case GateKind::X:
      return "x";
    case GateKind::Z:
      return "z";
    case GateKind::Givens:
      return "givens";
    case GateKind::Cex:
      return "cex";
    case GateKind::Csum:
      return "csum";
  }
  return "?";
}

std::vector<GateSpec> lower(const QuditRegister& reg, const Operation& op) {
  if (op.target >= reg.size()) {
    throw InputError("target line " + std::to_string(op.target) + " outside register of " +
                     std::to_string(reg.size()) + " qudits");
  }
  const auto d = reg.dim(op.target);
  std::vector<GateSpec> gates;
  switch (op.kind) {
    case GateKind::H:
      gates.push_back(GateSpec{hadamard(d), op.target, op.controls});
      break;
    case GateKind::X:
      gates.push_back(GateSpec{pauli_x(d), op.target, op.controls});
      break;
    case GateKind::Z:
      gates.push_back(GateSpec{pauli_z(d), op.target, op.controls});
      break;
    case GateKind::Givens:
      if (!op.levels) throw InputError("givens needs levels=i,j");
      gates.push_back(GateSpec{givens(d, op.levels->first, op.levels->second, op.theta, op.phi), op.target,
                               op.controls});
      break;
    case GateKind::Cex:
      if (!op.levels) throw InputError("cex needs levels=i,j");
      if (op.controls.size() != 1) throw InputError("cex needs exactly one ctrl=L@V");
      gates.push_back(cex(reg, op.controls[0].line, op.controls[0].level, op.target, op.levels->first,
                          op.levels->second));
      break;
    case GateKind::Csum:
      if (!op.csum_control) throw InputError("csum needs ctrl2=L");
      if (!op.controls.empty()) throw InputError("csum does not take ctrl=L@V");
      return expand(reg, csum(*op.csum_control, op.target));
  }
  for (const auto& g : gates) validate(reg, g);
  return gates;
}

void validate(const Circuit& circuit) {
  for (const auto& op : circuit.ops) (void)lower(circuit.reg, op);
}

std::string to_text(const Circuit& circuit) {
  std::string out = "qudits";
  for (const auto d : circuit.reg.dims()) out += " " + std::to_string(d);
  out += "\n";
  char buf[64];
  for (const auto& op : circuit.ops) {
    out += "gate ";
    out += gate_name(op.kind);
    out += " target=" + std::to_string(op.target);
    for (const auto& c : op.controls) out += " ctrl=" + std::to_string(c.line) + "@" + std::to_string(c.level);
    if (op.levels) out += " levels=" + std::to_string(op.levels->first) + "," + std::to_string(op.levels->second);
    if (op.kind == GateKind::Givens) {
      std::snprintf(buf, sizeof buf, " theta=%.17g phi=%.17g", op.theta, op.phi);
      out += buf;
    }
    if (op.csum_control) out += " ctrl2=" + std::to_string(*op.csum_control);
    out += "\n";
  }
  if (circuit.measure_all) out += "measure all\n";
  return out;
}

Package make_package(const Circuit& circuit, const RunOptions& options) {
  PackageConfig config;
  config.tolerance = options.tolerance;
  config.caching = options.caching;
  return Package(circuit.reg, config);
}

RunResult run(Package& pkg, const Circuit& circuit, const RunOptions& options) {
  if (!(pkg.reg() == circuit.reg)) throw InputError("package register differs from circuit register");

  RunResult result;
  const auto start = std::chrono::steady_clock::now();

  Edge state = zero_state(pkg);
  pkg.inc_ref(state);
  for (const auto& op : circuit.ops) {
    for (const auto& gate : lower(circuit.reg, op)) {
      const Edge gate_dd = make_gate_dd(pkg, gate);
      const Edge next = multiply(pkg, gate_dd, state);
      pkg.inc_ref(next);
      pkg.dec_ref(state);
      state = next;
      ++result.op_count;
      pkg.maybe_collect();
    }
  }
  result.final_state = state;
  result.stats = stats(state);
  result.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  // A measurement directive without an explicit sample count measures once.
  const std::size_t shots = options.samples > 0 ? options.samples : (circuit.measure_all ? 1 : 0);
  if (shots > 0) {
    Rng rng(options.seed);
    result.samples.reserve(shots);
    for (std::size_t i = 0; i < shots; ++i) result.samples.push_back(sample(pkg, state, rng));
  }
  return result;
}

}  // namespace mdd
