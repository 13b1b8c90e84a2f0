#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "mdd/circuit.hpp"
#include "mdd/errors.hpp"
#include "mdd/rng.hpp"

namespace mdd {

Circuit gen_ghz(std::size_t n, std::size_t d) {
  if (n < 2) throw InputError("GHZ needs at least 2 qudits, got " + std::to_string(n));
  Circuit circuit{QuditRegister(std::vector<std::size_t>(n, d)), {}, false};
  Operation h;
  h.kind = GateKind::H;
  h.target = n - 1;
  circuit.ops.push_back(h);
  for (std::size_t line = n - 1; line > 0; --line) {
    Operation sum;
    sum.kind = GateKind::Csum;
    sum.target = line - 1;
    sum.csum_control = line;
    circuit.ops.push_back(sum);
  }
  return circuit;
}

Circuit gen_wstate(const std::vector<std::size_t>& dims) {
  Circuit circuit{QuditRegister(dims), {}, false};
  const auto n = dims.size();

  // Excitation starts on the top line and is handed down one line per step.
  Operation excite;
  excite.kind = GateKind::X;
  excite.target = n - 1;
  circuit.ops.push_back(excite);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto from = n - 1 - k;
    const auto to = from - 1;
    Operation rot;
    rot.kind = GateKind::Givens;
    rot.target = to;
    rot.controls = {Control{from, 1}};
    rot.levels = std::pair<std::size_t, std::size_t>{0, 1};
    rot.theta = std::acos(1.0 / std::sqrt(static_cast<double>(n - k)));
    circuit.ops.push_back(rot);

    Operation move;
    move.kind = GateKind::Cex;
    move.target = from;
    move.controls = {Control{to, 1}};
    move.levels = std::pair<std::size_t, std::size_t>{0, 1};
    circuit.ops.push_back(move);
  }
  return circuit;
}

namespace {

std::pair<std::size_t, std::size_t> distinct_pair(Rng& rng, std::size_t count) {
  const auto a = static_cast<std::size_t>(rng.below(count));
  auto b = static_cast<std::size_t>(rng.below(count - 1));
  if (b >= a) ++b;
  return {a, b};
}

}  // namespace

Circuit gen_random(const std::vector<std::size_t>& dims, std::size_t op_count, std::uint64_t seed) {
  if (op_count < 1) throw InputError("random circuit needs at least one operation");
  Circuit circuit{QuditRegister(dims), {}, false};
  const auto& reg = circuit.reg;
  const auto n = reg.size();
  Rng rng(seed);

  enum Draw : std::uint64_t { kH, kGivens, kCex, kCsum, kCx, kCz, kKinds };
  while (circuit.ops.size() < op_count) {
    const auto draw = rng.below(kKinds);
    if (draw != kH && draw != kGivens && n < 2) continue;

    Operation op;
    switch (draw) {
      case kH:
        op.kind = GateKind::H;
        op.target = static_cast<std::size_t>(rng.below(n));
        break;
      case kGivens: {
        op.kind = GateKind::Givens;
        op.target = static_cast<std::size_t>(rng.below(n));
        auto [i, j] = distinct_pair(rng, reg.dim(op.target));
        if (i > j) std::swap(i, j);
        op.levels = std::pair{i, j};
        op.theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        op.phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
        break;
      }
      case kCex: {
        op.kind = GateKind::Cex;
        const auto [target, control] = distinct_pair(rng, n);
        op.target = target;
        op.controls = {Control{control, static_cast<std::size_t>(rng.below(reg.dim(control)))}};
        auto [i, j] = distinct_pair(rng, reg.dim(target));
        if (i > j) std::swap(i, j);
        op.levels = std::pair{i, j};
        break;
      }
      case kCsum: {
        op.kind = GateKind::Csum;
        auto [control, target] = distinct_pair(rng, n);
        if (reg.dim(control) > reg.dim(target)) std::swap(control, target);
        op.target = target;
        op.csum_control = control;
        break;
      }
      case kCx:
      case kCz: {
        op.kind = draw == kCx ? GateKind::X : GateKind::Z;
        const auto [target, control] = distinct_pair(rng, n);
        op.target = target;
        op.controls = {Control{control, static_cast<std::size_t>(rng.below(reg.dim(control)))}};
        break;
      }
      default:
        break;
    }
    circuit.ops.push_back(std::move(op));
  }
  return circuit;
}

}  // namespace mdd
