#include "mdd/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mdd/errors.hpp"

namespace mdd {

namespace {

void require_dim(std::size_t d) {
  if (d < 2) throw InputError("qudit dimension must be at least 2, got " + std::to_string(d));
}

Complex root_of_unity(std::size_t d, std::size_t power) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(power % d) / static_cast<double>(d);
  return std::polar(1.0, angle);
}

}  // namespace

LocalUnitary LocalUnitary::from_matrix(Eigen::MatrixXcd m, double tolerance) {
  if (m.rows() != m.cols()) throw InputError("local operation must be square");
  if (m.rows() < 2) throw InputError("local operation must act on at least two levels");
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  if ((gram - id).cwiseAbs().maxCoeff() > tolerance) throw InputError("local operation is not unitary");
  return LocalUnitary(std::move(m));
}

LocalUnitary shift(std::size_t d, std::size_t k) {
  require_dim(d);
  const auto n = static_cast<Eigen::Index>(d);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t j = 0; j < d; ++j) {
    m(static_cast<Eigen::Index>((j + k) % d), static_cast<Eigen::Index>(j)) = 1.0;
  }
  return LocalUnitary::from_matrix(std::move(m));
}

LocalUnitary pauli_x(std::size_t d) { return shift(d, 1); }

LocalUnitary pauli_z(std::size_t d) {
  require_dim(d);
  const auto n = static_cast<Eigen::Index>(d);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t j = 0; j < d; ++j) m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = root_of_unity(d, j);
  return LocalUnitary::from_matrix(std::move(m));
}

LocalUnitary hadamard(std::size_t d) {
  require_dim(d);
  const auto n = static_cast<Eigen::Index>(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Eigen::MatrixXcd m(n, n);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = scale * root_of_unity(d, j * k);
    }
  }
  return LocalUnitary::from_matrix(std::move(m));
}

LocalUnitary givens(std::size_t d, std::size_t i, std::size_t j, double theta, double phi) {
  require_dim(d);
  if (i >= j || j >= d) {
    throw InputError("givens needs levels i < j < d, got i=" + std::to_string(i) + " j=" + std::to_string(j) +
                     " d=" + std::to_string(d));
  }
  if (!std::isfinite(theta) || !std::isfinite(phi)) throw NumericDomainError("givens angles must be finite");
  const auto n = static_cast<Eigen::Index>(d);
  const auto a = static_cast<Eigen::Index>(i);
  const auto b = static_cast<Eigen::Index>(j);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  m(a, a) = std::cos(theta);
  m(a, b) = -std::polar(1.0, -phi) * std::sin(theta);
  m(b, a) = std::polar(1.0, phi) * std::sin(theta);
  m(b, b) = std::cos(theta);
  return LocalUnitary::from_matrix(std::move(m));
}

LocalUnitary swap_levels(std::size_t d, std::size_t t1, std::size_t t2) {
  require_dim(d);
  if (t1 == t2 || t1 >= d || t2 >= d) {
    throw InputError("swap needs two distinct levels below " + std::to_string(d));
  }
  const auto n = static_cast<Eigen::Index>(d);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  const auto a = static_cast<Eigen::Index>(t1);
  const auto b = static_cast<Eigen::Index>(t2);
  m(a, a) = 0.0;
  m(b, b) = 0.0;
  m(a, b) = 1.0;
  m(b, a) = 1.0;
  return LocalUnitary::from_matrix(std::move(m));
}

void validate(const QuditRegister& reg, const GateSpec& gate) {
  if (gate.target >= reg.size()) {
    throw InputError("target line " + std::to_string(gate.target) + " outside register of " +
                     std::to_string(reg.size()) + " qudits");
  }
  if (gate.op.dim() != reg.dim(gate.target)) {
    throw InputError("local operation has dimension " + std::to_string(gate.op.dim()) + " but line " +
                     std::to_string(gate.target) + " has dimension " + std::to_string(reg.dim(gate.target)));
  }
  std::vector<bool> used(reg.size(), false);
  used[gate.target] = true;
  for (const auto& c : gate.controls) {
    if (c.line >= reg.size()) throw InputError("control line " + std::to_string(c.line) + " outside register");
    if (c.line == gate.target) throw InputError("control on target line " + std::to_string(c.line));
    if (used[c.line]) throw InputError("duplicate control on line " + std::to_string(c.line));
    if (c.level >= reg.dim(c.line)) {
      throw InputError("control level " + std::to_string(c.level) + " out of range for line " +
                       std::to_string(c.line));
    }
    used[c.line] = true;
  }
}

GateSpec dagger(const GateSpec& gate) { return GateSpec{gate.op.adjoint(), gate.target, gate.controls}; }

GateSpec cex(const QuditRegister& reg, std::size_t control_line, std::size_t control_level,
             std::size_t target_line, std::size_t t1, std::size_t t2) {
  if (target_line >= reg.size()) throw InputError("cex target line outside register");
  GateSpec gate{swap_levels(reg.dim(target_line), t1, t2), target_line, {Control{control_line, control_level}}};
  validate(reg, gate);
  return gate;
}

CsumGate csum(std::size_t control_line, std::size_t target_line) { return CsumGate{control_line, target_line}; }

std::vector<GateSpec> expand(const QuditRegister& reg, const CsumGate& gate) {
  if (gate.control >= reg.size() || gate.target >= reg.size()) throw InputError("csum line outside register");
  if (gate.control == gate.target) throw InputError("csum control and target coincide");
  const auto dc = reg.dim(gate.control);
  const auto dt = reg.dim(gate.target);
  if (dc > dt) {
    throw InputError("csum control dimension " + std::to_string(dc) + " exceeds target dimension " +
                     std::to_string(dt));
  }
  std::vector<GateSpec> gates;
  for (std::size_t c = 1; c < dc; ++c) {
    gates.push_back(GateSpec{shift(dt, c), gate.target, {Control{gate.control, c}}});
  }
  return gates;
}

Edge make_gate_dd(Package& pkg, const GateSpec& gate) {
  const auto& reg = pkg.reg();
  validate(reg, gate);

  std::vector<std::optional<std::size_t>> control_at(reg.size());
  for (const auto& c : gate.controls) control_at[c.line] = c.level;

  // blocks[r*dt + c] is the operator on lines below the target contributed by
  // local entry (r, c): U[r,c] * P + [r == c] * (I - P), P the projector onto
  // the satisfied below-target controls.
  const auto dt = gate.op.dim();
  std::vector<Edge> blocks(dt * dt);
  for (std::size_t r = 0; r < dt; ++r) {
    for (std::size_t c = 0; c < dt; ++c) blocks[r * dt + c] = pkg.scalar(gate.op(r, c));
  }

  for (std::size_t line = 0; line < gate.target; ++line) {
    const auto d = reg.dim(line);
    const auto level = static_cast<int>(line);
    const Edge id_below = pkg.identity(level - 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const bool diagonal_block = b / dt == b % dt;
      std::vector<Edge> children(d * d, pkg.zero());
      if (const auto ctrl = control_at[line]) {
        for (std::size_t j = 0; j < d; ++j) {
          if (j == *ctrl) {
            children[j * d + j] = blocks[b];
          } else if (diagonal_block) {
            children[j * d + j] = id_below;
          }
        }
      } else {
        for (std::size_t j = 0; j < d; ++j) children[j * d + j] = blocks[b];
      }
      blocks[b] = pkg.make_node(level, NodeKind::Matrix, std::move(children));
    }
  }

  Edge e = pkg.make_node(static_cast<int>(gate.target), NodeKind::Matrix, std::move(blocks));

  for (std::size_t line = gate.target + 1; line < reg.size(); ++line) {
    const auto d = reg.dim(line);
    const auto level = static_cast<int>(line);
    std::vector<Edge> children(d * d, pkg.zero());
    const auto ctrl = control_at[line];
    const Edge id_below = ctrl ? pkg.identity(level - 1) : pkg.zero();
    for (std::size_t j = 0; j < d; ++j) children[j * d + j] = (!ctrl || j == *ctrl) ? e : id_below;
    e = pkg.make_node(level, NodeKind::Matrix, std::move(children));
  }
  return e;
}

}  // namespace mdd
