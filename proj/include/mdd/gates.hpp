#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "mdd/package.hpp"
#include "mdd/register.hpp"

namespace mdd {

/// Square unitary acting on a single qudit.
class LocalUnitary {
 public:
  /// Throws InputError unless `m` is square, at least 2x2 and unitary within `tolerance`.
  static LocalUnitary from_matrix(Eigen::MatrixXcd m, double tolerance = 1e-10);

  [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  [[nodiscard]] const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  [[nodiscard]] LocalUnitary adjoint() const { return LocalUnitary(m_.adjoint()); }

  friend bool operator==(const LocalUnitary& a, const LocalUnitary& b) { return a.m_ == b.m_; }

 private:
  explicit LocalUnitary(Eigen::MatrixXcd m) : m_(std::move(m)) {}
  Eigen::MatrixXcd m_;
};

/// Cyclic increment X|j> = |j+1 mod d>.
LocalUnitary pauli_x(std::size_t d);
/// X^k, i.e. |j> -> |j+k mod d>.
LocalUnitary shift(std::size_t d, std::size_t k);
/// diag(1, w, ..., w^(d-1)) with w = exp(2*pi*i/d).
LocalUnitary pauli_z(std::size_t d);
/// Discrete Fourier transform H[j,k] = w^(jk)/sqrt(d).
LocalUnitary hadamard(std::size_t d);
/// Two-level rotation on levels i < j:
/// [[cos t, -exp(-i phi) sin t], [exp(i phi) sin t, cos t]], identity elsewhere.
LocalUnitary givens(std::size_t d, std::size_t i, std::size_t j, double theta, double phi);
/// Transposition of levels t1 and t2.
LocalUnitary swap_levels(std::size_t d, std::size_t t1, std::size_t t2);

struct Control {
  std::size_t line;
  std::size_t level;
  friend bool operator==(const Control&, const Control&) = default;
};

/// Local unitary on `target`, applied when every control line is at its level.
struct GateSpec {
  LocalUnitary op;
  std::size_t target;
  std::vector<Control> controls;
};

/// Throws InputError when the gate does not fit the register.
void validate(const QuditRegister& reg, const GateSpec& gate);

/// Same controls, conjugate-transposed local matrix.
GateSpec dagger(const GateSpec& gate);

/// CEX: swap levels t1, t2 of the target when the control is at control_level.
GateSpec cex(const QuditRegister& reg, std::size_t control_line, std::size_t control_level,
             std::size_t target_line, std::size_t t1, std::size_t t2);

/// CSUM |c, j> -> |c, (c + j) mod d_target>. Requires d_control <= d_target.
struct CsumGate {
  std::size_t control;
  std::size_t target;
  friend bool operator==(const CsumGate&, const CsumGate&) = default;
};

CsumGate csum(std::size_t control_line, std::size_t target_line);

/// Elementary controlled shifts realizing a CSUM; the c = 0 term is the identity and is omitted.
std::vector<GateSpec> expand(const QuditRegister& reg, const CsumGate& gate);

/// Full-register operator DD of a controlled local gate. Only the local matrix
/// is held densely; lines without a role carry the cached identity.
Edge make_gate_dd(Package& pkg, const GateSpec& gate);

}  // namespace mdd
