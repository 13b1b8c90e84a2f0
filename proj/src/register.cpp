#include "mdd/register.hpp"

#include <limits>
#include <string>

#include "mdd/errors.hpp"

namespace mdd {

QuditRegister::QuditRegister(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InputError("register needs at least one qudit");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 2) {
      throw InputError("qudit " + std::to_string(i) + " has dimension " + std::to_string(dims_[i]) +
                       "; dimensions must be at least 2");
    }
  }
}

std::size_t QuditRegister::block_dimension(std::size_t bottom, std::size_t top) const {
  if (top >= size() || bottom > top) throw InputError("invalid line range");
  std::size_t product = 1;
  for (std::size_t i = bottom; i <= top; ++i) {
    if (product > std::numeric_limits<std::size_t>::max() / dims_[i]) {
      throw InputError("register dimension overflows a machine word");
    }
    product *= dims_[i];
  }
  return product;
}

std::size_t flat_index(const QuditRegister& reg, std::span<const std::size_t> digits) {
  if (digits.size() != reg.size()) {
    throw InputError("basis index has " + std::to_string(digits.size()) + " digits, register has " +
                     std::to_string(reg.size()) + " qudits");
  }
  std::size_t flat = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= reg.dim(i)) {
      throw InputError("digit " + std::to_string(digits[i]) + " out of range for qudit " + std::to_string(i));
    }
    flat += digits[i] * stride;
    stride *= reg.dim(i);
  }
  return flat;
}

BasisIndex digits_of(const QuditRegister& reg, std::size_t flat) {
  if (flat >= reg.total_dimension()) throw InputError("flat index out of range");
  BasisIndex digits(reg.size());
  for (std::size_t i = 0; i < reg.size(); ++i) {
    digits[i] = flat % reg.dim(i);
    flat /= reg.dim(i);
  }
  return digits;
}

}  // namespace mdd
