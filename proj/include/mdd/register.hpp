#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mdd {

/// Ordered qudit dimensions; index 0 is the least significant qudit.
class QuditRegister {
 public:
  /// Throws InputError when empty or when any dimension is below 2.
  explicit QuditRegister(std::vector<std::size_t> dims);

  [[nodiscard]] std::size_t size() const noexcept { return dims_.size(); }
  [[nodiscard]] std::size_t dim(std::size_t line) const { return dims_.at(line); }
  [[nodiscard]] std::span<const std::size_t> dims() const noexcept { return dims_; }

  /// Product of the dimensions on lines [bottom, top]. Throws InputError on overflow.
  [[nodiscard]] std::size_t block_dimension(std::size_t bottom, std::size_t top) const;
  [[nodiscard]] std::size_t total_dimension() const { return block_dimension(0, size() - 1); }

  friend bool operator==(const QuditRegister&, const QuditRegister&) = default;

 private:
  std::vector<std::size_t> dims_;
};

/// Mixed-radix digits, one per qudit line (digits[i] < dims[i]).
using BasisIndex = std::vector<std::size_t>;

/// Flat vector position of a basis index: sum of digit_i times the product of lower dimensions.
[[nodiscard]] std::size_t flat_index(const QuditRegister& reg, std::span<const std::size_t> digits);
[[nodiscard]] BasisIndex digits_of(const QuditRegister& reg, std::size_t flat);

}  // namespace mdd
