#include "mdd/complex_table.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mdd/errors.hpp"

namespace mdd {

ComplexTable::ComplexTable(double tolerance) : tolerance_(tolerance) {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw InputError("complex table tolerance must be positive and finite, got " + std::to_string(tolerance));
  }
  zero_ = insert(Complex{0.0, 0.0});
  one_ = insert(Complex{1.0, 0.0});
}

std::int64_t ComplexTable::cell_of(double x) const noexcept {
  // Values too large for an exact cell index share the saturated end cells.
  const double scaled = std::floor(x / tolerance_);
  constexpr double kLimit = 4.0e18;
  if (scaled >= kLimit) return static_cast<std::int64_t>(kLimit);
  if (scaled <= -kLimit) return -static_cast<std::int64_t>(kLimit);
  return static_cast<std::int64_t>(scaled);
}

CanonicalComplex ComplexTable::lookup(const Complex& v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw NumericDomainError("non-finite complex value cannot be canonicalized");
  }
  const auto re = cell_of(v.real());
  const auto im = cell_of(v.imag());

  // Lowest insertion index wins when several entries are within tolerance.
  auto best = std::numeric_limits<std::uint32_t>::max();
  for (std::int64_t dr = -1; dr <= 1; ++dr) {
    for (std::int64_t di = -1; di <= 1; ++di) {
      const auto it = buckets_.find(Cell{re + dr, im + di});
      if (it == buckets_.end()) continue;
      for (const auto idx : it->second) {
        const auto& e = entries_[idx];
        if (idx < best && std::abs(e.real() - v.real()) <= tolerance_ &&
            std::abs(e.imag() - v.imag()) <= tolerance_) {
          best = idx;
        }
      }
    }
  }
  if (best != std::numeric_limits<std::uint32_t>::max()) {
    return CanonicalComplex{&entries_[best]};
  }
  return insert(v);
}

CanonicalComplex ComplexTable::insert(const Complex& v) {
  const auto idx = static_cast<std::uint32_t>(entries_.size());
  entries_.push_back(v);
  buckets_[Cell{cell_of(v.real()), cell_of(v.imag())}].push_back(idx);
  return CanonicalComplex{&entries_.back()};
}

CanonicalComplex ComplexTable::mul(CanonicalComplex a, CanonicalComplex b) {
  if (a == zero_ || b == zero_) return zero_;
  if (a == one_) return b;
  if (b == one_) return a;
  return lookup(a.value() * b.value());
}

CanonicalComplex ComplexTable::add(CanonicalComplex a, CanonicalComplex b) {
  if (a == zero_) return b;
  if (b == zero_) return a;
  return lookup(a.value() + b.value());
}

CanonicalComplex ComplexTable::conj(CanonicalComplex a) {
  if (a.imag() == 0.0) return a;
  return lookup(std::conj(a.value()));
}

}  // namespace mdd
