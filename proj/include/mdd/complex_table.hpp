#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_map>
#include <vector>

namespace mdd {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-13;

/// Handle to an entry of a ComplexTable. Two handles obtained from the same
/// table compare equal iff they name the same entry, so structural equality
/// of decision diagrams reduces to pointer comparison.
class CanonicalComplex {
 public:
  CanonicalComplex() = default;

  [[nodiscard]] const Complex& value() const noexcept { return *entry_; }
  [[nodiscard]] double real() const noexcept { return entry_->real(); }
  [[nodiscard]] double imag() const noexcept { return entry_->imag(); }
  [[nodiscard]] const Complex* id() const noexcept { return entry_; }

  friend bool operator==(CanonicalComplex a, CanonicalComplex b) noexcept { return a.entry_ == b.entry_; }

 private:
  friend class ComplexTable;
  explicit CanonicalComplex(const Complex* entry) noexcept : entry_(entry) {}

  const Complex* entry_ = nullptr;
};

/// Tolerance-deduplicated store of complex numbers. A lookup returns an
/// existing entry whose real and imaginary parts are both within the
/// tolerance of the query, otherwise it inserts the query. Entries are never
/// evicted. Zero and one are seeded first and resolve to themselves.
class ComplexTable {
 public:
  explicit ComplexTable(double tolerance = kDefaultTolerance);

  ComplexTable(const ComplexTable&) = delete;
  ComplexTable& operator=(const ComplexTable&) = delete;

  /// Throws NumericDomainError for NaN or infinite components.
  CanonicalComplex lookup(const Complex& v);
  CanonicalComplex lookup(double re, double im = 0.0) { return lookup(Complex{re, im}); }

  [[nodiscard]] CanonicalComplex zero() const noexcept { return zero_; }
  [[nodiscard]] CanonicalComplex one() const noexcept { return one_; }

  [[nodiscard]] double tolerance() const noexcept { return tolerance_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

  /// Canonical arithmetic helpers; short-circuit the common 0 and 1 operands.
  CanonicalComplex mul(CanonicalComplex a, CanonicalComplex b);
  CanonicalComplex add(CanonicalComplex a, CanonicalComplex b);
  CanonicalComplex conj(CanonicalComplex a);

 private:
  struct Cell {
    std::int64_t re;
    std::int64_t im;
    friend bool operator==(const Cell&, const Cell&) = default;
  };
  struct CellHash {
    std::size_t operator()(const Cell& c) const noexcept {
      auto h = static_cast<std::uint64_t>(c.re) * 0x9E3779B97F4A7C15ULL;
      h ^= static_cast<std::uint64_t>(c.im) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  [[nodiscard]] std::int64_t cell_of(double x) const noexcept;
  CanonicalComplex insert(const Complex& v);

  double tolerance_;
  std::deque<Complex> entries_;
  std::unordered_map<Cell, std::vector<std::uint32_t>, CellHash> buckets_;
  CanonicalComplex zero_;
  CanonicalComplex one_;
};

}  // namespace mdd

template <>
struct std::hash<mdd::CanonicalComplex> {
  std::size_t operator()(mdd::CanonicalComplex c) const noexcept {
    return std::hash<const void*>{}(c.id());
  }
};
