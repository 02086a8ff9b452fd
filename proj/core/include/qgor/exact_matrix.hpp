#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qgor/field.hpp"

namespace qgor {

/// Dense row-major matrix with exact entries.
///
/// Over GF(p) entries are residues in [0, p). Over the rationals entries are
/// integers: a rational matrix has the rank of its denominator-cleared rows,
/// and every matrix this library builds is integral to begin with.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, FieldSpec field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  std::int64_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Stores `value` reduced into the field.
  void set(std::size_t r, std::size_t c, std::int64_t value);

  std::span<const std::int64_t> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  /// Product over the same field; used by the d∘d = 0 checks.
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  bool is_zero() const noexcept;

  bool operator==(const ExactMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  FieldSpec field_;
  std::vector<std::int64_t> entries_;
};

/// Exact rank. GF(p) uses modular elimination; the rationals use
/// fraction-free (Bareiss) elimination that starts in checked 64-bit
/// arithmetic and restarts with arbitrary precision on overflow.
///
/// Pivoting is deterministic: columns are scanned left to right and the
/// topmost remaining row with a nonzero entry becomes the pivot.
std::size_t rank(const ExactMatrix& m);

}  // namespace qgor
