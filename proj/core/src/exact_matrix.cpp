#include "qgor/exact_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>

#include "qgor/error.hpp"

namespace qgor {

namespace {

__extension__ using Wide = __int128;

using BigInt = boost::multiprecision::cpp_int;

std::int64_t reduce_mod(std::int64_t value, std::uint64_t p) {
  auto m = static_cast<std::int64_t>(p);
  std::int64_t r = value % m;
  return r < 0 ? r + m : r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // a^(p-2) mod p; p < 2^31 keeps every product below 2^62.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

std::size_t rank_mod_p(const ExactMatrix& m) {
  const std::uint64_t p = m.field().characteristic();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = static_cast<std::uint64_t>(m.at(r, c));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols,
                       a.begin() + rank * cols);
    }
    std::uint64_t* prow = a.data() + rank * cols;
    const std::uint64_t inv = inverse_mod(prow[c], p);
    for (std::size_t j = c; j < cols; ++j) prow[j] = prow[j] * inv % p;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t* row = a.data() + r * cols;
      const std::uint64_t factor = row[c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        row[j] = (row[j] + (p - factor) * prow[j]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

// One Bareiss step on integers held in 64 bits. Returns nullopt as soon as an
// intermediate value leaves the safe range, so the caller can restart wide.
std::optional<std::size_t> bareiss_rank_narrow(const ExactMatrix& m) {
  constexpr std::int64_t kLimit = std::int64_t{1} << 62;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::int64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      a[r * cols + c] = m.at(r, c);
      if (a[r * cols + c] >= kLimit || a[r * cols + c] <= -kLimit) return std::nullopt;
    }
  }
  std::int64_t prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols,
                       a.begin() + rank * cols);
    }
    const std::int64_t* prow = a.data() + rank * cols;
    const std::int64_t piv = prow[c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::int64_t* row = a.data() + r * cols;
      const std::int64_t factor = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Wide v = static_cast<Wide>(piv) * row[j] - static_cast<Wide>(factor) * prow[j];
        v /= prev;
        if (v >= kLimit || v <= -kLimit) return std::nullopt;
        row[j] = static_cast<std::int64_t>(v);
      }
      row[c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

std::size_t bareiss_rank_wide(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<BigInt> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c);
  }
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const BigInt piv = a[rank * cols + c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigInt factor = a[r * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[r * cols + j] = (piv * a[r * cols + j] - factor * a[rank * cols + j]) / prev;
      }
      a[r * cols + c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, 0) {}

void ExactMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  if (r >= rows_ || c >= cols_) {
    throw Error(ErrorKind::IndexOutOfRange, "matrix entry (" + std::to_string(r) + ", " +
                                                std::to_string(c) + ") out of range");
  }
  entries_[r * cols_ + c] = field_.is_prime() ? reduce_mod(value, field_.characteristic()) : value;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) {
    throw Error(ErrorKind::InvalidArgument, "incompatible matrix product");
  }
  ExactMatrix out(rows_, rhs.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += BigInt(at(i, k)) * rhs.at(k, j);
      if (field_.is_prime()) acc %= field_.characteristic();
      out.set(i, j, static_cast<std::int64_t>(acc));
    }
  }
  return out;
}

bool ExactMatrix::is_zero() const noexcept {
  for (std::int64_t v : entries_) {
    if (v != 0) return false;
  }
  return true;
}

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_prime()) return rank_mod_p(m);
  if (auto r = bareiss_rank_narrow(m)) return *r;
  return bareiss_rank_wide(m);
}

}  // namespace qgor
