#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qgor {

/// Coefficient field: the rationals or a prime field GF(p).
class FieldSpec {
 public:
  /// Defaults to the rationals.
  FieldSpec() = default;

  static FieldSpec rationals() noexcept { return FieldSpec(); }
  /// Throws Error(InvalidField) unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q"/"Q" for the rationals or a decimal prime.
  static FieldSpec parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  /// "Q" or "GF(p)".
  std::string name() const;
  /// "q" or the decimal prime, i.e. the form accepted by parse().
  std::string flag() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  explicit FieldSpec(std::uint64_t p) noexcept : p_(p) {}
  std::uint64_t p_ = 0;
};

}  // namespace qgor
