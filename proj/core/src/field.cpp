#include "qgor/field.hpp"

#include <charconv>

#include "qgor/error.hpp"

namespace qgor {

namespace {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_number(p)) {
    throw Error(ErrorKind::InvalidField, std::to_string(p) + " is not a supported prime");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidField,
                "expected 'q' or a prime, got '" + std::string(text) + "'");
  }
  return prime(p);
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

std::string FieldSpec::flag() const { return is_rational() ? "q" : std::to_string(p_); }

}  // namespace qgor
