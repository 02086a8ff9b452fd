#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qgor/exact_matrix.hpp"
#include "qgor/field.hpp"
#include "qgor/simplicial_complex.hpp"

namespace qgor {

/// Dimensions of (co)homology groups indexed by degree.
///
/// Degrees outside the stored range read as zero, and equality compares
/// those semantic values, so vectors of complexes of different dimension
/// compare sensibly.
class BettiVector {
 public:
  BettiVector() = default;
  BettiVector(std::vector<std::uint64_t> dims, int lowest_degree)
      : lowest_(lowest_degree), dims_(std::move(dims)) {}

  std::uint64_t operator[](int degree) const noexcept;
  int lowest_degree() const noexcept { return lowest_; }
  /// lowest_degree() - 1 when nothing is stored.
  int highest_degree() const noexcept { return lowest_ + static_cast<int>(dims_.size()) - 1; }
  std::uint64_t total() const noexcept;
  /// Σ_j (-1)^j dim_j.
  long long euler_characteristic() const noexcept;
  std::map<int, std::uint64_t> nonzero() const;
  bool is_zero() const noexcept { return total() == 0; }

  std::string to_string() const;

  friend bool operator==(const BettiVector& a, const BettiVector& b) noexcept;

 private:
  int lowest_ = -1;
  std::vector<std::uint64_t> dims_;
};

/// Boundary map ∂_i from i-chains to (i-1)-chains in canonical face order,
/// ∂[v_0<…<v_i] = Σ_j (-1)^j [v_0<…v̂_j…<v_i]. ∂_0 is the augmentation onto
/// the empty face. Degrees without faces give matrices with zero rows/cols.
ExactMatrix boundary_matrix(const SimplicialComplex& complex, int i, const FieldSpec& field,
                            std::size_t face_cap = kDefaultFaceCap);

/// Reduced homology dimensions for degrees -1..dim. Throws Error(VoidComplex).
BettiVector reduced_betti(const SimplicialComplex& complex, const FieldSpec& field,
                          std::size_t face_cap = kDefaultFaceCap);

/// dim H_j(Δ, Γ; k) from the quotient of augmented chain complexes, i.e. the
/// complex spanned by faces of Δ that are not faces of Γ.
///
/// When Γ contains the empty face (any non-Void Γ) the empty face cancels and
/// the result is ordinary relative homology; in particular Γ = Empty yields
/// the unreduced homology of Δ, so degree 0 is reduced_betti(Δ)[0] + 1.
/// When Γ is Void nothing cancels and the result equals reduced_betti(Δ).
/// Over a field these are also the relative cohomology dimensions.
/// Throws Error(NotASubcomplex).
BettiVector relative_betti(const SimplicialComplex& complex, const SimplicialComplex& sub,
                           const FieldSpec& field, std::size_t face_cap = kDefaultFaceCap);

}  // namespace qgor
