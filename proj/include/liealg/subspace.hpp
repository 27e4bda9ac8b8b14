#ifndef LIEALG_SUBSPACE_HPP
#define LIEALG_SUBSPACE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "liealg/matrix.hpp"

namespace liealg {

/// A linear subspace of Q^n held by its canonical RREF basis. Two subspaces
/// are equal exactly when their basis matrices are identical, so equality
/// is a syntactic check.
class Subspace {
 public:
  /// The zero subspace of Q^0.
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Throws std::invalid_argument if a vector has the wrong length.
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  bool is_full() const { return basis_.rows() == ambient_dim_; }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  bool contains(const Vector& v) const;
  /// Coefficients of v in the RREF basis, or nullopt when v is not in the span.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// v minus its components along the basis pivots: zero at every pivot column,
  /// and zero overall iff v lies in the subspace.
  Vector reduce(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  /// Arbitrary but fixed total order, for deduplicating collections.
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  Subspace(std::size_t ambient_dim, RrefResult canonical);

  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Throws std::invalid_argument on ambient mismatch (all three).
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool leq(const Subspace& a, const Subspace& b);

}  // namespace liealg

#endif  // LIEALG_SUBSPACE_HPP
