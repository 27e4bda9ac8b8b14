#ifndef LIEALG_LIE_ALGEBRA_HPP
#define LIEALG_LIE_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liealg/errors.hpp"
#include "liealg/matrix.hpp"
#include "liealg/subspace.hpp"

namespace liealg {

/// Sparse structure constants: [e_i, e_j] = sum_k c^k_{ij} e_k, indices 0-based.
/// Only one orientation of each pair is stored; the other is implied by
/// antisymmetry.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim) {}

  /// Defines [e_i, e_j] = image. Throws DuplicateBracket when (i, j) or (j, i)
  /// was already defined, std::out_of_range for a bad index and
  /// std::invalid_argument for a wrongly sized image. Zero images are recorded
  /// too, so `[1,2] = 0` still blocks a later `[2,1]`.
  void set(std::size_t i, std::size_t j, Vector image);

  std::size_t dim() const { return dim_; }
  Rational coeff(std::size_t i, std::size_t j, std::size_t k) const;
  Vector bracket_of_basis(std::size_t i, std::size_t j) const;

  /// Definitions exactly as supplied, keyed by (i, j).
  const std::map<std::pair<std::size_t, std::size_t>, Vector>& definitions() const { return defs_; }

 private:
  std::size_t dim_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Vector> defs_;
};

/// A finite-dimensional Lie algebra over Q given by structure constants.
/// Construction does not check the axioms; see validate().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Empty `labels` means e1..en. Throws std::invalid_argument for a wrong
  /// label count or duplicate labels.
  explicit LieAlgebra(StructureConstants constants, std::vector<std::string> labels = {});

  std::size_t dim() const { return constants_.dim(); }
  const StructureConstants& constants() const { return constants_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_default_labels() const;

  /// [e_i, e_j] from the dense cache.
  const Vector& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

 private:
  StructureConstants constants_;
  std::vector<std::string> labels_;
  std::vector<Vector> table_;
};

/// True when both algebras have the same dimension and bracket table
/// (labels are ignored).
bool same_structure(const LieAlgebra& a, const LieAlgebra& b);

std::vector<std::string> default_labels(std::size_t n);

struct Violation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;  ///< unused for antisymmetry
  Vector residual;    ///< the nonzero [e_i,e_i] or Jacobi sum

  /// Human-readable, 1-based indices.
  std::string describe() const;
};

struct ValidationReport {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
};

/// Checks [e_i,e_i] = 0 and the Jacobi identity on basis triples i<j<k,
/// which suffices by trilinearity. Returns the first failure.
ValidationReport validate(const LieAlgebra& lie);

/// Builds and validates; throws InvalidAlgebra with the violation text.
LieAlgebra make_algebra(StructureConstants constants, std::vector<std::string> labels = {});

/// Bilinear bracket of coordinate vectors. Throws std::invalid_argument on length mismatch.
Vector bracket(const LieAlgebra& lie, const Vector& x, const Vector& y);

/// [A, B] = span of brackets of basis vectors.
Subspace bracket(const LieAlgebra& lie, const Subspace& a, const Subspace& b);

inline Subspace whole(const LieAlgebra& lie) { return Subspace::full(lie.dim()); }

/// D(L) = [L, L].
Subspace derived_algebra(const LieAlgebra& lie);

bool is_ideal(const LieAlgebra& lie, const Subspace& s);
bool is_subalgebra(const LieAlgebra& lie, const Subspace& s);

/// Smallest ideal containing `generators`, by iterating s <- s + [L, s].
Subspace ideal_closure(const LieAlgebra& lie, const std::vector<Vector>& generators);
Subspace ideal_closure(const LieAlgebra& lie, const Subspace& s);

/// ad(x): column j holds [x, e_j].
Matrix adjoint(const LieAlgebra& lie, const Vector& x);

/// Gram matrix of the Killing form on the basis.
struct KillingMatrix {
  Matrix k;
  Rational form(const Vector& x, const Vector& y) const;
};

KillingMatrix killing(const LieAlgebra& lie);

/// {x : K(x, y) = 0 for all y in s}.
Subspace killing_orthogonal(const LieAlgebra& lie, const Subspace& s);
Subspace killing_orthogonal(const KillingMatrix& km, const Subspace& s);

/// The subalgebra s with its own structure constants, expressed in the RREF
/// basis of s. Throws NotClosed when [s, s] is not contained in s.
LieAlgebra restrict_to(const LieAlgebra& lie, const Subspace& s);

/// Maps coordinates of the restricted algebra back into the ambient space.
Subspace embed(const Subspace& inner, const Subspace& host);

/// L/I with the complement basis {e_c : c not a pivot column of I}.
struct Quotient {
  LieAlgebra algebra;
  Matrix projection;                   ///< (n - dim I) x n
  std::vector<std::size_t> complement; ///< ambient columns used as quotient basis
  Subspace ideal;

  Vector project(const Vector& v) const { return projection.apply(v); }
  /// Canonical representative of a quotient vector.
  Vector lift(const Vector& q) const;
  /// Full preimage of a quotient subspace: ideal + lift(h).
  Subspace preimage(const Subspace& h) const;
};

/// Throws NotAnIdeal when i is not an ideal.
Quotient quotient(const LieAlgebra& lie, const Subspace& i);

}  // namespace liealg

#endif  // LIEALG_LIE_ALGEBRA_HPP
