#ifndef LIEALG_SERIES_HPP
#define LIEALG_SERIES_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "liealg/lie_algebra.hpp"

namespace liealg {

enum class SeriesKind { Derived, LowerCentral, UpperCentral };

std::string_view to_string(SeriesKind kind);

/// A characteristic series up to the point where it stabilizes.
///
/// `terms` holds terms 0..m where m is the stabilization index, the first
/// index with terms[m] == terms[m + 1]. The repeated term is not stored.
struct SeriesReport {
  SeriesKind kind = SeriesKind::Derived;
  std::vector<Subspace> terms;
  std::size_t stabilization_index = 0;

  const Subspace& last() const { return terms.back(); }
};

/// L^(0) = L, L^(k+1) = [L^(k), L^(k)].
SeriesReport derived_series(const LieAlgebra& lie);
/// L^0 = L, L^(k+1) = [L, L^k].
SeriesReport lower_central_series(const LieAlgebra& lie);
/// U_0 = 0, U_(k+1) = U(U_k).
SeriesReport upper_central_series(const LieAlgebra& lie);

/// U(I) = {x : [x, L] in I}. Throws NotAnIdeal.
Subspace upper_extension(const LieAlgebra& lie, const Subspace& ideal);

Subspace center(const LieAlgebra& lie);

/// Largest perfect ideal: the bottom of the derived series.
Subspace perfect_radical(const LieAlgebra& lie);
/// Largest near perfect ideal: the bottom of the lower central series.
Subspace near_perfect_radical(const LieAlgebra& lie);
/// Largest solvable ideal, computed as the Killing-orthogonal complement of D(L).
Subspace radical(const LieAlgebra& lie);
/// Top of the upper central series.
Subspace smallest_upper_bounded_ideal(const LieAlgebra& lie);

// For the zero algebra the first four predicates are true and is_semisimple
// is false.
bool is_solvable(const LieAlgebra& lie);
bool is_nilpotent(const LieAlgebra& lie);
bool is_perfect(const LieAlgebra& lie);
bool is_abelian(const LieAlgebra& lie);
/// radical(L) == 0 for n > 0. Throws std::logic_error if this disagrees with
/// nondegeneracy of the Killing form.
bool is_semisimple(const LieAlgebra& lie);

/// [I, I] == I. Throws NotAnIdeal.
bool is_perfect_ideal(const LieAlgebra& lie, const Subspace& ideal);
/// [L, I] == I. Throws NotAnIdeal.
bool is_near_perfect_ideal(const LieAlgebra& lie, const Subspace& ideal);
/// U(I) == I. Throws NotAnIdeal.
bool is_upper_bounded_ideal(const LieAlgebra& lie, const Subspace& ideal);

struct Flags {
  bool solvable = false;
  bool nilpotent = false;
  bool perfect = false;
  bool abelian = false;
  bool semisimple = false;

  friend bool operator==(const Flags&, const Flags&) = default;
};

struct ProfileReport {
  SeriesReport derived;
  SeriesReport lower_central;
  SeriesReport upper_central;
  Subspace perfect_radical;
  Subspace near_perfect_radical;
  Subspace radical;
  Subspace center;
  Subspace smallest_upper_bounded;
  Flags flags;
};

ProfileReport profile(const LieAlgebra& lie);

}  // namespace liealg

#endif  // LIEALG_SERIES_HPP
