#include "liealg/series.hpp"

#include <functional>
#include <stdexcept>

namespace liealg {

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Derived:
      return "derived";
    case SeriesKind::LowerCentral:
      return "lower_central";
    case SeriesKind::UpperCentral:
      return "upper_central";
  }
  return "unknown";
}

namespace {

// Dimensions are strictly monotone until the first repeat, so at most n + 1
// steps are needed.
SeriesReport iterate(SeriesKind kind, Subspace start, const std::function<Subspace(const Subspace&)>& step) {
  SeriesReport report{kind, {std::move(start)}, 0};
  for (;;) {
    Subspace next = step(report.terms.back());
    if (next == report.terms.back()) break;
    report.terms.push_back(std::move(next));
  }
  report.stabilization_index = report.terms.size() - 1;
  return report;
}

void require_ideal(const LieAlgebra& lie, const Subspace& s, const char* op) {
  if (!is_ideal(lie, s)) throw NotAnIdeal(std::string(op) + ": subspace is not an ideal");
}

// U(I) without the ideal check; callers have established it.
Subspace upper_extension_unchecked(const LieAlgebra& lie, const Subspace& ideal) {
  const std::size_t n = lie.dim();
  // Column c holds, for every j, the residue of [e_c, e_j] modulo I.
  Matrix map(n * n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector residue = ideal.reduce(lie.basis_bracket(c, j));
      for (std::size_t k = 0; k < n; ++k) map(j * n + k, c) = residue[k];
    }
  return Subspace::row_space(kernel(map));
}

}  // namespace

SeriesReport derived_series(const LieAlgebra& lie) {
  return iterate(SeriesKind::Derived, whole(lie), [&](const Subspace& t) { return bracket(lie, t, t); });
}

SeriesReport lower_central_series(const LieAlgebra& lie) {
  const Subspace all = whole(lie);
  return iterate(SeriesKind::LowerCentral, all, [&](const Subspace& t) { return bracket(lie, all, t); });
}

SeriesReport upper_central_series(const LieAlgebra& lie) {
  return iterate(SeriesKind::UpperCentral, Subspace::zero(lie.dim()),
                 [&](const Subspace& t) { return upper_extension_unchecked(lie, t); });
}

Subspace upper_extension(const LieAlgebra& lie, const Subspace& ideal) {
  require_ideal(lie, ideal, "upper_extension");
  return upper_extension_unchecked(lie, ideal);
}

Subspace center(const LieAlgebra& lie) { return upper_extension_unchecked(lie, Subspace::zero(lie.dim())); }

Subspace perfect_radical(const LieAlgebra& lie) { return derived_series(lie).last(); }

Subspace near_perfect_radical(const LieAlgebra& lie) { return lower_central_series(lie).last(); }

Subspace radical(const LieAlgebra& lie) { return killing_orthogonal(lie, derived_algebra(lie)); }

Subspace smallest_upper_bounded_ideal(const LieAlgebra& lie) { return upper_central_series(lie).last(); }

bool is_solvable(const LieAlgebra& lie) { return perfect_radical(lie).is_zero(); }

bool is_nilpotent(const LieAlgebra& lie) { return near_perfect_radical(lie).is_zero(); }

bool is_perfect(const LieAlgebra& lie) { return derived_algebra(lie).is_full(); }

bool is_abelian(const LieAlgebra& lie) { return derived_algebra(lie).is_zero(); }

bool is_semisimple(const LieAlgebra& lie) {
  if (lie.dim() == 0) return false;
  const KillingMatrix km = killing(lie);
  const bool by_radical = killing_orthogonal(km, derived_algebra(lie)).is_zero();
  const bool nondegenerate = rank(km.k) == lie.dim();
  if (by_radical != nondegenerate)
    throw std::logic_error("is_semisimple: radical criterion disagrees with Killing nondegeneracy");
  return by_radical;
}

bool is_perfect_ideal(const LieAlgebra& lie, const Subspace& ideal) {
  require_ideal(lie, ideal, "is_perfect_ideal");
  return bracket(lie, ideal, ideal) == ideal;
}

bool is_near_perfect_ideal(const LieAlgebra& lie, const Subspace& ideal) {
  require_ideal(lie, ideal, "is_near_perfect_ideal");
  return bracket(lie, whole(lie), ideal) == ideal;
}

bool is_upper_bounded_ideal(const LieAlgebra& lie, const Subspace& ideal) {
  require_ideal(lie, ideal, "is_upper_bounded_ideal");
  return upper_extension_unchecked(lie, ideal) == ideal;
}

ProfileReport profile(const LieAlgebra& lie) {
  ProfileReport p;
  p.derived = derived_series(lie);
  p.lower_central = lower_central_series(lie);
  p.upper_central = upper_central_series(lie);
  p.perfect_radical = p.derived.last();
  p.near_perfect_radical = p.lower_central.last();
  p.radical = radical(lie);
  p.center = p.upper_central.terms.size() > 1 ? p.upper_central.terms[1] : p.upper_central.terms[0];
  p.smallest_upper_bounded = p.upper_central.last();

  const Subspace& derived_algebra = p.derived.terms.size() > 1 ? p.derived.terms[1] : p.derived.terms[0];
  p.flags.solvable = p.perfect_radical.is_zero();
  p.flags.nilpotent = p.near_perfect_radical.is_zero();
  p.flags.perfect = derived_algebra.is_full();
  p.flags.abelian = derived_algebra.is_zero();
  p.flags.semisimple = is_semisimple(lie);
  return p;
}

}  // namespace liealg
