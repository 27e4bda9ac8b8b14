#ifndef LIEALG_ORACLE_HPP
#define LIEALG_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liealg/series.hpp"

namespace liealg::oracle {

/// Ideal closure of one or two pseudo-random small-integer vectors.
/// Deterministic in (lie, seed).
Subspace random_ideal(const LieAlgebra& lie, std::uint64_t seed);

/// The same series as series.hpp, recomputed from scratch: brackets run over
/// every pair of spanning vectors, redundant ones included, and equality of
/// consecutive terms is decided by an independent elimination routine rather
/// than by comparing canonical forms. Upper extensions are solved through the
/// annihilator of the ideal instead of residues modulo it.
SeriesReport naive_series(const LieAlgebra& lie, SeriesKind kind);

/// Subspace equality decided by rank counting with the oracle's own
/// elimination: rank(A) == rank(B) == rank(A + B).
bool naive_equal(const Subspace& a, const Subspace& b);

enum class Status { Holds, Vacuous, Violated };

std::string_view to_string(Status s);

/// Data sufficient to replay a failed check.
struct Witness {
  std::string note;
  std::vector<std::pair<std::string, Subspace>> subspaces;
};

struct TheoremEntry {
  std::string id;       ///< e.g. "P2.1", "T4.3"
  std::string summary;  ///< one-line statement of what was checked
  Status status = Status::Vacuous;
  std::size_t instances = 0;  ///< non-trivial instances where the hypothesis held
  std::string detail;
  std::optional<Witness> witness;
};

struct TheoremReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t ideals_examined = 0;  ///< distinct ideals in the sampled pool
  std::vector<TheoremEntry> entries;

  bool any_violated() const;
  /// Throws std::out_of_range for an unknown id.
  const TheoremEntry& at(std::string_view id) const;
};

/// Checks each proposition on `samples` random ideals plus the ideals of the
/// three characteristic series, the radical, the center and L^perp.
/// Violations are returned as data. Requires a validated algebra.
TheoremReport verify_theorems(const LieAlgebra& lie, std::size_t samples, std::uint64_t seed);

/// New algebra on the basis given by the rows of `basis` (must be invertible).
LieAlgebra change_basis(const LieAlgebra& lie, const Matrix& basis);

/// A Jacobi-valid algebra of dimension 1..max_dim with small integer
/// constants, from sparse rejection sampling or from perturbing a catalog
/// entry, optionally followed by an integer change of basis.
LieAlgebra random_algebra(std::uint64_t seed, std::size_t max_dim = 4);

/// `count` random algebras derived from `seed`.
std::vector<LieAlgebra> random_corpus(std::size_t count, std::uint64_t seed, std::size_t max_dim = 4);

}  // namespace liealg::oracle

#endif  // LIEALG_ORACLE_HPP
