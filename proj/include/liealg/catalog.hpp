#ifndef LIEALG_CATALOG_HPP
#define LIEALG_CATALOG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "liealg/lie_algebra.hpp"

namespace liealg::catalog {

/// Where a known value comes from: stated in the source literature, or
/// worked out by hand from the bracket table.
enum class Provenance { Paper, Derived };

std::string_view to_string(Provenance p);

template <typename T>
struct Known {
  T value{};
  Provenance source = Provenance::Derived;
};

struct Expectations {
  Known<bool> solvable;
  Known<bool> nilpotent;
  Known<bool> perfect;
  Known<bool> abelian;
  Known<bool> semisimple;
  Known<std::size_t> perfect_radical_dim;
  Known<std::size_t> near_perfect_radical_dim;
  Known<std::size_t> radical_dim;
  Known<std::size_t> center_dim;
  Known<std::size_t> smallest_upper_bounded_dim;
};

struct Entry {
  std::string name;
  std::string description;
  LieAlgebra algebra;
  Expectations known;
  /// Externally supplied nilradical; not computed by the library.
  std::optional<Subspace> known_nilradical;
};

class UnknownName : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Sorted entry names.
std::vector<std::string> list();

/// Throws UnknownName listing the available names.
Entry get(std::string_view name);

}  // namespace liealg::catalog

#endif  // LIEALG_CATALOG_HPP
