#ifndef LIEALG_ALGEBRA_FILE_HPP
#define LIEALG_ALGEBRA_FILE_HPP

#include <string>
#include <string_view>

#include "liealg/lie_algebra.hpp"

namespace liealg {

/// Parses the line-based algebra format:
///
///     # comment
///     dim 3
///     basis x y z
///     [3,1] = 1*e1
///     [3,2] = 1*e1 + 1*e2
///
/// Indices are 1-based; undeclared brackets are zero and the opposite
/// orientation is implied. Throws ParseError for malformed input (with line
/// number), duplicate brackets and out-of-range indices, and InvalidAlgebra
/// when the constants break antisymmetry or the Jacobi identity.
LieAlgebra parse_algebra(std::string_view text);

/// Writes `lie` in the format accepted by parse_algebra, one line per nonzero
/// bracket [i,j] with i < j. `title` becomes a leading comment when nonempty.
std::string render_algebra(const LieAlgebra& lie, std::string_view title = {});

}  // namespace liealg

#endif  // LIEALG_ALGEBRA_FILE_HPP
