#ifndef LIEALG_TESTS_ALGEBRAS_HPP
#define LIEALG_TESTS_ALGEBRAS_HPP

// Small algebras built directly from bracket tables, independent of the
// catalog module.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "liealg/lie_algebra.hpp"

namespace liealg::testing {

struct Bracket {
  std::size_t i, j;  // 0-based
  std::vector<std::pair<std::size_t, std::int64_t>> image;
};

inline LieAlgebra table(std::size_t n, std::initializer_list<Bracket> brackets, std::vector<std::string> labels = {}) {
  StructureConstants c(n);
  for (const auto& b : brackets) {
    Vector v(n);
    for (auto [k, coeff] : b.image) v[k] += Rational(coeff);
    c.set(b.i, b.j, std::move(v));
  }
  return LieAlgebra(std::move(c), std::move(labels));
}

// x=0, y=1, z=2: [z,x]=x, [z,y]=x+y.
inline LieAlgebra s3_2() { return table(3, {{2, 0, {{0, 1}}}, {2, 1, {{0, 1}, {1, 1}}}}, {"x", "y", "z"}); }

inline LieAlgebra heis3() { return table(3, {{0, 1, {{2, 1}}}}); }

// h=0, e=1, f=2.
inline LieAlgebra sl2() { return table(3, {{0, 1, {{1, 2}}}, {0, 2, {{2, -2}}}, {1, 2, {{0, 1}}}}, {"h", "e", "f"}); }

inline LieAlgebra abelian(std::size_t n) { return LieAlgebra(StructureConstants(n)); }

// h,e,f = 0..2 and x,y,z = 3..5.
inline LieAlgebra sl2_plus_s3_2() {
  return table(6,
               {{0, 1, {{1, 2}}}, {0, 2, {{2, -2}}}, {1, 2, {{0, 1}}}, {5, 3, {{3, 1}}}, {5, 4, {{3, 1}, {4, 1}}}},
               {"h", "e", "f", "x", "y", "z"});
}

inline Vector vec(std::initializer_list<std::int64_t> xs) {
  Vector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

inline Subspace span_of(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> vs;
  for (auto i : idx) vs.push_back(unit_vector(n, i));
  return Subspace::span(vs, n);
}

}  // namespace liealg::testing

#endif  // LIEALG_TESTS_ALGEBRAS_HPP
