#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "liealg/catalog.hpp"
#include "liealg/lie_algebra.hpp"
#include "liealg/oracle.hpp"
#include "support/algebras.hpp"
#include "support/generators.hpp"

using namespace liealg;
using namespace liealg::testing;

namespace {

// Jacobi sum on basis triples straight from the constants:
// sum_m c^m_ij c^l_mk + c^m_jk c^l_mi + c^m_ki c^l_mj.
Vector jacobi_by_constants(const StructureConstants& c, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = c.dim();
  Vector out(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      out[l].add_product(c.coeff(i, j, m), c.coeff(m, k, l));
      out[l].add_product(c.coeff(j, k, m), c.coeff(m, i, l));
      out[l].add_product(c.coeff(k, i, m), c.coeff(m, j, l));
    }
  return out;
}

// ad(e_i) read off the constants: entry (k, j) = c^k_ij.
Matrix ad_by_constants(const StructureConstants& c, std::size_t i) {
  const std::size_t n = c.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = c.coeff(i, j, k);
  return m;
}

// Killing matrix by the literal formula tr(ad(e_i) * ad(e_j)).
Matrix killing_by_products(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      k(i, j) = trace(mat_mul(ad_by_constants(lie.constants(), i), ad_by_constants(lie.constants(), j)));
  return k;
}

// Leibniz expansion over all permutations.
Rational det_leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Rational term(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t r = 0; r < n; ++r) term *= m(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<LieAlgebra> catalog_algebras() {
  std::vector<LieAlgebra> out;
  for (const auto& name : catalog::list()) out.push_back(catalog::get(name).algebra);
  return out;
}

}  // namespace

TEST_CASE("StructureConstants completes antisymmetry and rejects double definitions") {
  StructureConstants c(3);
  c.set(0, 1, vec({0, 0, 1}));
  CHECK(c.coeff(1, 0, 2) == Rational(-1));
  CHECK(c.coeff(0, 2, 1).is_zero());
  CHECK_THROWS_AS(c.set(1, 0, vec({0, 0, -1})), DuplicateBracket);
  CHECK_THROWS_AS(c.set(0, 1, vec({0, 0, 1})), DuplicateBracket);
  CHECK_THROWS_AS(c.set(0, 3, vec({0, 0, 1})), std::out_of_range);
  CHECK_THROWS_AS(c.set(0, 2, vec({0, 1})), std::invalid_argument);
}

TEST_CASE("LieAlgebra labels") {
  CHECK(heis3().labels() == std::vector<std::string>{"e1", "e2", "e3"});
  CHECK_THROWS_AS(LieAlgebra(StructureConstants(2), {"a"}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra(StructureConstants(2), {"a", "a"}), std::invalid_argument);
}

TEST_CASE("validate") {
  CHECK(validate(s3_2()).ok());
  CHECK(validate(abelian(4)).ok());

  const LieAlgebra bad = table(3, {{0, 1, {{0, 1}}}, {1, 2, {{1, 1}}}, {2, 0, {{2, 1}}}});
  // Oracle: the Jacobi sum expanded from the constants is -e1 - e2 - e3.
  CHECK(jacobi_by_constants(bad.constants(), 0, 1, 2) == vec({-1, -1, -1}));
  const auto report = validate(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violation->kind == Violation::Kind::Jacobi);
  CHECK(report.violation->i == 0);
  CHECK(report.violation->j == 1);
  CHECK(report.violation->k == 2);
  CHECK(report.violation->residual == vec({-1, -1, -1}));
  CHECK(report.violation->describe().find("(1,2,3)") != std::string::npos);
  CHECK_THROWS_AS(make_algebra(bad.constants()), InvalidAlgebra);

  StructureConstants self(2);
  self.set(0, 0, vec({0, 1}));
  const auto anti = validate(LieAlgebra(self));
  REQUIRE_FALSE(anti.ok());
  CHECK(anti.violation->kind == Violation::Kind::Antisymmetry);
}

TEST_CASE("bracket of vectors") {
  const LieAlgebra l = s3_2();
  const Vector x = vec({1, 0, 0}), y = vec({0, 1, 0}), z = vec({0, 0, 1});
  CHECK(bracket(l, z, y) == vec({1, 1, 0}));
  CHECK(is_zero(bracket(l, x, x)));
  CHECK(bracket(l, x + z, y) == vec({1, 1, 0}));
  CHECK_THROWS_AS(bracket(l, vec({1, 0}), y), std::invalid_argument);
}

TEST_CASE("bracket of subspaces") {
  CHECK(bracket(s3_2(), whole(s3_2()), whole(s3_2())) == span_of(3, {0, 1}));
  CHECK(bracket(s3_2(), span_of(3, {2}), Subspace::zero(3)).is_zero());
  CHECK(derived_algebra(heis3()) == span_of(3, {2}));
}

TEST_CASE("is_ideal") {
  CHECK(is_ideal(s3_2(), span_of(3, {0, 1})));
  CHECK_FALSE(is_ideal(s3_2(), span_of(3, {2})));
  CHECK(is_ideal(s3_2(), Subspace::zero(3)));
  CHECK_FALSE(is_ideal(s3_2(), span_of(3, {1})));
}

TEST_CASE("ideal_closure") {
  CHECK(ideal_closure(s3_2(), {vec({1, 0, 0})}) == span_of(3, {0}));
  CHECK(ideal_closure(s3_2(), {vec({0, 1, 0})}) == span_of(3, {0, 1}));
  CHECK(ideal_closure(s3_2(), std::vector<Vector>{}).is_zero());
  CHECK(ideal_closure(sl2(), {vec({0, 1, 0})}).is_full());
}

TEST_CASE("adjoint") {
  // Columns of ad(z): x -> x, y -> x + y, z -> 0.
  CHECK(adjoint(s3_2(), vec({0, 0, 1})) == Matrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 0}});
  CHECK(adjoint(s3_2(), Vector(3)) == Matrix(3, 3));
  CHECK(adjoint(abelian(3), vec({1, 2, 3})) == Matrix(3, 3));
  CHECK(adjoint(sl2(), vec({0, 1, 0})) == ad_by_constants(sl2().constants(), 1));
}

TEST_CASE("Killing matrix") {
  CHECK(killing(heis3()).k == Matrix(3, 3));

  const Matrix s32 = killing(s3_2()).k;
  CHECK(s32 == killing_by_products(s3_2()));
  CHECK(s32 == Matrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 2}});

  const Matrix ks = killing(sl2()).k;
  CHECK(ks == killing_by_products(sl2()));
  CHECK(ks == Matrix{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}});
  CHECK(det_leibniz(ks) == Rational(-128));
}

TEST_CASE("Killing-orthogonal complement") {
  CHECK(killing_orthogonal(sl2(), whole(sl2())).is_zero());
  CHECK(killing_orthogonal(heis3(), whole(heis3())).is_full());
  CHECK(killing_orthogonal(s3_2(), span_of(3, {0, 1})).is_full());
  CHECK(killing_orthogonal(s3_2(), whole(s3_2())) == span_of(3, {0, 1}));
  CHECK_THROWS_AS(killing_orthogonal(s3_2(), Subspace::zero(2)), std::invalid_argument);
}

TEST_CASE("restrict_to") {
  const LieAlgebra full = restrict_to(s3_2(), whole(s3_2()));
  CHECK(same_structure(full, s3_2()));

  const LieAlgebra plane = restrict_to(s3_2(), span_of(3, {0, 1}));
  CHECK(plane.dim() == 2);
  CHECK(same_structure(plane, abelian(2)));

  const LieAlgebra block = restrict_to(sl2_plus_s3_2(), span_of(6, {0, 1, 2}));
  CHECK(same_structure(block, sl2()));

  CHECK_THROWS_AS(restrict_to(sl2(), span_of(3, {1, 2})), NotClosed);
}

TEST_CASE("quotient") {
  const Quotient same = quotient(s3_2(), Subspace::zero(3));
  CHECK(same_structure(same.algebra, s3_2()));
  CHECK(same.algebra.labels() == s3_2().labels());

  const Quotient line = quotient(s3_2(), span_of(3, {0, 1}));
  CHECK(line.algebra.dim() == 1);
  CHECK(line.algebra.labels() == std::vector<std::string>{"z"});
  CHECK(validate(line.algebra).ok());

  const Quotient h = quotient(heis3(), span_of(3, {2}));
  CHECK(same_structure(h.algebra, abelian(2)));

  CHECK_THROWS_AS(quotient(s3_2(), span_of(3, {2})), NotAnIdeal);

  // A non-coordinate ideal: complement basis is taken at non-pivot columns.
  const Quotient x_only = quotient(s3_2(), span_of(3, {0}));
  CHECK(x_only.complement == std::vector<std::size_t>{1, 2});
  CHECK(x_only.project(vec({1, 0, 0})) == Vector(2));
  CHECK(x_only.preimage(Subspace::zero(2)) == span_of(3, {0}));
}

TEST_CASE("property: bracket axioms and Killing invariance on random vectors") {
  Gen g(5);
  for (const auto& lie : catalog_algebras()) {
    const std::size_t n = lie.dim();
    const KillingMatrix km = killing(lie);
    CHECK(km.k == km.k.transpose());
    CHECK(km.k == killing_by_products(lie));
    for (int trial = 0; trial < 40; ++trial) {
      const Vector x = g.vector(n), y = g.vector(n), z = g.vector(n);
      const Rational a = g.rational();
      CHECK(bracket(lie, x, y) == Rational(-1) * bracket(lie, y, x));
      CHECK(bracket(lie, a * x + z, y) == a * bracket(lie, x, y) + bracket(lie, z, y));
      const Vector jac = bracket(lie, bracket(lie, x, y), z) + bracket(lie, bracket(lie, y, z), x) +
                         bracket(lie, bracket(lie, z, x), y);
      CHECK(is_zero(jac));
      CHECK(km.form(bracket(lie, x, y), z) == km.form(x, bracket(lie, y, z)));
      CHECK(km.form(x, y) == km.form(y, x));
      CHECK(km.form(x, y) == trace(mat_mul(adjoint(lie, x), adjoint(lie, y))));
    }
  }
}

TEST_CASE("property: quotient projection is a homomorphism") {
  Gen g(8);
  for (const auto& lie : catalog_algebras()) {
    for (std::uint64_t s = 0; s < 6; ++s) {
      const Subspace ideal = oracle::random_ideal(lie, s);
      const Quotient q = quotient(lie, ideal);
      CHECK(validate(q.algebra).ok());
      CHECK(q.algebra.dim() + ideal.dim() == lie.dim());
      for (std::size_t r = 0; r < ideal.dim(); ++r) CHECK(is_zero(q.project(ideal.basis().row_vector(r))));
      for (int trial = 0; trial < 10; ++trial) {
        const Vector x = g.vector(lie.dim()), y = g.vector(lie.dim());
        CHECK(q.project(bracket(lie, x, y)) == bracket(q.algebra, q.project(x), q.project(y)));
        const Vector qx = q.project(x);
        CHECK(q.project(q.lift(qx)) == qx);
      }
    }
  }
}

TEST_CASE("property: ideal closure is an ideal and minimal; orthogonal complements of ideals are ideals") {
  Gen g(13);
  for (const auto& lie : catalog_algebras()) {
    const std::size_t n = lie.dim();
    std::vector<Subspace> ideals;
    for (std::uint64_t s = 0; s < 12; ++s) ideals.push_back(oracle::random_ideal(lie, 100 + s));

    for (int trial = 0; trial < 8; ++trial) {
      const std::vector<Vector> gens{g.sparse_vector(n)};
      const Subspace c = ideal_closure(lie, gens);
      CHECK(is_ideal(lie, c));
      CHECK(c.contains(gens[0]));
      // Dropping any one basis direction loses ideal-ness or a generator.
      for (std::size_t drop = 0; drop < c.dim(); ++drop) {
        std::vector<Vector> rest;
        for (std::size_t r = 0; r < c.dim(); ++r)
          if (r != drop) rest.push_back(c.basis().row_vector(r));
        const Subspace smaller = Subspace::span(rest, n);
        CHECK_FALSE((is_ideal(lie, smaller) && smaller.contains(gens[0])));
      }
      for (const auto& j : ideals)
        if (j.contains(gens[0])) CHECK(leq(c, j));
    }
    const KillingMatrix km = killing(lie);
    for (const auto& i : ideals) CHECK(is_ideal(lie, killing_orthogonal(km, i)));
  }
}
