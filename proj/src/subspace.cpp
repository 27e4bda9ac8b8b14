#include "liealg/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace liealg {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument(std::string(op) + ": ambient dimension mismatch");
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim, RrefResult canonical)
    : ambient_dim_(ambient_dim), basis_(std::move(canonical.reduced)), pivots_(std::move(canonical.pivots)) {}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {Matrix(0, ambient_dim), {}}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(ambient_dim, {Matrix::identity(ambient_dim), std::move(pivots)});
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  return Subspace(ambient_dim, rref(Matrix::from_rows(vectors, ambient_dim)));
}

Subspace Subspace::row_space(const Matrix& m) { return Subspace(m.cols(), rref(m)); }

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("Subspace::reduce: length mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = pivots_[i]; c < ambient_dim_; ++c) r[c].sub_product(f, basis_(i, c));
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return liealg::is_zero(reduce(v)); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector coeffs(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) coeffs[i] = v[pivots_[i]];
  return coeffs;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.pivots() != b.pivots()) return a.pivots() < b.pivots();
  return std::lexicographical_compare(a.basis().entries().begin(), a.basis().entries().end(),
                                      b.basis().entries().begin(), b.basis().entries().end());
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  return Subspace::row_space(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersect");
  const std::size_t n = a.ambient_dim();
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  // Solve x·A = y·B, i.e. [A^T | -B^T] (x, y)^T = 0; each solution gives x·A in both.
  Matrix system(n, da + db);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < da; ++i) system(c, i) = a.basis()(i, c);
    for (std::size_t j = 0; j < db; ++j) system(c, da + j) = -b.basis()(j, c);
  }
  const Matrix sol = kernel(system);
  std::vector<Vector> vectors;
  vectors.reserve(sol.rows());
  for (std::size_t s = 0; s < sol.rows(); ++s) {
    Vector v(n);
    for (std::size_t i = 0; i < da; ++i) {
      const Rational& x = sol(s, i);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) v[c].add_product(x, a.basis()(i, c));
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(vectors, n);
}

bool leq(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "leq");
  if (a.dim() > b.dim()) return false;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    if (!b.contains(a.basis().row_vector(r))) return false;
  }
  return true;
}

}  // namespace liealg
