#include "liealg/lie_algebra.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace liealg {

void StructureConstants::set(std::size_t i, std::size_t j, Vector image) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("basis index out of range");
  if (image.size() != dim_) throw std::invalid_argument("bracket image has wrong length");
  if (defs_.count({i, j}) != 0 || defs_.count({j, i}) != 0) throw DuplicateBracket(i, j);
  defs_.emplace(std::make_pair(i, j), std::move(image));
}

Rational StructureConstants::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  if (auto it = defs_.find({i, j}); it != defs_.end()) return it->second[k];
  if (auto it = defs_.find({j, i}); it != defs_.end()) return -it->second[k];
  return Rational{};
}

Vector StructureConstants::bracket_of_basis(std::size_t i, std::size_t j) const {
  if (auto it = defs_.find({i, j}); it != defs_.end()) return it->second;
  if (auto it = defs_.find({j, i}); it != defs_.end()) return Rational(-1) * it->second;
  return Vector(dim_);
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return labels;
}

LieAlgebra::LieAlgebra(StructureConstants constants, std::vector<std::string> labels)
    : constants_(std::move(constants)), labels_(std::move(labels)) {
  const std::size_t n = constants_.dim();
  if (labels_.empty()) labels_ = default_labels(n);
  if (labels_.size() != n) throw std::invalid_argument("label count does not match dimension");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
    throw std::invalid_argument("basis labels must be unique");
  table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table_.push_back(constants_.bracket_of_basis(i, j));
}

bool LieAlgebra::has_default_labels() const { return labels_ == default_labels(dim()); }

bool same_structure(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.basis_bracket(i, j) != b.basis_bracket(i, j)) return false;
  return true;
}

std::string Violation::describe() const {
  std::ostringstream os;
  if (kind == Kind::Antisymmetry) {
    os << "antisymmetry violated: [e" << i + 1 << ",e" << j + 1 << "] must be 0";
  } else {
    os << "Jacobi identity violated at triple (" << i + 1 << "," << j + 1 << "," << k + 1 << "): sum =";
    for (std::size_t c = 0; c < residual.size(); ++c)
      if (!residual[c].is_zero()) os << " " << residual[c] << "*e" << c + 1;
  }
  return os.str();
}

ValidationReport validate(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector& self = lie.basis_bracket(i, i);
    if (!is_zero(self)) return {Violation{Violation::Kind::Antisymmetry, i, i, 0, self}};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i);
        const Vector ej = unit_vector(n, j);
        const Vector ek = unit_vector(n, k);
        Vector sum = bracket(lie, lie.basis_bracket(i, j), ek);
        sum = sum + bracket(lie, lie.basis_bracket(j, k), ei);
        sum = sum + bracket(lie, lie.basis_bracket(k, i), ej);
        if (!is_zero(sum)) return {Violation{Violation::Kind::Jacobi, i, j, k, sum}};
      }
  return {};
}

LieAlgebra make_algebra(StructureConstants constants, std::vector<std::string> labels) {
  LieAlgebra lie(std::move(constants), std::move(labels));
  if (auto report = validate(lie); !report.ok()) throw InvalidAlgebra(report.violation->describe());
  return lie;
}

Vector bracket(const LieAlgebra& lie, const Vector& x, const Vector& y) {
  const std::size_t n = lie.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: vector length mismatch");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Vector& bij = lie.basis_bracket(i, j);
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k].add_product(w, bij[k]);
    }
  }
  return out;
}

Subspace bracket(const LieAlgebra& lie, const Subspace& a, const Subspace& b) {
  const std::size_t n = lie.dim();
  if (a.ambient_dim() != n || b.ambient_dim() != n) throw std::invalid_argument("bracket: ambient mismatch");
  std::vector<Vector> images;
  images.reserve(a.dim() * b.dim());
  const auto av = a.basis_vectors();
  const auto bv = b.basis_vectors();
  for (const auto& x : av)
    for (const auto& y : bv) {
      Vector z = bracket(lie, x, y);
      if (!is_zero(z)) images.push_back(std::move(z));
    }
  return Subspace::span(images, n);
}

Subspace derived_algebra(const LieAlgebra& lie) { return bracket(lie, whole(lie), whole(lie)); }

bool is_ideal(const LieAlgebra& lie, const Subspace& s) {
  const std::size_t n = lie.dim();
  if (s.ambient_dim() != n) throw std::invalid_argument("is_ideal: ambient mismatch");
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vector v = s.basis().row_vector(r);
    for (std::size_t i = 0; i < n; ++i)
      if (!s.contains(bracket(lie, unit_vector(n, i), v))) return false;
  }
  return true;
}

bool is_subalgebra(const LieAlgebra& lie, const Subspace& s) { return leq(bracket(lie, s, s), s); }

Subspace ideal_closure(const LieAlgebra& lie, const Subspace& s) {
  Subspace current = s;
  const Subspace all = whole(lie);
  for (;;) {
    Subspace next = sum(current, bracket(lie, all, current));
    if (next == current) return current;
    current = std::move(next);
  }
}

Subspace ideal_closure(const LieAlgebra& lie, const std::vector<Vector>& generators) {
  return ideal_closure(lie, Subspace::span(generators, lie.dim()));
}

Matrix adjoint(const LieAlgebra& lie, const Vector& x) {
  const std::size_t n = lie.dim();
  if (x.size() != n) throw std::invalid_argument("adjoint: vector length mismatch");
  Matrix ad(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = bracket(lie, x, unit_vector(n, j));
    for (std::size_t r = 0; r < n; ++r) ad(r, j) = col[r];
  }
  return ad;
}

Rational KillingMatrix::form(const Vector& x, const Vector& y) const { return dot(x, k.apply(y)); }

KillingMatrix killing(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(adjoint(lie, unit_vector(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = trace_of_product(ads[i], ads[j]);
      k(j, i) = k(i, j);
    }
  return {std::move(k)};
}

Subspace killing_orthogonal(const KillingMatrix& km, const Subspace& s) {
  const std::size_t n = km.k.rows();
  if (s.ambient_dim() != n) throw std::invalid_argument("killing_orthogonal: ambient mismatch");
  // Row r is the functional v -> K(v, b_r) = (K b_r) . v.
  Matrix constraints(s.dim(), n);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vector kb = km.k.apply(s.basis().row_vector(r));
    for (std::size_t c = 0; c < n; ++c) constraints(r, c) = kb[c];
  }
  return Subspace::row_space(kernel(constraints));
}

Subspace killing_orthogonal(const LieAlgebra& lie, const Subspace& s) { return killing_orthogonal(killing(lie), s); }

LieAlgebra restrict_to(const LieAlgebra& lie, const Subspace& s) {
  if (s.ambient_dim() != lie.dim()) throw std::invalid_argument("restrict_to: ambient mismatch");
  const std::size_t d = s.dim();
  const auto basis = s.basis_vectors();
  StructureConstants constants(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto coords = s.coordinates(bracket(lie, basis[i], basis[j]));
      if (!coords) throw NotClosed("restrict_to: subspace is not closed under the bracket");
      if (!is_zero(*coords)) constants.set(i, j, std::move(*coords));
    }
  return LieAlgebra(std::move(constants));
}

Subspace embed(const Subspace& inner, const Subspace& host) {
  if (inner.ambient_dim() != host.dim()) throw std::invalid_argument("embed: dimension mismatch");
  std::vector<Vector> vectors;
  for (std::size_t r = 0; r < inner.dim(); ++r) {
    Vector v(host.ambient_dim());
    for (std::size_t i = 0; i < host.dim(); ++i) {
      const Rational& c = inner.basis()(r, i);
      if (c.is_zero()) continue;
      for (std::size_t col = 0; col < host.ambient_dim(); ++col) v[col].add_product(c, host.basis()(i, col));
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(vectors, host.ambient_dim());
}

Vector Quotient::lift(const Vector& q) const {
  if (q.size() != complement.size()) throw std::invalid_argument("Quotient::lift: length mismatch");
  Vector v(projection.cols());
  for (std::size_t a = 0; a < complement.size(); ++a) v[complement[a]] = q[a];
  return v;
}

Subspace Quotient::preimage(const Subspace& h) const {
  if (h.ambient_dim() != complement.size()) throw std::invalid_argument("Quotient::preimage: ambient mismatch");
  std::vector<Vector> vectors = ideal.basis_vectors();
  for (std::size_t r = 0; r < h.dim(); ++r) vectors.push_back(lift(h.basis().row_vector(r)));
  return Subspace::span(vectors, projection.cols());
}

Quotient quotient(const LieAlgebra& lie, const Subspace& i) {
  const std::size_t n = lie.dim();
  if (i.ambient_dim() != n) throw std::invalid_argument("quotient: ambient mismatch");
  if (!is_ideal(lie, i)) throw NotAnIdeal("quotient: subspace is not an ideal");

  std::vector<bool> is_pivot(n, false);
  for (auto p : i.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) complement.push_back(c);
  const std::size_t q = complement.size();

  // v - (components along the ideal) vanishes on pivot columns; what is left
  // sits on the complement columns.
  Matrix projection(q, n);
  for (std::size_t c = 0; c < n; ++c) {
    const Vector r = i.reduce(unit_vector(n, c));
    for (std::size_t a = 0; a < q; ++a) projection(a, c) = r[complement[a]];
  }

  StructureConstants constants(q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      Vector image = projection.apply(lie.basis_bracket(complement[a], complement[b]));
      if (!is_zero(image)) constants.set(a, b, std::move(image));
    }
  std::vector<std::string> labels;
  for (auto c : complement) labels.push_back(lie.labels()[c]);
  return Quotient{LieAlgebra(std::move(constants), std::move(labels)), std::move(projection), std::move(complement), i};
}

}  // namespace liealg
