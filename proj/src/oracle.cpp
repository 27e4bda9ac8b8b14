#include "liealg/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "liealg/catalog.hpp"

namespace liealg::oracle {

namespace {

// ---------------------------------------------------------------------------
// Independent elimination. Deliberately does not call rref()/kernel(): plain
// forward elimination without normalization, then back substitution.

std::vector<Vector> echelon(std::vector<Vector> rows, std::size_t n, std::vector<std::size_t>& pivots) {
  pivots.clear();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < n && lead < rows.size(); ++col) {
    std::size_t p = lead;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[lead]);
    for (std::size_t r = lead + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col] / rows[lead][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c].sub_product(f, rows[lead][c]);
    }
    pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

std::size_t naive_rank(const std::vector<Vector>& vectors, std::size_t n) {
  std::vector<std::size_t> pivots;
  return echelon(vectors, n, pivots).size();
}

// {x : r . x = 0 for every row r}.
std::vector<Vector> naive_nullspace(const std::vector<Vector>& rows, std::size_t n) {
  std::vector<std::size_t> pivots;
  const auto ech = echelon(rows, n, pivots);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n);
    x[f] = 1;
    for (std::size_t r = ech.size(); r-- > 0;) {
      Rational acc;
      for (std::size_t c = pivots[r] + 1; c < n; ++c) acc.add_product(ech[r][c], x[c]);
      x[pivots[r]] = -acc / ech[r][pivots[r]];
    }
    out.push_back(std::move(x));
  }
  return out;
}

// Greedy independent subset, preserving order.
std::vector<Vector> prune(const std::vector<Vector>& candidates, std::size_t n) {
  std::vector<Vector> kept;
  std::size_t r = 0;
  for (const auto& v : candidates) {
    kept.push_back(v);
    const std::size_t nr = naive_rank(kept, n);
    if (nr == r) {
      kept.pop_back();
    } else {
      r = nr;
    }
  }
  return kept;
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t n) {
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = naive_rank(a, n);
  return ra == naive_rank(b, n) && ra == naive_rank(both, n);
}

std::vector<Vector> all_pair_brackets(const LieAlgebra& lie, const std::vector<Vector>& left,
                                      const std::vector<Vector>& right) {
  std::vector<Vector> out;
  for (const auto& x : left)
    for (const auto& y : right) out.push_back(bracket(lie, x, y));
  return out;
}

std::vector<Vector> naive_upper_extension(const LieAlgebra& lie, const std::vector<Vector>& ideal_gens) {
  const std::size_t n = lie.dim();
  const auto annihilator = naive_nullspace(ideal_gens, n);
  // x in U(I) iff w . [x, e_j] = 0 for every annihilating w and every j.
  std::vector<Vector> constraints;
  for (const auto& w : annihilator)
    for (std::size_t j = 0; j < n; ++j) {
      Vector row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = dot(w, lie.basis_bracket(c, j));
      constraints.push_back(std::move(row));
    }
  return naive_nullspace(constraints, n);
}

// ---------------------------------------------------------------------------
// Randomness.

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) { return splitmix64(seed ^ splitmix64(stream)); }

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Vector random_small_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  // Sparse support so that closures are not almost always the whole algebra.
  for (auto& x : v)
    if (uniform(rng, 0, 1) == 1) x = uniform(rng, -2, 2);
  return v;
}

// ---------------------------------------------------------------------------
// Theorem checks.

Subspace restricted_term(const LieAlgebra& lie, const Subspace& s, bool nilpotent) {
  const LieAlgebra sub = restrict_to(lie, s);
  return nilpotent ? near_perfect_radical(sub) : perfect_radical(sub);
}

bool restricted_is_solvable(const LieAlgebra& lie, const Subspace& s) { return restricted_term(lie, s, false).is_zero(); }
bool restricted_is_nilpotent(const LieAlgebra& lie, const Subspace& s) { return restricted_term(lie, s, true).is_zero(); }

class Recorder {
 public:
  Recorder(std::string id, std::string summary) { entry_.id = std::move(id), entry_.summary = std::move(summary); }

  void instance() { ++entry_.instances; }

  /// Records a failed check; only the first witness is kept.
  void fail(std::string note, std::vector<std::pair<std::string, Subspace>> subspaces) {
    entry_.status = Status::Violated;
    if (!entry_.witness) entry_.witness = Witness{std::move(note), std::move(subspaces)};
  }

  void detail(std::string d) { entry_.detail = std::move(d); }

  /// Without a violation, holds when at least one instance was examined.
  TheoremEntry finish(bool always_applicable = false) {
    if (entry_.status != Status::Violated)
      entry_.status = (entry_.instances > 0 || always_applicable) ? Status::Holds : Status::Vacuous;
    return std::move(entry_);
  }

 private:
  TheoremEntry entry_;
};

std::string dims(std::initializer_list<std::pair<const char*, std::size_t>> items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, d] : items) {
    os << (first ? "" : ", ") << "dim " << name << "=" << d;
    first = false;
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

Subspace random_ideal(const LieAlgebra& lie, std::uint64_t seed) {
  std::mt19937_64 rng(derive(seed, 0x1dea1));
  const std::size_t n = lie.dim();
  std::vector<Vector> gens;
  const int count = uniform(rng, 1, 2);
  for (int g = 0; g < count; ++g) gens.push_back(random_small_vector(rng, n));
  return ideal_closure(lie, gens);
}

SeriesReport naive_series(const LieAlgebra& lie, SeriesKind kind) {
  const std::size_t n = lie.dim();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));

  std::vector<Vector> current = kind == SeriesKind::UpperCentral ? std::vector<Vector>{} : basis;
  std::vector<std::vector<Vector>> spans{current};
  // Bounded by strict monotonicity of dimension; n + 2 rounds is a safety net.
  for (std::size_t round = 0; round <= n + 1; ++round) {
    std::vector<Vector> next;
    switch (kind) {
      case SeriesKind::Derived:
        next = prune(all_pair_brackets(lie, current, current), n);
        break;
      case SeriesKind::LowerCentral:
        next = prune(all_pair_brackets(lie, basis, current), n);
        break;
      case SeriesKind::UpperCentral:
        next = naive_upper_extension(lie, current);
        break;
    }
    if (same_span(current, next, n)) break;
    spans.push_back(next);
    current = std::move(next);
  }

  SeriesReport report;
  report.kind = kind;
  for (const auto& s : spans) report.terms.push_back(Subspace::span(s, n));
  report.stabilization_index = report.terms.size() - 1;
  return report;
}

bool naive_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  return same_span(a.basis_vectors(), b.basis_vectors(), a.ambient_dim());
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "holds";
    case Status::Vacuous:
      return "vacuous";
    case Status::Violated:
      return "violated";
  }
  return "unknown";
}

bool TheoremReport::any_violated() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.status == Status::Violated; });
}

const TheoremEntry& TheoremReport::at(std::string_view id) const {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw std::out_of_range("no theorem entry '" + std::string(id) + "'");
}

TheoremReport verify_theorems(const LieAlgebra& lie, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = lie.dim();
  const Subspace all = whole(lie);
  const Subspace zero = Subspace::zero(n);
  const ProfileReport prof = profile(lie);
  const KillingMatrix km = killing(lie);
  const Subspace& P = prof.perfect_radical;
  const Subspace& NP = prof.near_perfect_radical;
  const Subspace& R = prof.radical;
  const Subspace& U = prof.smallest_upper_bounded;
  const Subspace lperp = killing_orthogonal(km, all);

  std::set<Subspace> unique{zero, all, R, lperp, prof.center};
  for (const auto* series : {&prof.derived, &prof.lower_central, &prof.upper_central})
    unique.insert(series->terms.begin(), series->terms.end());
  for (std::size_t s = 0; s < samples; ++s) unique.insert(random_ideal(lie, derive(seed, s)));
  const std::vector<Subspace> pool(unique.begin(), unique.end());

  std::vector<Subspace> perfect_ideals, near_perfect_ideals, upper_bounded_ideals, solvable_ideals;
  for (const auto& i : pool) {
    if (is_perfect_ideal(lie, i)) perfect_ideals.push_back(i);
    if (is_near_perfect_ideal(lie, i)) near_perfect_ideals.push_back(i);
    if (is_upper_bounded_ideal(lie, i)) upper_bounded_ideals.push_back(i);
    if (restricted_is_solvable(lie, i)) solvable_ideals.push_back(i);
  }

  TheoremReport report;
  report.samples = samples;
  report.seed = seed;
  report.ideals_examined = pool.size();

  // Closure of a family under sums (or intersections).
  auto closure_check = [&](Recorder& rec, const std::vector<Subspace>& family, bool use_sum,
                           bool (*member)(const LieAlgebra&, const Subspace&), const char* what) {
    for (std::size_t a = 0; a < family.size(); ++a)
      for (std::size_t b = a + 1; b < family.size(); ++b) {
        const Subspace c = use_sum ? sum(family[a], family[b]) : intersect(family[a], family[b]);
        // Pairs involving the identity element (0 for sums, L for intersections) are trivial.
        const bool trivial = use_sum ? (family[a].is_zero() || family[b].is_zero())
                                     : (family[a].is_full() || family[b].is_full());
        if (!trivial) rec.instance();
        if (!is_ideal(lie, c) || !member(lie, c))
          rec.fail(std::string(use_sum ? "sum" : "intersection") + " is not " + what,
                   {{"I", family[a]}, {"J", family[b]}, {use_sum ? "I+J" : "I∩J", c}});
      }
  };

  auto maximality_check = [&](Recorder& rec, const Subspace& top, const std::vector<Subspace>& family,
                              bool (*member)(const LieAlgebra&, const Subspace&), const char* what) {
    if (!member(lie, top)) rec.fail(std::string("radical is not ") + what, {{"radical", top}});
    for (const auto& i : family) {
      if (!i.is_zero()) rec.instance();
      if (!leq(i, top)) rec.fail(std::string(what) + " not contained in the radical", {{"I", i}, {"radical", top}});
    }
  };

  {
    Recorder rec("P2.1", "sum of two perfect ideals is a perfect ideal");
    closure_check(rec, perfect_ideals, true, is_perfect_ideal, "a perfect ideal");
    rec.detail(std::to_string(perfect_ideals.size()) + " perfect ideals sampled");
    report.entries.push_back(rec.finish());
  }
  {
    Recorder rec("P2.2", "nonzero L is solvable iff P(L) = 0");
    if (n > 0) {
      rec.instance();
      // Independent route: solvable iff the radical is all of L.
      const bool solvable = R.is_full();
      if (solvable != P.is_zero())
        rec.fail(solvable ? "solvable but P(L) != 0" : "not solvable but P(L) = 0", {{"P(L)", P}, {"R(L)", R}});
      rec.detail(std::string("solvable=") + (solvable ? "true" : "false") + ", " + dims({{"P", P.dim()}}));
    }
    report.entries.push_back(rec.finish());
  }
  {
    Recorder rec("P2.3", "P(L) is the largest perfect ideal");
    maximality_check(rec, P, perfect_ideals, is_perfect_ideal, "a perfect ideal");
    report.entries.push_back(rec.finish(true));
  }
  {
    Recorder rec("P2.4", "I perfect ideal and L/I perfect imply L perfect");
    const bool l_perfect = is_perfect(lie);
    for (const auto& i : perfect_ideals) {
      const Quotient q = quotient(lie, i);
      if (!is_perfect(q.algebra)) continue;
      if (!i.is_zero()) rec.instance();
      if (!l_perfect) rec.fail("L/I perfect with I perfect, but L is not perfect", {{"I", i}});
    }
    report.entries.push_back(rec.finish());
  }
  {
    Recorder rec("P2.5", "L/P(L) is solvable");
    rec.instance();
    const Quotient q = quotient(lie, P);
    if (!is_solvable(q.algebra)) rec.fail("quotient by P(L) is not solvable", {{"P(L)", P}});
    rec.detail(dims({{"L/P", q.algebra.dim()}}));
    report.entries.push_back(rec.finish());
  }
  {
    Recorder rec("P3.1", "sum of two near perfect ideals is near perfect");
    closure_check(rec, near_perfect_ideals, true, is_near_perfect_ideal, "a near perfect ideal");
    rec.detail(std::to_string(near_perfect_ideals.size()) + " near perfect ideals sampled");
    report.entries.push_back(rec.finish());
  }
  {
    Recorder rec("P3.2", "nonzero L is nilpotent iff NP(L) = 0");
    if (n > 0) {
      rec.instance();
      // Independent route: nilpotent iff the upper central series reaches L.
      const bool nilpotent = U.is_full();
      if (nilpotent != NP.is_zero())
        rec.fail(nilpotent ? "nilpotent but NP(L) != 0" : "not nilpotent but NP(L) = 0",
                 {{"NP(L)", NP}, {"U_m(0)", U}});
      rec.detail(std::string("nilpotent=") + (nilpotent ? "true" : "false") + ", " + dims({{"NP", NP.dim()}}));
    }
    report.entries.push_back(rec.finish());
  }
  {
    Recorder rec("P3.3", "NP(L) is the largest near perfect ideal and contains P(L)");
    maximality_check(rec, NP, near_perfect_ideals, is_near_perfect_ideal, "a near perfect ideal");
    if (!leq(P, NP)) rec.fail("P(L) not contained in NP(L)", {{"P(L)", P}, {"NP(L)", NP}});
    report.entries.push_back(rec.finish(true));
  }
  {
    Recorder rec("P3.4", "I near perfect, J/I near perfect in L/I imply J near perfect");
    const std::size_t quotient_samples = std::min<std::size_t>(samples, 8);
    for (std::size_t a = 0; a < near_perfect_ideals.size(); ++a) {
      const Subspace& i = near_perfect_ideals[a];
      const Quotient q = quotient(lie, i);
      const std::size_t qn = q.algebra.dim();
      std::set<Subspace> qpool{Subspace::zero(qn), Subspace::full(qn), near_perfect_radical(q.algebra)};
      const auto qlower = lower_central_series(q.algebra);
      qpool.insert(qlower.terms.begin(), qlower.terms.end());
      for (std::size_t s = 0; s < quotient_samples; ++s)
        qpool.insert(random_ideal(q.algebra, derive(derive(seed, 0x3400 + a), s)));
      for (const auto& h : qpool) {
        if (!is_near_perfect_ideal(q.algebra, h)) continue;
        const Subspace j = q.preimage(h);
        if (!i.is_zero() && !h.is_zero()) rec.instance();
        if (!is_ideal(lie, j) || !is_near_perfect_ideal(lie, j))
          rec.fail("preimage of a near perfect ideal of L/I is not near perfect", {{"I", i}, {"J", j}});
      }
    }
    report.entries.push_back(rec.finish());
  }
  {
    Recorder rec("P3.5", "L/NP(L) is nilpotent");
    rec.instance();
    const Quotient q = quotient(lie, NP);
    if (!is_nilpotent(q.algebra)) rec.fail("quotient by NP(L) is not nilpotent", {{"NP(L)", NP}});
    rec.detail(dims({{"L/NP", q.algebra.dim()}}));
    report.entries.push_back(rec.finish());
  }
  {
    Recorder rec("P4.1", "intersection of two upper bounded ideals is upper bounded");
    closure_check(rec, upper_bounded_ideals, false, is_upper_bounded_ideal, "an upper bounded ideal");
    rec.detail(std::to_string(upper_bounded_ideals.size()) + " upper bounded ideals sampled");
    report.entries.push_back(rec.finish());
  }
  {
    Recorder rec("P4.2", "U_m(0) is the smallest upper bounded ideal");
    if (!is_upper_bounded_ideal(lie, U)) rec.fail("U_m(0) is not upper bounded", {{"U_m(0)", U}});
    for (const auto& i : upper_bounded_ideals) {
      rec.instance();
      if (!leq(U, i)) rec.fail("U_m(0) not contained in an upper bounded ideal", {{"U_m(0)", U}, {"I", i}});
    }
    rec.detail(dims({{"U_m(0)", U.dim()}}));
    report.entries.push_back(rec.finish());
  }
  {
    Recorder rec("T4.3", "a nonzero nilpotent algebra has L as its only upper bounded ideal");
    if (n > 0 && prof.flags.nilpotent) {
      rec.instance();
      if (!U.is_full()) rec.fail("smallest upper bounded ideal is not L", {{"U_m(0)", U}});
      for (const auto& i : upper_bounded_ideals)
        if (!i.is_full()) rec.fail("proper upper bounded ideal in a nilpotent algebra", {{"I", i}});
      rec.detail(dims({{"U_m(0)", U.dim()}}));
    }
    report.entries.push_back(rec.finish());
  }
  {
    Recorder rec("T2.6c", "R(P(L)) = R(L) ∩ P(L), and it is nilpotent");
    const Subspace radical_of_p = embed(radical(restrict_to(lie, P)), P);
    const Subspace meet = intersect(R, P);
    if (!P.is_zero()) rec.instance();
    if (radical_of_p != meet)
      rec.fail("R(P(L)) differs from R(L) ∩ P(L)", {{"P(L)", P}, {"R(P(L))", radical_of_p}, {"R(L)∩P(L)", meet}});
    else if (!restricted_is_nilpotent(lie, meet))
      rec.fail("R(L) ∩ P(L) is not nilpotent", {{"P(L)", P}, {"R(L)∩P(L)", meet}});
    rec.detail(dims({{"P", P.dim()}, {"R∩P", meet.dim()}}));
    report.entries.push_back(rec.finish(true));
  }
  {
    Recorder rec("E2.2", "[L, R(L)] ⊆ R(L) and [L, R(L)] is nilpotent");
    const Subspace lr = bracket(lie, all, R);
    if (!R.is_zero()) rec.instance();
    if (!leq(lr, R))
      rec.fail("[L, R(L)] not contained in R(L)", {{"R(L)", R}, {"[L,R(L)]", lr}});
    else if (!restricted_is_nilpotent(lie, lr))
      rec.fail("[L, R(L)] is not nilpotent", {{"R(L)", R}, {"[L,R(L)]", lr}});
    rec.detail(dims({{"R", R.dim()}, {"[L,R]", lr.dim()}}));
    report.entries.push_back(rec.finish(true));
  }
  {
    Recorder rec("P2.8", "[L, R(L)] ⊆ L^perp (nilradical-free form)");
    const Subspace lr = bracket(lie, all, R);
    if (!lr.is_zero()) rec.instance();
    if (!leq(lr, lperp)) rec.fail("[L, R(L)] not Killing-orthogonal to L", {{"[L,R(L)]", lr}, {"L^perp", lperp}});
    if (!is_ideal(lie, lperp)) rec.fail("L^perp is not an ideal", {{"L^perp", lperp}});
    rec.detail(dims({{"L^perp", lperp.dim()}}));
    report.entries.push_back(rec.finish(true));
  }
  {
    Recorder rec("RAD", "R(L) = D(L)^perp is solvable and contains every solvable ideal");
    if (!is_ideal(lie, R) || !restricted_is_solvable(lie, R)) rec.fail("R(L) is not a solvable ideal", {{"R(L)", R}});
    for (const auto& i : solvable_ideals) {
      if (!i.is_zero()) rec.instance();
      if (!leq(i, R)) rec.fail("solvable ideal outside R(L)", {{"I", i}, {"R(L)", R}});
    }
    rec.detail(std::to_string(solvable_ideals.size()) + " solvable ideals sampled, " + dims({{"R", R.dim()}}));
    report.entries.push_back(rec.finish(true));
  }
  return report;
}

LieAlgebra change_basis(const LieAlgebra& lie, const Matrix& basis) {
  const std::size_t n = lie.dim();
  if (basis.rows() != n || basis.cols() != n) throw std::invalid_argument("change_basis: need an n x n matrix");
  const Matrix inv = inverse(basis);
  const auto rows = basis.row_vectors();
  StructureConstants constants(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // Row vector z = sum_k c_k b_k, so c = z . B^{-1}.
      const Vector z = bracket(lie, rows[i], rows[j]);
      Vector c(n);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) c[k].add_product(z[m], inv(m, k));
      if (!is_zero(c)) constants.set(i, j, std::move(c));
    }
  return LieAlgebra(std::move(constants));
}

LieAlgebra random_algebra(std::uint64_t seed, std::size_t max_dim) {
  if (max_dim == 0) throw std::invalid_argument("random_algebra: max_dim must be positive");
  std::mt19937_64 rng(derive(seed, 0xa19e));

  auto sparse = [&](std::size_t n) {
    for (;;) {
      StructureConstants c(n);
      const int density = uniform(rng, 1, 3);  // out of 8
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Vector v(n);
          for (auto& x : v)
            if (uniform(rng, 0, 7) < density) x = uniform(rng, -2, 2);
          if (!is_zero(v)) c.set(i, j, std::move(v));
        }
      LieAlgebra l(std::move(c));
      if (validate(l).ok()) return l;
    }
  };

  auto perturbed = [&]() -> std::optional<LieAlgebra> {
    std::vector<catalog::Entry> small;
    for (const auto& name : catalog::list()) {
      auto e = catalog::get(name);
      if (e.algebra.dim() <= max_dim && e.algebra.dim() >= 2) small.push_back(std::move(e));
    }
    if (small.empty()) return std::nullopt;
    const auto& base = small[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(small.size()) - 1))].algebra;
    const std::size_t n = base.dim();
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<Vector> table;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) table.push_back(base.basis_bracket(i, j));
      const int edits = uniform(rng, 1, 2);
      for (int e = 0; e < edits; ++e) {
        auto& v = table[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(table.size()) - 1))];
        v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1))] = uniform(rng, -2, 2);
      }
      StructureConstants c(n);
      std::size_t t = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++t)
          if (!is_zero(table[t])) c.set(i, j, table[t]);
      LieAlgebra l(std::move(c));
      if (validate(l).ok()) return l;
    }
    return std::nullopt;
  };

  LieAlgebra result;
  std::optional<LieAlgebra> p;
  if (uniform(rng, 0, 1) == 1) p = perturbed();
  result = p ? std::move(*p) : sparse(static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_dim))));

  if (result.dim() >= 2 && uniform(rng, 0, 1) == 1) {
    const std::size_t n = result.dim();
    for (;;) {
      Matrix b(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = i == j ? uniform(rng, 1, 2) : uniform(rng, -1, 1);
      if (rank(b) == n) return change_basis(result, b);
    }
  }
  return result;
}

std::vector<LieAlgebra> random_corpus(std::size_t count, std::uint64_t seed, std::size_t max_dim) {
  std::vector<LieAlgebra> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_algebra(derive(seed, 0xc0 + k), max_dim));
  return out;
}

}  // namespace liealg::oracle
