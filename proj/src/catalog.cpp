#include "liealg/catalog.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace liealg::catalog {

std::string_view to_string(Provenance p) { return p == Provenance::Paper ? "paper" : "derived"; }

namespace {

struct Term {
  const char* label;
  std::int64_t coeff;
};

// Bracket tables written with basis labels, e.g. br("z", "x", {{"x", 1}}).
class TableBuilder {
 public:
  explicit TableBuilder(std::vector<std::string> labels) : labels_(std::move(labels)), constants_(labels_.size()) {}

  TableBuilder& br(const char* a, const char* b, std::initializer_list<Term> image) {
    Vector v(labels_.size());
    for (const auto& t : image) v[index(t.label)] += Rational(t.coeff);
    constants_.set(index(a), index(b), std::move(v));
    return *this;
  }

  LieAlgebra build() const { return make_algebra(constants_, labels_); }

  Subspace span(std::initializer_list<const char*> names) const {
    std::vector<Vector> vs;
    for (const char* n : names) vs.push_back(unit_vector(labels_.size(), index(n)));
    return Subspace::span(vs, labels_.size());
  }

 private:
  std::size_t index(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::logic_error("catalog: unknown label");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::vector<std::string> labels_;
  StructureConstants constants_;
};

constexpr Provenance D = Provenance::Derived;
constexpr Provenance P = Provenance::Paper;

// Order: solvable, nilpotent, perfect, abelian, semisimple; then dims of
// P(L), NP(L), R(L), Z(L), U_m(0).
Expectations expect(bool solvable, bool nilpotent, bool perfect, bool abelian, bool semisimple, std::size_t p,
                    std::size_t np, std::size_t r, std::size_t z, std::size_t u) {
  return {{solvable, D}, {nilpotent, D}, {perfect, D}, {abelian, D}, {semisimple, D},
          {p, D},        {np, D},        {r, D},       {z, D},       {u, D}};
}

std::vector<std::string> labels_e(std::size_t n) { return default_labels(n); }

std::map<std::string, Entry, std::less<>> build_all() {
  std::map<std::string, Entry, std::less<>> entries;
  auto add = [&](Entry e) { entries.emplace(e.name, std::move(e)); };

  for (std::size_t n : {1, 2}) {
    TableBuilder t(labels_e(n));
    add({"abelian" + std::to_string(n), "abelian algebra of dimension " + std::to_string(n), t.build(),
         expect(true, true, false, true, false, 0, 0, n, n, n), Subspace::full(n)});
  }

  {
    TableBuilder t(labels_e(2));
    t.br("e1", "e2", {{"e2", 1}});
    add({"aff1", "non-abelian 2-dimensional algebra [e1,e2]=e2", t.build(),
         expect(true, false, false, false, false, 0, 1, 2, 0, 0), t.span({"e2"})});
  }

  {
    TableBuilder t(labels_e(3));
    t.br("e1", "e2", {{"e3", 1}});
    add({"heis3", "3-dimensional Heisenberg algebra [e1,e2]=e3", t.build(),
         expect(true, true, false, false, false, 0, 0, 3, 1, 3), Subspace::full(3)});
  }

  {
    TableBuilder t(labels_e(4));
    t.br("e1", "e2", {{"e3", 1}}).br("e1", "e3", {{"e4", 1}});
    add({"n4", "4-dimensional filiform nilpotent algebra [e1,e2]=e3, [e1,e3]=e4", t.build(),
         expect(true, true, false, false, false, 0, 0, 4, 1, 4), Subspace::full(4)});
  }

  {
    TableBuilder t({"x", "y", "z"});
    t.br("z", "x", {{"x", 1}}).br("z", "y", {{"x", 1}, {"y", 1}});
    Expectations k = expect(true, false, false, false, false, 0, 2, 3, 0, 0);
    k.solvable.source = P;
    k.near_perfect_radical_dim.source = P;
    add({"s3_2", "solvable algebra s_{3,2}: [z,x]=x, [z,y]=x+y", t.build(), k, t.span({"x", "y"})});
  }

  {
    TableBuilder t({"h", "e", "f"});
    t.br("h", "e", {{"e", 2}}).br("h", "f", {{"f", -2}}).br("e", "f", {{"h", 1}});
    Expectations k = expect(false, false, true, false, true, 3, 3, 0, 0, 0);
    k.perfect.source = P;
    add({"sl2", "split form of sl(2): [h,e]=2e, [h,f]=-2f, [e,f]=h", t.build(), k, Subspace::zero(3)});
  }

  {
    TableBuilder t(labels_e(3));
    t.br("e1", "e2", {{"e3", 1}}).br("e2", "e3", {{"e1", 1}}).br("e3", "e1", {{"e2", 1}});
    add({"so3", "compact rational form so(3): [e1,e2]=e3 and cyclic", t.build(),
         expect(false, false, true, false, true, 3, 3, 0, 0, 0), Subspace::zero(3)});
  }

  {
    TableBuilder t({"h", "e", "f", "c"});
    t.br("h", "e", {{"e", 2}}).br("h", "f", {{"f", -2}}).br("e", "f", {{"h", 1}});
    add({"gl2", "gl(2) = sl(2) + center c", t.build(), expect(false, false, false, false, false, 3, 3, 1, 1, 1),
         t.span({"c"})});
  }

  {
    TableBuilder t({"h", "e", "f", "v1", "v2"});
    t.br("h", "e", {{"e", 2}}).br("h", "f", {{"f", -2}}).br("e", "f", {{"h", 1}});
    t.br("h", "v1", {{"v1", 1}}).br("h", "v2", {{"v2", -1}}).br("e", "v2", {{"v1", 1}}).br("f", "v1", {{"v2", 1}});
    add({"sl2_ltimes_v2", "sl(2) acting on its 2-dimensional standard module (perfect, not semisimple)", t.build(),
         expect(false, false, true, false, false, 5, 5, 2, 0, 0), t.span({"v1", "v2"})});
  }

  {
    TableBuilder t({"h", "e", "f", "x", "y", "z"});
    t.br("h", "e", {{"e", 2}}).br("h", "f", {{"f", -2}}).br("e", "f", {{"h", 1}});
    t.br("z", "x", {{"x", 1}}).br("z", "y", {{"x", 1}, {"y", 1}});
    add({"sl2_plus_s3_2", "direct sum sl(2) + s_{3,2}", t.build(), expect(false, false, false, false, false, 3, 5, 3, 0, 0),
         t.span({"x", "y"})});
  }

  {
    TableBuilder t({"a1", "b1", "a2", "b2"});
    t.br("a1", "b1", {{"b1", 1}}).br("a2", "b2", {{"b2", 1}});
    add({"aff1_plus_aff1", "direct sum of two copies of aff1 (two incomparable upper bounded ideals)", t.build(),
         expect(true, false, false, false, false, 0, 2, 4, 0, 0), t.span({"b1", "b2"})});
  }

  {
    // tr(ad(a)^2) = 1 + 1 - 1 - 1 = 0, so the Killing form vanishes although
    // ad(a) is not nilpotent.
    TableBuilder t({"a", "b1", "b2", "c1", "c2"});
    t.br("a", "b1", {{"b1", 1}}).br("a", "b2", {{"b2", -1}}).br("a", "c1", {{"c2", 1}}).br("a", "c2", {{"c1", -1}});
    add({"killing_null5", "solvable, not nilpotent, with zero Killing form: a acts on Q^4 by diag(1,-1) + rotation",
         t.build(), expect(true, false, false, false, false, 0, 4, 5, 0, 0), t.span({"b1", "b2", "c1", "c2"})});
  }

  {
    TableBuilder t({"h", "e", "f", "r1", "r2", "r3"});
    t.br("h", "e", {{"e", 2}}).br("h", "f", {{"f", -2}}).br("e", "f", {{"h", 1}});
    t.br("r1", "r2", {{"r3", 1}}).br("r2", "r3", {{"r1", 1}}).br("r3", "r1", {{"r2", 1}});
    add({"sl2_plus_so3", "direct sum sl(2) + so(3) (two simple ideals)", t.build(),
         expect(false, false, true, false, true, 6, 6, 0, 0, 0), Subspace::zero(6)});
  }

  return entries;
}

const std::map<std::string, Entry, std::less<>>& all() {
  static const auto entries = build_all();
  return entries;
}

}  // namespace

std::vector<std::string> list() {
  std::vector<std::string> names;
  for (const auto& [name, _] : all()) names.push_back(name);
  return names;
}

Entry get(std::string_view name) {
  const auto& entries = all();
  if (auto it = entries.find(name); it != entries.end()) return it->second;
  std::string msg = "unknown catalog entry '" + std::string(name) + "'; available:";
  for (const auto& [n, _] : entries) msg += " " + n;
  throw UnknownName(msg);
}

}  // namespace liealg::catalog
