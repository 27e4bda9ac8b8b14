#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "liealg/catalog.hpp"
#include "liealg/oracle.hpp"
#include "liealg/series.hpp"
#include "support/algebras.hpp"

using namespace liealg;
using namespace liealg::testing;

namespace {

std::size_t last_dim(const LieAlgebra& lie, SeriesKind kind) { return oracle::naive_series(lie, kind).last().dim(); }

}  // namespace

TEST_CASE("list and get") {
  const auto names = catalog::list();
  CHECK(names.size() >= 7);
  CHECK(std::is_sorted(names.begin(), names.end()));
  for (const char* required : {"abelian1", "abelian2", "aff1", "heis3", "s3_2", "sl2", "sl2_plus_s3_2"})
    CHECK(std::find(names.begin(), names.end(), required) != names.end());

  CHECK_THROWS_AS(catalog::get("nope"), catalog::UnknownName);
  try {
    catalog::get("nope");
  } catch (const catalog::UnknownName& e) {
    CHECK(std::string(e.what()).find("heis3") != std::string::npos);
  }
}

TEST_CASE("every entry is a valid algebra with consistent metadata") {
  for (const auto& name : catalog::list()) {
    CAPTURE(name);
    const auto e = catalog::get(name);
    CHECK(e.name == name);
    CHECK_FALSE(e.description.empty());
    CHECK(validate(e.algebra).ok());
    if (e.known_nilradical) {
      CHECK(e.known_nilradical->ambient_dim() == e.algebra.dim());
      CHECK(is_ideal(e.algebra, *e.known_nilradical));
    }
  }
}

TEST_CASE("known values match the naive oracle and the library") {
  for (const auto& name : catalog::list()) {
    CAPTURE(name);
    const auto e = catalog::get(name);
    const auto& k = e.known;
    const auto& lie = e.algebra;

    // Oracle values.
    CHECK(last_dim(lie, SeriesKind::Derived) == k.perfect_radical_dim.value);
    CHECK(last_dim(lie, SeriesKind::LowerCentral) == k.near_perfect_radical_dim.value);
    CHECK(last_dim(lie, SeriesKind::UpperCentral) == k.smallest_upper_bounded_dim.value);
    // U_1(0) is the center; a series stuck at 0 has a zero center.
    const auto upper = oracle::naive_series(lie, SeriesKind::UpperCentral).terms;
    CHECK(upper[std::min<std::size_t>(1, upper.size() - 1)].dim() == k.center_dim.value);

    // Library values.
    const ProfileReport p = profile(lie);
    CHECK(p.flags.solvable == k.solvable.value);
    CHECK(p.flags.nilpotent == k.nilpotent.value);
    CHECK(p.flags.perfect == k.perfect.value);
    CHECK(p.flags.abelian == k.abelian.value);
    CHECK(p.flags.semisimple == k.semisimple.value);
    CHECK(p.perfect_radical.dim() == k.perfect_radical_dim.value);
    CHECK(p.near_perfect_radical.dim() == k.near_perfect_radical_dim.value);
    CHECK(p.radical.dim() == k.radical_dim.value);
    CHECK(p.center.dim() == k.center_dim.value);
    CHECK(p.smallest_upper_bounded.dim() == k.smallest_upper_bounded_dim.value);
  }
}

TEST_CASE("literature-sourced values") {
  const auto s = catalog::get("s3_2");
  CHECK(s.known.solvable.source == catalog::Provenance::Paper);
  CHECK(s.known.near_perfect_radical_dim.source == catalog::Provenance::Paper);
  CHECK(catalog::get("sl2").known.perfect.source == catalog::Provenance::Paper);
  CHECK(catalog::get("heis3").known.center_dim.source == catalog::Provenance::Derived);

  // [x,y] = 0, [z,x] = x, [z,y] = x + y; span{x,y} is near perfect but not perfect.
  CHECK(s.algebra.labels() == std::vector<std::string>{"x", "y", "z"});
  CHECK(same_structure(s.algebra, s3_2()));
  CHECK(is_near_perfect_ideal(s.algebra, span_of(3, {0, 1})));
  CHECK_FALSE(is_perfect_ideal(s.algebra, span_of(3, {0, 1})));
  CHECK(is_solvable(s.algebra));
  CHECK(is_perfect(catalog::get("sl2").algebra));
  CHECK(same_structure(catalog::get("sl2").algebra, sl2()));
}

TEST_CASE("direct sums behave blockwise") {
  const auto sum = catalog::get("sl2_plus_s3_2");
  CHECK(same_structure(sum.algebra, sl2_plus_s3_2()));
  const auto a = catalog::get("sl2").known;
  const auto b = catalog::get("s3_2").known;
  CHECK(sum.known.perfect_radical_dim.value == a.perfect_radical_dim.value + b.perfect_radical_dim.value);
  CHECK(sum.known.near_perfect_radical_dim.value == a.near_perfect_radical_dim.value + b.near_perfect_radical_dim.value);
  CHECK(sum.known.radical_dim.value == a.radical_dim.value + b.radical_dim.value);
  CHECK(sum.known.center_dim.value == a.center_dim.value + b.center_dim.value);

  const auto aa = catalog::get("aff1_plus_aff1").known;
  const auto one = catalog::get("aff1").known;
  CHECK(aa.near_perfect_radical_dim.value == 2 * one.near_perfect_radical_dim.value);
  CHECK(aa.radical_dim.value == 2 * one.radical_dim.value);
}
