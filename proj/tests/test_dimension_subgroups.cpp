#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "lienil/catalog.hpp"
#include "lienil/dimension_subgroups.hpp"
#include "lienil/errors.hpp"
#include "lienil/group_algebra.hpp"

using namespace lienil;

namespace {

std::vector<std::size_t> orders(const DimensionSeries& S) {
  std::vector<std::size_t> o;
  for (const auto& t : S.terms) o.push_back(t.order());
  return o;
}

// All compositions of n into s positive parts.
void compositions(std::size_t n, std::size_t s, std::vector<std::uint64_t>& cur,
                  const std::function<void(const std::vector<std::uint64_t>&)>& f) {
  if (cur.size() == s) {
    if (n == 0) f(cur);
    return;
  }
  const std::size_t left = s - cur.size();
  for (std::uint64_t part = 1; part + (left - 1) <= n; ++part) {
    cur.push_back(part);
    compositions(n - part, s, cur, f);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("convention index") {
  CHECK(convention_index(CeilConvention::ceiling, 4, 2) == 2);
  CHECK(convention_index(CeilConvention::strict_greater, 4, 2) == 3);
  CHECK(convention_index(CeilConvention::ceiling, 5, 2) == 3);
  CHECK(convention_index(CeilConvention::strict_greater, 5, 2) == 3);
  CHECK(parse_convention("ceiling") == CeilConvention::ceiling);
  CHECK(parse_convention("strict-greater") == CeilConvention::strict_greater);
  CHECK_FALSE(parse_convention("floor"));
  CHECK(kDefaultConvention == CeilConvention::ceiling);
}

TEST_CASE("dimension_series_recursive first terms") {
  for (const auto& e : standard_corpus()) {
    if (e.negative_control) continue;
    const GroupPtr G = build(e.spec);
    const DimensionSeries S = dimension_series_recursive(G, e.p);
    CHECK(S.term(1) == whole_group(G));
    CHECK(S.term(2) == commutator_subgroup(whole_group(G), whole_group(G)));
    CHECK(S.complete);
    CHECK(S.terms.back().is_trivial());
    CHECK(S.terms[S.terms.size() - 2].is_trivial());
  }
}

TEST_CASE("D16 series") {
  const GroupPtr G = build(dihedral_spec(4));
  const DimensionSeries S = dimension_series_recursive(G, 2);
  CHECK(orders(S) == std::vector<std::size_t>{16, 4, 2, 1, 1});
  CHECK(S.term(3) == subgroup_closure(G, std::vector<Element>{G->power(1, 4)}));
  CHECK(S.d(2) == 1);
  CHECK(S.d(3) == 1);
  CHECK(S.d(4) == 0);
  CHECK(S.d(50) == 0);
  CHECK(S.term(50).is_trivial());
  CHECK_THROWS_AS(S.term(0), InputError);
  CHECK(jennings_upper_index(S) == 5);
  CHECK(maximality_profile(S));
  CHECK(corollary_orders_check(S));
  CHECK(S.term(5).order() == 1);
  CHECK(shalev_vanishing_check(S).empty());

  const GroupAlgebra A(G, 2);
  const auto oracle = dimension_series_oracle(A, upper_lie_chain(A));
  for (std::size_t m = 1; m <= oracle.size(); ++m) CHECK(S.term(m) == oracle[m - 1]);
}

TEST_CASE("jennings_upper_index") {
  const DimensionSeries ab = dimension_series_recursive(build(cyclic_spec(12)), 3);
  CHECK(ab.d(2) == 0);
  CHECK(jennings_upper_index(ab) == 2);
  CHECK(maximality_profile(ab));
  CHECK(corollary_orders_check(ab));

  const DimensionSeries d8 = dimension_series_recursive(build(dihedral_spec(3)), 2);
  CHECK(d8.d(2) == 1);
  CHECK(d8.d(3) == 0);
  CHECK(jennings_upper_index(d8) == 3);

  const DimensionSeries q8 = dimension_series_recursive(build(quaternion_spec(3)), 2);
  CHECK(q8.term(2).order() == 2);
  CHECK(q8.term(3).order() == 1);
  CHECK(corollary_orders_check(q8));

  DimensionSeries incomplete = d8;
  incomplete.complete = false;
  CHECK_THROWS_AS(jennings_upper_index(incomplete), StateError);
  CHECK_THROWS_AS(maximality_profile(incomplete), StateError);
}

TEST_CASE("class-2 Klein controls fail the maximality profile") {
  const auto& sweep = default_witness_sweep();
  REQUIRE_FALSE(sweep.class_two_klein.empty());
  for (const auto& spec : sweep.class_two_klein) {
    const DimensionSeries S = dimension_series_recursive(build(spec), 2);
    CHECK_FALSE(maximality_profile(S));
    CHECK(jennings_upper_index(S) < 5);
    CHECK_THROWS_AS(corollary_orders_check(S), StateError);
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_WITH_AS(dimension_series_recursive(build(symmetric3_spec()), 2), "G is not nilpotent",
                       PreconditionError);
  CHECK_THROWS_WITH_AS(dimension_series_recursive(build(dihedral_spec(3)), 3), doctest::Contains("not a power of p"),
                       PreconditionError);
  CHECK_THROWS_AS(dimension_series_recursive(build(dihedral_spec(3)), 4), InputError);
}

TEST_CASE("series invariants over the corpus") {
  for (const auto& e : standard_corpus()) {
    if (e.negative_control) continue;
    CAPTURE(e.spec.name);
    const GroupPtr G = build(e.spec);
    const DimensionSeries S = dimension_series_recursive(G, e.p);
    unsigned sum = 0;
    for (std::size_t m = 2; m <= S.d_values.size(); ++m) sum += S.d(m);
    CHECK(sum == S.derived_log());
    for (std::size_t m = 1; m < S.terms.size(); ++m) {
      CHECK(S.terms[m].is_subgroup_of(S.terms[m - 1]));
      CHECK(is_normal(S.terms[m]));
    }
    CHECK(shalev_vanishing_check(S).empty());
  }
}

TEST_CASE("strict-greater convention on He4") {
  const GroupPtr G = build(heisenberg_spec(4));
  const DimensionSeries ceil = dimension_series_recursive(G, 2, CeilConvention::ceiling);
  const DimensionSeries strict = dimension_series_recursive(G, 2, CeilConvention::strict_greater);
  CHECK(ceil.term(3).order() == 2);
  CHECK(strict.term(3).is_trivial());
  CHECK(jennings_upper_index(ceil) == 5);
  CHECK(jennings_upper_index(strict) == 4);

  const GroupAlgebra A(G, 2);
  const auto upper = upper_lie_chain(A);
  CHECK(upper.nilpotency_index == 5U);
  CHECK(dimension_subgroup_oracle(A, upper, 3) == ceil.term(3));
}

TEST_CASE("the conventions agree when p does not divide m") {
  for (std::uint32_t p : {2U, 3U, 5U})
    for (std::size_t m = 1; m < 40; ++m)
      if (m % p != 0)
        CHECK(convention_index(CeilConvention::ceiling, m, p) == convention_index(CeilConvention::strict_greater, m, p));
}

TEST_CASE("lemma_num_inequality examples") {
  const std::vector<std::uint64_t> a{1, 2}, b{2};
  CHECK(lemma_num_inequality(2, 2, 3, a));
  CHECK(lemma_num_inequality(3, 1, 2, b));
  CHECK_THROWS_AS(lemma_num_inequality(2, 3, 3, std::vector<std::uint64_t>{1, 1, 1}), InputError);
  CHECK_THROWS_AS(lemma_num_inequality(2, 2, 3, std::vector<std::uint64_t>{1, 1}), InputError);
  CHECK_THROWS_AS(lemma_num_inequality(2, 2, 3, std::vector<std::uint64_t>{3}), InputError);
}

TEST_CASE("lemma_num_inequality over all compositions") {
  std::size_t cases = 0;
  for (std::uint64_t p : {2U, 3U, 5U})
    for (std::size_t n = 2; n <= 8; ++n)
      for (std::size_t s = 1; s < n; ++s) {
        std::vector<std::uint64_t> cur;
        compositions(n, s, cur, [&](const std::vector<std::uint64_t>& m) {
          ++cases;
          CHECK(lemma_num_inequality(p, s, n, m));
        });
      }
  CHECK(cases > 300);
}

TEST_CASE("lemma_num_inequality needs positive parts") {
  // A zero part lets all of n sit on the top power.
  const std::vector<std::uint64_t> m{0, 0, 4};
  CHECK_FALSE(lemma_num_inequality(2, 3, 4, m));
}
