#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lienil/catalog.hpp"
#include "lienil/classifier.hpp"
#include "lienil/errors.hpp"

using namespace lienil;

namespace {

LieReport run(const GroupSpec& spec, std::uint32_t p, AnalyzeOptions options = {}) {
  return analyze(build(spec), p, spec.name, options);
}

}  // namespace

TEST_CASE("is_lie_nilpotent_group") {
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) CHECK(is_lie_nilpotent_group(build(cyclic_spec(6)), p));
  CHECK_FALSE(is_lie_nilpotent_group(build(symmetric3_spec()), 2));
  CHECK_FALSE(is_lie_nilpotent_group(build(symmetric3_spec()), 3));
  CHECK(is_lie_nilpotent_group(build(dihedral_spec(4)), 2));
  CHECK_FALSE(is_lie_nilpotent_group(build(dihedral_spec(4)), 3));
  CHECK(is_lie_nilpotent_group(build(direct_product_spec({cyclic_spec(3), dihedral_spec(3)})), 2));
  CHECK_THROWS_AS(is_lie_nilpotent_group(build(cyclic_spec(2)), 9), InputError);
}

TEST_CASE("theorem_predicate") {
  CHECK(theorem_predicate(build(dihedral_spec(4)), 2));
  CHECK(theorem_predicate(build(heisenberg_spec(3)), 3));
  const auto& sweep = default_witness_sweep();
  REQUIRE_FALSE(sweep.witnesses.empty());
  for (const auto& w : sweep.witnesses) CHECK(theorem_predicate(build(w), 2));
  for (const auto& c : sweep.class_two_klein) CHECK_FALSE(theorem_predicate(build(c), 2));
  CHECK_FALSE(theorem_predicate(build(wreath_c3_spec()), 3));
  CHECK_THROWS_WITH_AS(theorem_predicate(build(symmetric3_spec()), 3), doctest::Contains("G is not nilpotent"),
                       PreconditionError);
  CHECK_THROWS_WITH_AS(theorem_predicate(build(dihedral_spec(3)), 3), doctest::Contains("not a power of p"),
                       PreconditionError);
}

TEST_CASE("corollary_check") {
  LieReport r = run(dihedral_spec(4), 2);
  CHECK(r.t_U == 5U);
  CHECK(r.t_L == 5U);
  CHECK(corollary_check(r));
  const LieReport q8 = run(quaternion_spec(3), 2);
  CHECK(q8.t_U == 3U);
  CHECK(corollary_check(q8));

  LieReport vacuous = r;
  vacuous.t_U = 4;
  vacuous.t_L = 3;
  CHECK(corollary_check(vacuous));
  LieReport broken = r;
  broken.t_L = 4;
  CHECK_FALSE(corollary_check(broken));
  LieReport missing = r;
  missing.t_L.reset();
  CHECK_THROWS_AS(corollary_check(missing), StateError);
  CHECK_THROWS_AS(corollary_check(run(symmetric3_spec(), 2)), StateError);
}

TEST_CASE("analyze examples") {
  const LieReport c4 = run(cyclic_spec(4), 2);
  CHECK(c4.lie_nilpotent);
  CHECK(c4.t_L == 2U);
  CHECK(c4.t_U == 2U);
  CHECK(c4.theorem_predicts_maximal == true);
  CHECK(c4.observed_maximal == true);
  CHECK(c4.passed());

  const LieReport d8 = run(dihedral_spec(3), 2);
  CHECK(d8.t_L == 3U);
  CHECK(d8.t_U == 3U);
  CHECK(d8.theorem_predicts_maximal == true);
  CHECK(d8.observed_maximal == true);
  CHECK(d8.passed());

  const LieReport s3 = run(symmetric3_spec(), 2);
  CHECK_FALSE(s3.lie_nilpotent);
  CHECK_FALSE(s3.t_L);
  CHECK_FALSE(s3.t_U);
  CHECK_FALSE(s3.jennings_t_U);
  CHECK_FALSE(s3.theorem_predicts_maximal);
  CHECK(s3.lower_status == "stabilized");
  CHECK(s3.passed());

  const LieReport c1 = run(cyclic_spec(1), 2);
  CHECK(c1.t_L == 2U);
  CHECK(c1.observed_maximal == true);
}

TEST_CASE("reports above the brute-force cap carry predictions only") {
  AnalyzeOptions options;
  options.brute_force_cap = 32;
  const LieReport r = run(heisenberg_spec(4), 2, options);
  CHECK_FALSE(r.brute_force);
  CHECK_FALSE(r.t_L);
  CHECK_FALSE(r.observed_maximal);
  CHECK(r.theorem_predicts_maximal == true);
  CHECK(r.jennings_t_U == 5U);
  CHECK_FALSE(r.checks.count("theorem_biconditional"));
  CHECK(r.checks.at("prediction_matches_recursion"));
  CHECK(r.passed());
}

TEST_CASE("errors are captured in the report") {
  const LieReport r = analyze(build(cyclic_spec(2)), 4, "C2");
  REQUIRE(r.error);
  CHECK_FALSE(r.passed());
  const LieReport n = analyze(nullptr, 2, "null");
  CHECK(n.error);
}

TEST_CASE("a wrong convention surfaces as failed checks") {
  AnalyzeOptions options;
  options.convention = CeilConvention::strict_greater;
  const LieReport r = run(heisenberg_spec(4), 2, options);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.checks.at("recursion_matches_oracle"));
  CHECK_FALSE(r.checks.at("jennings_matches_upper_chain"));
  CHECK(r.convention_agreement.at("ceiling"));
  CHECK_FALSE(r.convention_agreement.at("strict-greater"));
}

TEST_CASE("report invariants over the corpus") {
  for (const auto& e : standard_corpus()) {
    CAPTURE(e.spec.name);
    CAPTURE(e.p);
    const LieReport r = run(e.spec, e.p);
    CHECK_FALSE(r.error);
    CHECK(r.lie_nilpotent != e.negative_control);
    CHECK(r.passed());
    if (!r.lie_nilpotent) continue;
    REQUIRE(r.t_L);
    REQUIRE(r.t_U);
    CHECK(*r.t_L <= *r.t_U);
    CHECK(*r.t_U <= r.derived_order + 1);
    CHECK(r.theorem_predicts_maximal == r.observed_maximal);
    CHECK(r.jennings_t_U == *r.t_U);
    if (e.p > 3) CHECK(*r.t_L == *r.t_U);
  }
}
