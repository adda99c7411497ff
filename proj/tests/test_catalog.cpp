#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lienil/catalog.hpp"
#include "lienil/errors.hpp"
#include "lienil/group_algebra.hpp"
#include "support/oracle_groups.hpp"

using namespace lienil;

TEST_CASE("cyclic") {
  const GroupPtr C1 = build(cyclic_spec(1));
  CHECK(C1->order() == 1);
  CHECK(build(cyclic_spec(7))->element_order(1) == 7);
  CHECK_THROWS_AS(build(cyclic_spec(0)), InputError);
  CHECK(cyclic_spec(12).name == "C12");
}

TEST_CASE("2-group families") {
  const GroupPtr Q8 = build(quaternion_spec(3));
  CHECK(Q8->order() == 8);
  const Element a = 1, b = 4;
  CHECK(Q8->mul(b, b) == Q8->power(a, 2));
  CHECK(Q8->mul(Q8->mul(Q8->inverse(b), a), b) == Q8->inverse(a));
  CHECK(Q8->power(a, 4) == Q8->identity());

  const GroupPtr SD16 = build(semidihedral_spec(4));
  CHECK(SD16->mul(SD16->mul(SD16->inverse(8), 1), 8) == SD16->power(1, 3));
  CHECK(SD16->mul(8, 8) == SD16->identity());

  CHECK_THROWS_WITH_AS(build(semidihedral_spec(3)), doctest::Contains("n >= 4"), InputError);
  CHECK_THROWS_WITH_AS(build(modular_spec(3)), doctest::Contains("n >= 4"), InputError);
  CHECK_THROWS_WITH_AS(build(dihedral_spec(2)), doctest::Contains("n >= 3"), InputError);
  CHECK_THROWS_AS(build(quaternion_spec(2)), InputError);

  CHECK(dihedral_spec(4).name == "D16");
  CHECK(quaternion_spec(3).name == "Q8");
  CHECK(semidihedral_spec(4).name == "SD16");
  CHECK(modular_spec(5).name == "MD32");
  CHECK(Q8->label(0) == "1");
  CHECK(Q8->label(5) == "a·b");
  CHECK(Q8->label(7) == "a^3·b");
}

TEST_CASE("family orders and derived subgroups") {
  for (unsigned n = 3; n <= 6; ++n) {
    for (const auto& spec : {dihedral_spec(n), quaternion_spec(n)}) {
      const GroupPtr G = build(spec);
      CHECK(G->order() == (1U << n));
      CHECK(commutator_subgroup(whole_group(G), whole_group(G)).order() == (1U << (n - 2)));
    }
  }
  for (unsigned n = 4; n <= 6; ++n) {
    CHECK(lower_central_series(build(semidihedral_spec(n)))[1].order() == (1U << (n - 2)));
    CHECK(lower_central_series(build(modular_spec(n)))[1].order() == 2);
  }
}

TEST_CASE("families match concrete realizations") {
  for (unsigned n = 3; n <= 6; ++n) {
    const std::int64_t k = std::int64_t{1} << (n - 1);
    CHECK(fingerprint(build(dihedral_spec(n))) == fingerprint(oracle::affine(k, -1)));
    CHECK(fingerprint(build(quaternion_spec(n))) == fingerprint(oracle::generalized_quaternion(2 * k)));
    if (n >= 4) {
      CHECK(fingerprint(build(semidihedral_spec(n))) == fingerprint(oracle::affine(k, k / 2 - 1)));
      CHECK(fingerprint(build(modular_spec(n))) == fingerprint(oracle::affine(k, k / 2 + 1)));
    }
  }
  CHECK(fingerprint(build(heisenberg_spec(3))) == fingerprint(oracle::unitriangular(3)));
  CHECK(fingerprint(build(heisenberg_spec(4))) == fingerprint(oracle::unitriangular(4)));
  CHECK(fingerprint(build(heisenberg_spec(5))) == fingerprint(oracle::unitriangular(5)));
  CHECK(fingerprint(build(wreath_c3_spec())) == fingerprint(oracle::wreath_c3()));
  CHECK(fingerprint(build(symmetric3_spec())) == fingerprint(oracle::symmetric3()));
  CHECK(fingerprint(build(direct_product_spec({cyclic_spec(4), cyclic_spec(2)}))) ==
        fingerprint(oracle::abelian({4, 2})));
}

TEST_CASE("order 27 groups of both exponents") {
  const GroupPtr He3 = build(heisenberg_spec(3));
  const GroupPtr M27 = build(m27_spec());
  CHECK(exponent(whole_group(He3)) == 3);
  CHECK(exponent(whole_group(M27)) == 9);
  CHECK(lower_central_series(He3)[1].order() == 3);
  CHECK(lower_central_series(M27)[1].order() == 3);
}

TEST_CASE("semidirect_product") {
  const GroupPtr C4 = build(cyclic_spec(4)), C2 = build(cyclic_spec(2));
  const SemidirectAction trivial{{1}, {{1, {1}}}};
  CHECK(semidirect_product(C4, C2, trivial)->table() == direct_product(C4, C2)->table());

  const GroupPtr D16 = semidirect_product(cyclic_spec(8), cyclic_spec(2), SemidirectAction{{1}, {{1, {7}}}});
  CHECK(fingerprint(D16) == fingerprint(build(dihedral_spec(4))));

  // a -> a^2 is not an automorphism of C4.
  CHECK_THROWS_AS(semidirect_product(C4, C2, SemidirectAction{{1}, {{1, {2}}}}), InputError);
  // a -> a^3 has order 2, incompatible with a generator of order 3.
  CHECK_THROWS_AS(semidirect_product(C4, build(cyclic_spec(3)), SemidirectAction{{1}, {{1, {3}}}}), InputError);
  // A listed element that does not generate H.
  CHECK_THROWS_AS(semidirect_product(C4, C4, SemidirectAction{{1}, {{2, {3}}}}), InputError);
  CHECK_THROWS_AS(semidirect_product(C4, C2, SemidirectAction{{1}, {{1, {1, 1}}}}), InputError);
}

TEST_CASE("extend_homomorphism") {
  const GroupPtr C6 = build(cyclic_spec(6)), C3 = build(cyclic_spec(3));
  const std::vector<Element> g{1};
  auto hom = extend_homomorphism(*C6, g, std::vector<Element>{1}, *C3);
  REQUIRE(hom);
  for (Element x = 0; x < 6; ++x) CHECK((*hom)[x] == x % 3);
  CHECK_FALSE(extend_homomorphism(*C3, g, std::vector<Element>{1}, *C6));
  CHECK_THROWS_AS(extend_homomorphism(*C6, std::vector<Element>{2}, std::vector<Element>{1}, *C3), InputError);
}

TEST_CASE("abelian_element") {
  const std::vector<unsigned> orders{4, 2};
  const GroupPtr G = build(direct_product_spec({cyclic_spec(4), cyclic_spec(2)}));
  const Element x = abelian_element(orders, std::vector<unsigned>{1, 0});
  const Element y = abelian_element(orders, std::vector<unsigned>{0, 1});
  CHECK(G->element_order(x) == 4);
  CHECK(G->element_order(y) == 2);
  CHECK(abelian_element(orders, std::vector<unsigned>{3, 1}) == G->mul(G->power(x, 3), y));
}

TEST_CASE("witness sweep") {
  const WitnessSweep& sweep = default_witness_sweep();
  CHECK(sweep.candidates > 0);
  REQUIRE_FALSE(sweep.witnesses.empty());
  REQUIRE_FALSE(sweep.class_two_klein.empty());
  std::set<Fingerprint> prints;
  for (const auto* list : {&sweep.witnesses, &sweep.class_two_klein})
    for (const auto& spec : *list) {
      CAPTURE(spec.name);
      const GroupPtr G = build(spec);
      CHECK(G->order() <= 64);
      CHECK(prime_power(G->order())->prime == 2);
      const auto lcs = lower_central_series(G);
      CHECK(is_klein_four(lcs[1]));
      CHECK(prints.insert(fingerprint(G)).second);
      CHECK(parse_named(spec.name).name == spec.name);
    }
  for (const auto& spec : sweep.witnesses) {
    const auto lcs = lower_central_series(build(spec));
    CHECK(lcs[2].order() == 2);
  }
  const GroupAlgebra A(build(sweep.witnesses.front()), 2);
  CHECK(lower_lie_chain(A).nilpotency_index == 5U);
}

TEST_CASE("the order-32 sweep alone already finds a witness") {
  const WitnessSweep small = klein_witness_sweep(32);
  CHECK_FALSE(small.witnesses.empty());
  for (const auto& w : small.witnesses) CHECK(build(w)->order() == 32);
}

TEST_CASE("standard_corpus") {
  const auto corpus = standard_corpus();
  auto has = [&](const std::string& name, std::uint32_t p, bool negative) {
    for (const auto& e : corpus)
      if (e.spec.name == name && e.p == p && e.negative_control == negative) return true;
    return false;
  };
  CHECK(has("D8", 2, false));
  CHECK(has("He3", 3, false));
  CHECK(has("M27", 3, false));
  CHECK(has("S3", 2, true));
  CHECK(has("D8", 3, true));
  for (unsigned n = 1; n <= 16; ++n) CHECK(std::any_of(corpus.begin(), corpus.end(), [&](const CorpusEntry& e) {
                                     return e.spec.name == "C" + std::to_string(n);
                                   }));
  std::set<std::uint32_t> primes;
  for (const auto& e : corpus) primes.insert(e.p);
  CHECK(primes.count(2));
  CHECK(primes.count(3));
  CHECK(primes.count(5));

  const auto again = standard_corpus();
  REQUIRE(again.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(again[i].spec.name == corpus[i].spec.name);
}

TEST_CASE("parse_named") {
  CHECK(parse_named("D16").name == "D16");
  CHECK(build(parse_named("D16"))->order() == 16);
  CHECK(parse_named("C4xC2").name == "C4xC2");
  CHECK(build(parse_named("C2xD8xC3"))->order() == 48);
  CHECK(build(parse_named("He5"))->order() == 125);
  CHECK(build(parse_named("C7:C3"))->order() == 21);
  CHECK(fingerprint(build(parse_named("SD32"))) == fingerprint(build(semidihedral_spec(5))));
  CHECK_THROWS_AS(parse_named("D12"), InputError);
  CHECK_THROWS_AS(parse_named("SD8"), InputError);
  CHECK_THROWS_AS(parse_named("X5"), InputError);
  CHECK_THROWS_AS(parse_named(""), InputError);
  CHECK_THROWS_AS(parse_named("C4x"), InputError);
  CHECK_THROWS_AS(parse_named("C0"), InputError);
}

TEST_CASE("built corpus groups are valid tables") {
  for (const auto& e : standard_corpus()) {
    const GroupPtr G = build(e.spec);
    CHECK(G->order() >= 1);
    CHECK(make_group(G->table())->order() == G->order());
  }
}
