#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "lienil/errors.hpp"
#include "lienil/fp_linear.hpp"

using namespace lienil;

namespace {

FpVector random_vector(std::mt19937& rng, std::uint32_t p, std::size_t n, double density = 0.5) {
  FpVector v(p, n);
  std::bernoulli_distribution nonzero(density);
  std::uniform_int_distribution<std::int64_t> coeff(1, p - 1);
  for (std::size_t i = 0; i < n; ++i)
    if (nonzero(rng)) v.set(i, coeff(rng));
  return v;
}

// Dimension by plain Gaussian elimination on a copy, independent of FpSubspace.
std::size_t naive_rank(std::vector<FpVector> rows, std::uint32_t p) {
  const PrimeField F(p);
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Coeff f = F.mul(rows[r][c], F.inv(rows[rank][c]));
      rows[r] = rows[r] - scaled(rows[rank], f);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("prime field") {
  CHECK_THROWS_AS(PrimeField(4), InputError);
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_THROWS_AS(PrimeField(257), InputError);
  CHECK_THROWS_AS(FpVector(6, 3), InputError);
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 251U}) {
    const PrimeField F(p);
    for (std::uint32_t a = 1; a < p; ++a) CHECK(F.mul(static_cast<Coeff>(a), F.inv(static_cast<Coeff>(a))) == 1);
  }
}

TEST_CASE("vectors reduce their coordinates") {
  const FpVector v(3, {4, -1, 3});
  CHECK(v[0] == 1);
  CHECK(v[1] == 2);
  CHECK(v[2] == 0);
  CHECK((v + v) == FpVector(3, {2, 1, 0}));
  CHECK((v - v).is_zero());
  CHECK(scaled(v, -1) == FpVector(3, {2, 1, 0}));
  CHECK_THROWS_AS(v + FpVector(5, 3), InputError);
  CHECK_THROWS_AS(v + FpVector(3, 4), InputError);
}

TEST_CASE("echelon_insert") {
  FpSubspace empty(2, 3);
  auto [same, grew0] = echelon_insert(empty, FpVector(2, 3));
  CHECK_FALSE(grew0);
  CHECK(same.dimension() == 0);

  auto [one, grew1] = echelon_insert(empty, FpVector(2, {0, 1, 1}));
  CHECK(grew1);
  CHECK(one.dimension() == 1);

  auto [S, g1] = echelon_insert(FpSubspace(2, 3), FpVector(2, {1, 1, 0}));
  auto [T, g2] = echelon_insert(S, FpVector(2, {0, 1, 1}));
  CHECK(g2);
  CHECK(T.dimension() == 2);
  CHECK(T.pivot_columns() == std::vector<std::size_t>{0, 1});
  CHECK(T.basis()[0] == FpVector(2, {1, 0, 1}));
  CHECK(T.basis()[1] == FpVector(2, {0, 1, 1}));
  CHECK_THROWS_AS(T.insert(FpVector(3, 3)), InputError);
}

TEST_CASE("contains") {
  FpSubspace S(2, 3);
  S.insert(FpVector(2, {1, 1, 0}));
  CHECK(contains(S, FpVector(2, 3)));
  CHECK(contains(S, FpVector(2, {1, 1, 0})));
  CHECK_FALSE(contains(S, FpVector(2, {1, 0, 0})));
  CHECK(contains(FpSubspace(5, 2), FpVector(5, 2)));
}

TEST_CASE("subspace_equal") {
  const FpVector e1(2, {1, 0}), e2(2, {0, 1}), e12(2, {1, 1});
  const std::vector<FpVector> a{e1, e2}, b{e12, e2}, c{e1}, d{e2};
  const FpSubspace A = span_of(2, 2, a);
  CHECK(subspace_equal(A, A));
  CHECK(subspace_equal(A, span_of(2, 2, b)));
  CHECK_FALSE(subspace_equal(span_of(2, 2, c), span_of(2, 2, d)));
  CHECK_THROWS_AS(subspace_equal(A, FpSubspace(3, 2)), InputError);
  CHECK(FpSubspace::full(3, 4).dimension() == 4);
}

TEST_CASE("randomized subspace properties") {
  std::mt19937 rng(20241);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 64;
      const std::size_t k = rng() % (n + 3);
      std::vector<FpVector> vs;
      for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(rng, p, n, trial % 2 ? 0.1 : 0.6));
      // Some dependent rows.
      if (k >= 2) vs.push_back(vs[0] + scaled(vs[1], 2));

      FpSubspace S(p, n);
      std::size_t last = 0;
      for (const auto& v : vs) {
        S.insert(v);
        CHECK(S.dimension() >= last);
        last = S.dimension();
      }
      CHECK(S.dimension() == naive_rank(vs, p));

      // Reduced echelon form.
      for (std::size_t r = 0; r < S.dimension(); ++r) {
        const std::size_t c = S.pivot_columns()[r];
        CHECK(S.basis()[r][c] == 1);
        for (std::size_t i = 0; i < c; ++i) CHECK(S.basis()[r][i] == 0);
        for (std::size_t o = 0; o < S.dimension(); ++o)
          if (o != r) CHECK(S.basis()[o][c] == 0);
        if (r > 0) CHECK(S.pivot_columns()[r - 1] < c);
      }

      // Canonical: the basis alone, or any insertion order, gives the same rows.
      FpSubspace again(p, n);
      for (const auto& b : S.basis()) again.insert(b);
      CHECK(again == S);
      auto shuffled = vs;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(span_of(p, n, shuffled) == S);

      // contains <=> span does not grow.
      for (int q = 0; q < 5; ++q) {
        const FpVector v = q % 2 ? random_vector(rng, p, n) : (vs.empty() ? FpVector(p, n) : scaled(vs[q % vs.size()], 3));
        FpSubspace bigger = S;
        bigger.insert(v);
        CHECK(S.contains(v) == (bigger.dimension() == S.dimension()));
        CHECK(S.reduce(v).is_zero() == S.contains(v));
      }
    }
  }
}

TEST_CASE("axpy") {
  for (std::uint32_t p : {2U, 3U, 7U, 251U}) {
    std::mt19937 rng(p);
    FpVector x = random_vector(rng, p, 40), y = random_vector(rng, p, 40);
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(p); ++k) {
      FpVector z = x;
      axpy(z.data(), y.data(), static_cast<Coeff>(k), p);
      CHECK(z == x + scaled(y, k));
    }
  }
}
