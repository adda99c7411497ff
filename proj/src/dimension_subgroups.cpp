#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lienil/dimension_subgroups.hpp"
#include "lienil/errors.hpp"

namespace lienil {

std::string_view to_string(CeilConvention c) {
  return c == CeilConvention::ceiling ? "ceiling" : "strict-greater";
}

std::optional<CeilConvention> parse_convention(std::string_view text) {
  if (text == "ceiling") return CeilConvention::ceiling;
  if (text == "strict-greater") return CeilConvention::strict_greater;
  return std::nullopt;
}

std::size_t convention_index(CeilConvention c, std::size_t m, std::uint32_t p) {
  return c == CeilConvention::ceiling ? (m + p - 1) / p : m / p + 1;
}

const Subgroup& DimensionSeries::term(std::size_t m) const {
  if (m == 0) throw InputError("dimension subgroups are indexed from 1");
  if (m <= terms.size()) return terms[m - 1];
  if (!complete) throw StateError("dimension series is incomplete");
  return terms.back();
}

unsigned DimensionSeries::d(std::size_t m) const {
  if (m == 0) throw InputError("d-values are indexed from 1");
  return m <= d_values.size() ? d_values[m - 1] : 0;
}

unsigned DimensionSeries::derived_log() const {
  if (terms.size() < 2) throw StateError("dimension series has no derived term");
  return *log_exact(terms[1].order(), p);
}

namespace {

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

bool is_power_of(std::uint64_t m, std::uint64_t p) { return log_exact(m, p).has_value(); }

}  // namespace

DimensionSeries dimension_series_recursive(const GroupPtr& G, std::uint32_t p, CeilConvention convention) {
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
  const auto lcs = lower_central_series(G);
  if (!lcs.back().is_trivial()) throw PreconditionError("G is not nilpotent");
  const Subgroup all = whole_group(G);
  Subgroup derived = lcs.size() > 1 ? lcs[1] : trivial_subgroup(G);
  if (!log_exact(derived.order(), p))
    throw PreconditionError("G' has order " + std::to_string(derived.order()) + ", not a power of p = " +
                            std::to_string(p));

  DimensionSeries S{G, p, convention, {all, std::move(derived)}, {}, false};
  const std::size_t max_terms = 4 * G->order() + 8;
  for (std::size_t m = 2; !(S.terms[m - 1].is_trivial() && S.terms[m - 2].is_trivial()); ++m) {
    if (m > max_terms) throw std::logic_error("dimension series did not stabilize");
    const Subgroup bracket = commutator_subgroup(S.terms[m - 1], all);
    const std::size_t ref = convention_index(convention, m, p) + 1;
    Subgroup next = trivial_subgroup(G);
    if (ref <= m) {
      next = subgroup_product(bracket, power_subgroup(S.terms[ref - 1], p));
    } else if (ref == m + 1) {
      // Self-referential term (strict_greater, p = 2, m = 2): take the
      // greatest fixed point of X -> (D_(m), G) X^p below D_(m).
      Subgroup x = S.terms[m - 1];
      while (true) {
        Subgroup y = subgroup_product(bracket, power_subgroup(x, p));
        if (y == x) break;
        x = std::move(y);
      }
      next = std::move(x);
    } else {
      throw std::logic_error("recursion refers past the term being computed");
    }
    S.terms.push_back(std::move(next));
  }

  for (std::size_t m = 1; m < S.terms.size(); ++m) {
    const Subgroup& upper = S.terms[m - 1];
    const Subgroup& lower = S.terms[m];
    if (!lower.is_subgroup_of(upper)) throw std::logic_error("dimension series is not decreasing");
    const std::uint64_t index = upper.order() / lower.order();
    if (m == 1) {
      S.d_values.push_back(valuation(index, p));
    } else {
      const auto d = log_exact(index, p);
      if (!d) throw std::logic_error("index [D_(m) : D_(m+1)] is not a power of p");
      S.d_values.push_back(*d);
    }
  }
  S.complete = true;
  return S;
}

std::uint64_t jennings_upper_index(const DimensionSeries& S) {
  if (!S.complete) throw StateError("jennings_upper_index: dimension series is incomplete");
  std::uint64_t sum = 0;
  for (std::size_t m = 1; m + 1 <= S.d_values.size(); ++m) sum += m * S.d(m + 1);
  return 2 + (S.p - 1) * sum;
}

bool maximality_profile(const DimensionSeries& S) {
  if (!S.complete) throw StateError("maximality_profile: dimension series is incomplete");
  const unsigned n = S.derived_log();
  std::size_t last = S.d_values.size();
  std::uint64_t top = 1;
  for (unsigned i = 0; i + 1 < n; ++i) top *= S.p;
  last = std::max<std::size_t>(last, n > 0 ? top + 1 : 1);
  for (std::size_t j = 2; j <= last; ++j) {
    const auto i = log_exact(j - 1, S.p);
    const unsigned expected = (i && *i < n) ? 1 : 0;
    if (S.d(j) != expected) return false;
  }
  return true;
}

bool corollary_orders_check(const DimensionSeries& S) {
  if (!maximality_profile(S)) throw StateError("corollary_orders_check: series does not have the maximal profile");
  const unsigned n = S.derived_log();
  std::uint64_t pi = 1;
  for (unsigned i = 0; i <= n; ++i) {
    std::uint64_t expected = 1;
    for (unsigned k = i; k < n; ++k) expected *= S.p;
    if (S.term(pi + 1).order() != expected) return false;
    pi *= S.p;
  }
  return true;
}

std::vector<VanishingViolation> shalev_vanishing_check(const DimensionSeries& S) {
  if (!S.complete) throw StateError("shalev_vanishing_check: dimension series is incomplete");
  std::vector<VanishingViolation> out;
  const Subgroup& derived = S.term(2);
  const unsigned l = *log_exact(exponent(derived), S.p);
  std::uint64_t divisor = 1;
  for (unsigned k = 1; k < l; ++k) divisor *= S.p;
  for (std::size_t m = 1; m <= S.terms.size(); ++m) {
    if (S.d(m + 1) != 0) continue;
    const bool trivial = S.term(m + 1).is_trivial();
    if (is_power_of(m, S.p) && !trivial) out.push_back({m, 1});
    if (l >= 1 && m % divisor == 0 && !trivial) out.push_back({m, 2});
  }
  return out;
}

bool lemma_num_inequality(std::uint64_t p, std::size_t s, std::size_t n, std::span<const std::uint64_t> m) {
  if (p < 1) throw InputError("lemma_num_inequality: p must be positive");
  if (s >= n) throw InputError("lemma_num_inequality: requires s < n");
  if (m.size() != s) throw InputError("lemma_num_inequality: expected " + std::to_string(s) + " parts");
  if (std::accumulate(m.begin(), m.end(), std::uint64_t{0}) != n)
    throw InputError("lemma_num_inequality: parts must sum to n");
  if (p > 1 && static_cast<double>(n) * std::log2(static_cast<double>(p)) > 56)
    throw InputError("lemma_num_inequality: p^n too large");
  std::uint64_t lhs = 0, rhs = 0, pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < s) lhs += m[i] * pi;
    rhs += pi;
    pi *= p;
  }
  return lhs < rhs;
}

}  // namespace lienil
