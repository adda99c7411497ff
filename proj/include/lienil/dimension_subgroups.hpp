#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lienil/group_core.hpp"

namespace lienil {

// How the index of the power term in the Lie dimension subgroup recursion
// D_(m+1) = (D_(m), G) * D_(c(m)+1)^p is computed:
//   ceiling:        c(m) = ceil(m/p)
//   strict_greater: c(m) = the least integer strictly greater than m/p
// They differ exactly when p divides m.
enum class CeilConvention { ceiling, strict_greater };

// Pinned by the convention validation in the test suite: only the ceiling
// reading agrees with G n (1 + KG^(m)) on every catalog group.
inline constexpr CeilConvention kDefaultConvention = CeilConvention::ceiling;

std::string_view to_string(CeilConvention c);
std::optional<CeilConvention> parse_convention(std::string_view text);

std::size_t convention_index(CeilConvention c, std::size_t m, std::uint32_t p);

// Lie dimension subgroups of G in characteristic p.
struct DimensionSeries {
  GroupPtr group;
  std::uint32_t p;
  CeilConvention convention;
  // terms[m-1] = D_(m); ends with two consecutive trivial terms.
  std::vector<Subgroup> terms;
  // d_values[m-1] = d_(m) with p^{d_(m)} = [D_(m) : D_(m+1)] for m >= 2.
  // d_(1) holds the p-adic valuation of [G : G'], which is not used by any
  // formula and need not be a full exponent when G is not a p-group.
  std::vector<unsigned> d_values;
  bool complete = false;

  // D_(m), taking D_(m) = 1 past the stored terms.
  const Subgroup& term(std::size_t m) const;
  // d_(m), zero past the stored values.
  unsigned d(std::size_t m) const;
  // n with |G'| = p^n.
  unsigned derived_log() const;
};

/// Builds the series from the recursion with group operations only.
/// Throws PreconditionError unless G is nilpotent and G' is a p-group.
DimensionSeries dimension_series_recursive(const GroupPtr& G, std::uint32_t p,
                                           CeilConvention convention = kDefaultConvention);

/// 2 + (p-1) * sum_{m>=1} m d_(m+1). Throws StateError on an incomplete series.
std::uint64_t jennings_upper_index(const DimensionSeries& S);

/// d_(p^i+1) = 1 for 0 <= i < n and d_(j) = 0 for every other j > 1,
/// where |G'| = p^n.
bool maximality_profile(const DimensionSeries& S);

/// |D_(p^i+1)| = p^{n-i} for 0 <= i <= n. Requires maximality_profile(S).
bool corollary_orders_check(const DimensionSeries& S);

struct VanishingViolation {
  std::size_t m;
  int clause;  // 1: m a power of p; 2: p^{l-1} divides m, exp(G') = p^l
};

/// Both vanishing implications for d_(m+1) = 0 along the series; returns
/// every (m, clause) at which D_(m+1) is nevertheless nontrivial.
std::vector<VanishingViolation> shalev_vanishing_check(const DimensionSeries& S);

/// sum_{i<s} m_i p^i < sum_{i<n} p^i. Precondition: s < n, |m| = s,
/// sum m_i = n (InputError otherwise).
bool lemma_num_inequality(std::uint64_t p, std::size_t s, std::size_t n, std::span<const std::uint64_t> m);

}  // namespace lienil
