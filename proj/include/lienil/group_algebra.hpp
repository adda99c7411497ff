#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lienil/fp_linear.hpp"
#include "lienil/group_core.hpp"

namespace lienil {

// The group algebra F_p G. Elements are coefficient vectors indexed by group
// elements; e_g * e_h = e_{gh}.
class GroupAlgebra {
 public:
  GroupAlgebra(GroupPtr group, std::uint32_t p);

  const GroupPtr& group() const { return group_; }
  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return group_->order(); }

  FpVector zero() const { return FpVector(p_, dim()); }
  FpVector basis_vector(Element g) const;
  FpVector one() const { return basis_vector(group_->identity()); }

  FpVector multiply(const FpVector& x, const FpVector& y) const;
  // e_g * x and x * e_g, which only permute coordinates.
  FpVector left_mul(Element g, const FpVector& x) const;
  FpVector right_mul(const FpVector& x, Element g) const;

  /// xy - yx.
  FpVector lie_bracket(const FpVector& x, const FpVector& y) const;
  /// x e_g - e_g x.
  FpVector bracket_with_basis(const FpVector& x, Element g) const;

  void check_vector(const FpVector& x) const;

 private:
  GroupPtr group_;
  std::uint32_t p_;
};

GroupAlgebra build_algebra(GroupPtr G, std::uint32_t p);

/// Smallest two-sided ideal containing S.
FpSubspace ideal_closure(const GroupAlgebra& A, const FpSubspace& S);

/// Same ideal, saturating with every e_g instead of the generators of G.
/// Slower; kept as an independent route for cross-checks.
FpSubspace ideal_closure_full(const GroupAlgebra& A, const FpSubspace& S);

/// True iff S is closed under left and right multiplication by every e_g.
bool is_ideal(const GroupAlgebra& A, const FpSubspace& S);

enum class ChainKind { lower, upper };

enum class ChainStatus {
  nilpotent,       // reached the zero ideal
  stabilized,      // reached a nonzero fixed point; never becomes zero
  bound_exceeded,  // neither within max_steps
};

std::string_view to_string(ChainStatus status);

// Lower (R^[n]) or upper (R^(n)) Lie powers of KG; terms[n-1] is the n-th
// power and terms[0] = KG.
struct LiePowerChain {
  ChainKind kind;
  std::vector<FpSubspace> terms;
  ChainStatus status;
  // Set iff status == nilpotent: the least n with terms[n-1] = 0.
  std::optional<std::size_t> nilpotency_index;

  std::vector<std::size_t> dimensions() const;
};

/// |G'| + 2, enough for every Lie nilpotent group algebra.
std::size_t default_max_steps(const GroupAlgebra& A);

/// R^[n] = ideal generated by the left-normed commutators of length n. The
/// commutator spans are V_1 = KG, V_n = span{[v, e_g] : v in V_{n-1}, g in G}.
LiePowerChain lower_lie_chain(const GroupAlgebra& A, std::size_t max_steps);
LiePowerChain lower_lie_chain(const GroupAlgebra& A);

/// R^(n) = ideal generated by [R^(n-1), KG].
LiePowerChain upper_lie_chain(const GroupAlgebra& A, std::size_t max_steps);
LiePowerChain upper_lie_chain(const GroupAlgebra& A);

/// G n (1 + R^(m)): all g with e_g - e_1 in the m-th upper Lie power.
/// Beyond the end of a nilpotent chain the power is zero; for a chain that
/// stops earlier for any other reason a StateError is thrown.
Subgroup dimension_subgroup_oracle(const GroupAlgebra& A, const LiePowerChain& upper, std::size_t m);

/// Oracle terms for m = 1, 2, ... up to and including the first trivial one.
std::vector<Subgroup> dimension_series_oracle(const GroupAlgebra& A, const LiePowerChain& upper);

}  // namespace lienil
