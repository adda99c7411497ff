#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lienil/element_set.hpp"

namespace lienil {

// A finite group given by its full Cayley table. Immutable once built.
//
// The constructor validates the table: every row and column is a permutation,
// a two-sided identity exists, and the product is associative (exhaustively
// for order <= 256, by 10^5 random triples above that).
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<Element>>;

  explicit FiniteGroup(const Table& table, std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }

  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element power(Element g, std::int64_t k) const;
  std::size_t element_order(Element g) const { return element_orders_[g]; }

  // Small generating set, chosen greedily by decreasing element order.
  const std::vector<Element>& generators() const { return generators_; }

  const std::string& label(Element g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Throws InputError when g is not a valid element index.
  void check_element(Element g) const;

  Table table() const;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_orders_;
  std::vector<Element> generators_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(const FiniteGroup::Table& table, std::vector<std::string> labels = {});

// A subgroup of a FiniteGroup: a membership bitset plus a generating list.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, ElementSet members, std::vector<Element> generators);

  const GroupPtr& parent() const { return parent_; }
  const FiniteGroup& group() const { return *parent_; }
  const ElementSet& members() const { return members_; }
  const std::vector<Element>& generators() const { return generators_; }
  std::vector<Element> elements() const { return members_.to_vector(); }

  std::size_t order() const { return order_; }
  bool contains(Element g) const { return members_.contains(g); }
  bool is_trivial() const { return order_ == 1; }
  bool is_subgroup_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  ElementSet members_;
  std::vector<Element> generators_;
  std::size_t order_;
};

// G/N together with the projection G -> G/N.
struct QuotientGroup {
  GroupPtr quotient;
  std::vector<Element> projection;
  Subgroup kernel;
};

// A subgroup re-indexed as a group in its own right.
struct InducedGroup {
  GroupPtr group;
  std::vector<Element> to_parent;
};

/// g^-1 h^-1 g h.
Element commutator(const FiniteGroup& G, Element g, Element h);

Subgroup whole_group(const GroupPtr& G);
Subgroup trivial_subgroup(const GroupPtr& G);

/// Smallest subgroup containing `seed`. The generator list is the seed with
/// duplicates removed; an empty seed yields the trivial subgroup.
Subgroup subgroup_closure(const GroupPtr& G, std::span<const Element> seed);

/// Closure of all (h,k) with h in H, k in K.
Subgroup commutator_subgroup(const Subgroup& H, const Subgroup& K);

/// [gamma_1 = G, gamma_2, ...] until the series stabilizes; the stable term
/// appears once. G is nilpotent iff the last entry is trivial.
std::vector<Subgroup> lower_central_series(const GroupPtr& G);

bool is_nilpotent(const GroupPtr& G);
bool is_normal(const Subgroup& H);
Subgroup center(const GroupPtr& G);

/// Every maximal subgroup of G, found by enumerating joins of cyclic
/// subgroups. Intended for small groups.
std::vector<Subgroup> maximal_subgroups(const GroupPtr& G);

/// Intersection of all maximal subgroups.
Subgroup frattini_subgroup(const GroupPtr& G);

/// G' * G^p; equals the Frattini subgroup when G is a p-group.
/// Throws InputError when |G| is not a prime power.
Subgroup frattini_by_powers(const GroupPtr& G);

/// Closure of { h^k : h in H }. k = 0 is an input error.
Subgroup power_subgroup(const Subgroup& H, std::int64_t k);

/// Closure of { ab : a in A, b in B }. When neither factor is normal the
/// closure is still returned and a warning is appended to `warnings`.
Subgroup subgroup_product(const Subgroup& A, const Subgroup& B,
                          std::vector<std::string>* warnings = nullptr);

Subgroup intersection(const Subgroup& A, const Subgroup& B);

/// lcm of the element orders of H.
std::uint64_t exponent(const Subgroup& H);

bool is_cyclic(const Subgroup& H);
bool is_klein_four(const Subgroup& H);
bool is_abelian(const Subgroup& H);

/// Rank of H / Phi(H) for a p-group H. Throws InputError otherwise.
std::size_t minimal_generator_count(const Subgroup& H);

InducedGroup induced_group(const Subgroup& H);

/// Throws InputError when N is not normal in its parent.
QuotientGroup quotient(const Subgroup& N);

// n = p^k with p prime; nullopt otherwise. n = 1 yields {1, 0}.
struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
std::optional<PrimePower> prime_power(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// log_p(n) when n is a power of p (including p^0 = 1), nullopt otherwise.
std::optional<unsigned> log_exact(std::uint64_t n, std::uint64_t p);

}  // namespace lienil
