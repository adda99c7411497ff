#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lienil/group_core.hpp"

namespace lienil {

enum class GroupKind {
  cyclic,
  dihedral,
  quaternion,
  semidihedral,
  modular,
  direct_product,
  semidirect_product,
  raw_table,
};

std::string_view to_string(GroupKind kind);

// Action of H on N for a semidirect product: for each listed generator of H,
// the images of `normal_generators` under the automorphism it induces.
struct SemidirectAction {
  std::vector<Element> normal_generators;
  std::vector<std::pair<Element, std::vector<Element>>> images;
};

struct GroupSpec {
  GroupKind kind = GroupKind::raw_table;
  std::string name;
  // cyclic: the order; the four 2-group families: n with order 2^n.
  unsigned n = 0;
  // direct_product: all factors, multiplied left to right.
  // semidirect_product: {N, H}.
  std::vector<GroupSpec> factors;
  SemidirectAction action;
  FiniteGroup::Table table;
  std::vector<std::string> labels;
};

GroupSpec cyclic_spec(unsigned order);
// Order 2^n; InputError for n below 3 (D, Q) or 4 (SD, MD).
GroupSpec dihedral_spec(unsigned n);
GroupSpec quaternion_spec(unsigned n);
GroupSpec semidihedral_spec(unsigned n);
GroupSpec modular_spec(unsigned n);
GroupSpec direct_product_spec(std::vector<GroupSpec> factors);
GroupSpec semidirect_spec(GroupSpec normal, GroupSpec acting, SemidirectAction action, std::string name);
GroupSpec raw_spec(std::string name, FiniteGroup::Table table, std::vector<std::string> labels = {});

// Index of the element with the given exponents on the standard generators
// of C_{o_1} x ... x C_{o_k} as built by direct_product_spec.
Element abelian_element(std::span<const unsigned> orders, std::span<const unsigned> exponents);

/// Cayley table for the spec. For the 2-group families the defining
/// relations are re-verified on the finished table. Throws InputError on
/// out-of-range parameters.
GroupPtr build(const GroupSpec& spec);

/// <a, b | a^k = 1, b^2 = a^j, a^b = a^e> on the normal forms a^i b^s.
/// Throws InputError unless the relations admit all 2k normal forms.
GroupPtr build_metacyclic(unsigned k, unsigned j, std::int64_t e);

/// Pairs (n, h) with (n1, h1)(n2, h2) = (n1 * act(h1)(n2), h1 h2), indexed
/// n * |H| + h. Throws InputError when an image is not an automorphism of N
/// or the assignment is incompatible with the relations of H.
GroupPtr semidirect_product(const GroupPtr& N, const GroupPtr& H, const SemidirectAction& action);
GroupPtr semidirect_product(const GroupSpec& N_spec, const GroupSpec& H_spec, const SemidirectAction& action);

GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B);

/// The homomorphism source -> target sending gens[i] to images[i], if one
/// exists. gens must generate source.
std::optional<std::vector<Element>> extend_homomorphism(const FiniteGroup& source, std::span<const Element> gens,
                                                        std::span<const Element> images, const FiniteGroup& target);

// Named corpus extensions.
GroupSpec heisenberg_spec(unsigned q);  // (C_q x C_q) : C_q, order q^3
GroupSpec m27_spec();                   // C9 : C3 with a -> a^4
GroupSpec wreath_c3_spec();             // C3 wr C3, order 81
GroupSpec symmetric3_spec();            // C3 : C2
GroupSpec frobenius21_spec();           // C7 : C3

// Isomorphism invariants used to deduplicate sweep output. Equal
// fingerprints do not imply isomorphism.
struct Fingerprint {
  std::size_t order;
  std::vector<std::size_t> lower_central_orders;
  std::map<std::size_t, std::size_t> element_orders;
  std::size_t center_order;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const GroupPtr& G);

// Abelian-by-cyclic 2-groups N : C_k of order <= max_order, over all
// automorphisms of N of order dividing k.
struct WitnessSweep {
  // G' = C2 x C2 and gamma_3(G) != 1.
  std::vector<GroupSpec> witnesses;
  // G' = C2 x C2 and gamma_3(G) = 1.
  std::vector<GroupSpec> class_two_klein;
  std::size_t candidates = 0;
};

WitnessSweep klein_witness_sweep(std::size_t max_order = 64);

// Cached result of klein_witness_sweep(64).
const WitnessSweep& default_witness_sweep();

struct CorpusEntry {
  GroupSpec spec;
  std::uint32_t p;
  // Deliberately not Lie nilpotent.
  bool negative_control = false;
};

std::vector<CorpusEntry> standard_corpus();

/// Parses canonical names: C12, D16, Q8, SD16, MD32, S3, He3, He4, He5, M27,
/// C3wrC3, C7:C3, products joined by 'x' (C4xC2, C2xD8, D8xD8) and the
/// names of sweep witnesses. Throws InputError for anything else.
GroupSpec parse_named(std::string_view name);

}  // namespace lienil
