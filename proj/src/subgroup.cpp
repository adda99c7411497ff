#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "lienil/errors.hpp"
#include "lienil/group_core.hpp"

namespace lienil {

namespace {

// Incrementally maintained closure of a growing generator list.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(const GroupPtr& G) : G_(G), members_(G->order()), list_{G->identity()} {
    members_.insert(G->identity());
  }

  ClosureBuilder(const GroupPtr& G, const Subgroup& start)
      : G_(G), members_(start.members()), list_(start.elements()), gens_(start.generators()) {}

  // Returns true when g was not yet a member (and the closure grew).
  bool add(Element g) {
    if (members_.contains(g)) return false;
    gens_.push_back(g);
    for (std::size_t i = 0; i < list_.size(); ++i) {
      for (Element s : gens_) {
        const Element y = G_->mul(list_[i], s);
        if (!members_.contains(y)) {
          members_.insert(y);
          list_.push_back(y);
        }
      }
    }
    return true;
  }

  const ElementSet& members() const { return members_; }
  std::size_t size() const { return list_.size(); }

  Subgroup finish() && { return Subgroup(G_, std::move(members_), std::move(gens_)); }
  Subgroup finish_with(std::vector<Element> gens) && { return Subgroup(G_, std::move(members_), std::move(gens)); }

 private:
  GroupPtr G_;
  ElementSet members_;
  std::vector<Element> list_;
  std::vector<Element> gens_;
};

// Closure of `elems` keeping only the generators that enlarged the subgroup.
Subgroup reduced_closure(const GroupPtr& G, const std::vector<Element>& elems) {
  ClosureBuilder builder(G);
  for (Element g : elems) builder.add(g);
  return std::move(builder).finish();
}

void require_same_parent(const Subgroup& A, const Subgroup& B, const char* op) {
  if (A.parent() != B.parent()) throw InputError(std::string(op) + ": subgroups belong to different groups");
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, ElementSet members, std::vector<Element> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  order_ = members_.count();
}

Element commutator(const FiniteGroup& G, Element g, Element h) {
  G.check_element(g);
  G.check_element(h);
  return G.mul(G.mul(G.inverse(g), G.inverse(h)), G.mul(g, h));
}

Subgroup whole_group(const GroupPtr& G) {
  ElementSet all(G->order());
  for (Element g = 0; g < G->order(); ++g) all.insert(g);
  return Subgroup(G, std::move(all), G->generators());
}

Subgroup trivial_subgroup(const GroupPtr& G) {
  ElementSet one(G->order());
  one.insert(G->identity());
  return Subgroup(G, std::move(one), {});
}

Subgroup subgroup_closure(const GroupPtr& G, std::span<const Element> seed) {
  ClosureBuilder builder(G);
  std::vector<Element> gens;
  for (Element g : seed) {
    G->check_element(g);
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  for (Element g : gens) builder.add(g);
  return std::move(builder).finish_with(std::move(gens));
}

Subgroup commutator_subgroup(const Subgroup& H, const Subgroup& K) {
  require_same_parent(H, K, "commutator_subgroup");
  const FiniteGroup& G = H.group();
  ClosureBuilder builder(H.parent());
  const auto hs = H.elements();
  const auto ks = K.elements();
  for (Element h : hs)
    for (Element k : ks) builder.add(commutator(G, h, k));
  return std::move(builder).finish();
}

std::vector<Subgroup> lower_central_series(const GroupPtr& G) {
  std::vector<Subgroup> series{whole_group(G)};
  const Subgroup all = series.front();
  while (true) {
    Subgroup next = commutator_subgroup(series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const GroupPtr& G) { return lower_central_series(G).back().is_trivial(); }

bool is_normal(const Subgroup& H) {
  const FiniteGroup& G = H.group();
  for (Element h : H.generators())
    for (Element x : G.generators())
      if (!H.contains(G.mul(G.mul(G.inverse(x), h), x))) return false;
  return true;
}

Subgroup center(const GroupPtr& G) {
  std::vector<Element> z;
  for (Element g = 0; g < G->order(); ++g) {
    bool central = true;
    for (Element x : G->generators()) {
      if (G->mul(g, x) != G->mul(x, g)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(g);
  }
  return reduced_closure(G, z);
}

std::vector<Subgroup> maximal_subgroups(const GroupPtr& G) {
  const std::size_t n = G->order();
  if (n == 1) return {};

  std::vector<Subgroup> cyclics;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Element g = 0; g < n; ++g) {
    if (g == G->identity()) continue;
    Element gen = g;
    Subgroup c = subgroup_closure(G, std::span<const Element>(&gen, 1));
    if (c.order() == n) continue;
    if (seen.insert(c.members()).second) cyclics.push_back(std::move(c));
  }

  // Every proper subgroup is a join of cyclic subgroups.
  std::vector<Subgroup> proper{trivial_subgroup(G)};
  seen.insert(proper.front().members());
  for (const auto& c : cyclics) proper.push_back(c);
  for (std::size_t i = 0; i < proper.size(); ++i) {
    for (const auto& c : cyclics) {
      const Element gen = c.generators().front();
      if (proper[i].contains(gen)) continue;
      ClosureBuilder builder(G, proper[i]);
      builder.add(gen);
      if (builder.size() == n) continue;
      if (seen.contains(builder.members())) continue;
      Subgroup joined = std::move(builder).finish();
      seen.insert(joined.members());
      proper.push_back(std::move(joined));
    }
  }

  std::vector<Subgroup> maximal;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool is_max = true;
    for (std::size_t j = 0; j < proper.size() && is_max; ++j) {
      if (i != j && proper[j].order() > proper[i].order() && proper[i].is_subgroup_of(proper[j])) is_max = false;
    }
    if (is_max) maximal.push_back(proper[i]);
  }
  std::sort(maximal.begin(), maximal.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.elements() < b.elements();
  });
  return maximal;
}

Subgroup frattini_subgroup(const GroupPtr& G) {
  Subgroup result = whole_group(G);
  for (const auto& m : maximal_subgroups(G)) result = intersection(result, m);
  return result;
}

Subgroup frattini_by_powers(const GroupPtr& G) {
  const auto pp = prime_power(G->order());
  if (!pp) throw InputError("frattini_by_powers: group order " + std::to_string(G->order()) + " is not a prime power");
  if (G->order() == 1) return trivial_subgroup(G);
  const Subgroup all = whole_group(G);
  return subgroup_product(commutator_subgroup(all, all), power_subgroup(all, static_cast<std::int64_t>(pp->prime)));
}

Subgroup power_subgroup(const Subgroup& H, std::int64_t k) {
  if (k == 0) throw InputError("power_subgroup: exponent must be positive");
  const FiniteGroup& G = H.group();
  ClosureBuilder builder(H.parent());
  for (Element h : H.elements()) builder.add(G.power(h, k));
  return std::move(builder).finish();
}

Subgroup subgroup_product(const Subgroup& A, const Subgroup& B, std::vector<std::string>* warnings) {
  require_same_parent(A, B, "subgroup_product");
  if (warnings && !is_normal(A) && !is_normal(B))
    warnings->push_back("subgroup_product: neither factor is normal; returning the generated subgroup");
  ClosureBuilder builder(A.parent(), A);
  for (Element b : B.generators()) builder.add(b);
  return std::move(builder).finish();
}

Subgroup intersection(const Subgroup& A, const Subgroup& B) {
  require_same_parent(A, B, "intersection");
  const ElementSet common = A.members().intersect(B.members());
  return reduced_closure(A.parent(), common.to_vector());
}

std::uint64_t exponent(const Subgroup& H) {
  std::uint64_t e = 1;
  for (Element h : H.elements()) e = std::lcm(e, static_cast<std::uint64_t>(H.group().element_order(h)));
  return e;
}

bool is_cyclic(const Subgroup& H) {
  for (Element h : H.elements())
    if (H.group().element_order(h) == H.order()) return true;
  return false;
}

bool is_klein_four(const Subgroup& H) { return H.order() == 4 && !is_cyclic(H); }

bool is_abelian(const Subgroup& H) {
  const FiniteGroup& G = H.group();
  const auto& gens = H.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
  return true;
}

std::size_t minimal_generator_count(const Subgroup& H) {
  const auto pp = prime_power(H.order());
  if (!pp) throw InputError("minimal_generator_count: |H| = " + std::to_string(H.order()) + " is not a prime power");
  if (H.order() == 1) return 0;
  const InducedGroup K = induced_group(H);
  const QuotientGroup Q = quotient(frattini_subgroup(K.group));
  return *log_exact(Q.quotient->order(), pp->prime);
}

InducedGroup induced_group(const Subgroup& H) {
  const FiniteGroup& G = H.group();
  std::vector<Element> elems{G.identity()};
  for (Element h : H.elements())
    if (h != G.identity()) elems.push_back(h);
  std::vector<Element> local(G.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  FiniteGroup::Table t(elems.size(), std::vector<Element>(elems.size()));
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    labels.push_back(G.label(elems[i]));
    for (std::size_t j = 0; j < elems.size(); ++j) t[i][j] = local[G.mul(elems[i], elems[j])];
  }
  return InducedGroup{make_group(t, std::move(labels)), std::move(elems)};
}

QuotientGroup quotient(const Subgroup& N) {
  if (!is_normal(N)) throw InputError("quotient: subgroup is not normal");
  const FiniteGroup& G = N.group();
  const std::size_t n = G.order();
  constexpr Element kUnassigned = ~Element{0};
  std::vector<Element> projection(n, kUnassigned);
  std::vector<Element> reps;
  const auto kernel = N.elements();
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_partition(order.begin(), order.end(), [&](Element g) { return g == G.identity(); });
  for (Element g : order) {
    if (projection[g] != kUnassigned) continue;
    const auto q = static_cast<Element>(reps.size());
    reps.push_back(g);
    for (Element k : kernel) projection[G.mul(g, k)] = q;
  }
  FiniteGroup::Table t(reps.size(), std::vector<Element>(reps.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    labels.push_back(G.label(reps[i]) + "N");
    for (std::size_t j = 0; j < reps.size(); ++j) t[i][j] = projection[G.mul(reps[i], reps[j])];
  }
  return QuotientGroup{make_group(t, std::move(labels)), std::move(projection), N};
}

}  // namespace lienil
