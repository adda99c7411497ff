#include <stdexcept>
#include <string>

#include "lienil/errors.hpp"
#include "lienil/group_algebra.hpp"

namespace lienil {

GroupAlgebra::GroupAlgebra(GroupPtr group, std::uint32_t p) : group_(std::move(group)), p_(p) {
  if (!group_) throw InputError("build_algebra: null group");
  PrimeField validate(p);
}

GroupAlgebra build_algebra(GroupPtr G, std::uint32_t p) { return GroupAlgebra(std::move(G), p); }

void GroupAlgebra::check_vector(const FpVector& x) const {
  if (x.p() != p_ || x.size() != dim())
    throw InputError("vector in F_" + std::to_string(x.p()) + "^" + std::to_string(x.size()) +
                     " is not an element of F_" + std::to_string(p_) + "G with |G| = " + std::to_string(dim()));
}

FpVector GroupAlgebra::basis_vector(Element g) const {
  group_->check_element(g);
  FpVector v(p_, dim());
  v.set(g, 1);
  return v;
}

FpVector GroupAlgebra::multiply(const FpVector& x, const FpVector& y) const {
  check_vector(x);
  check_vector(y);
  const std::size_t n = dim();
  std::vector<std::uint64_t> acc(n, 0);
  for (Element g = 0; g < n; ++g) {
    if (x[g] == 0) continue;
    for (Element h = 0; h < n; ++h) {
      if (y[h] == 0) continue;
      acc[group_->mul(g, h)] += static_cast<std::uint64_t>(x[g]) * y[h];
    }
  }
  FpVector r(p_, n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, static_cast<std::int64_t>(acc[i] % p_));
  return r;
}

FpVector GroupAlgebra::left_mul(Element g, const FpVector& x) const {
  check_vector(x);
  FpVector r(p_, dim());
  auto out = r.data();
  for (Element h = 0; h < dim(); ++h) out[group_->mul(g, h)] = x[h];
  return r;
}

FpVector GroupAlgebra::right_mul(const FpVector& x, Element g) const {
  check_vector(x);
  FpVector r(p_, dim());
  auto out = r.data();
  for (Element h = 0; h < dim(); ++h) out[group_->mul(h, g)] = x[h];
  return r;
}

FpVector GroupAlgebra::lie_bracket(const FpVector& x, const FpVector& y) const {
  return multiply(x, y) - multiply(y, x);
}

FpVector GroupAlgebra::bracket_with_basis(const FpVector& x, Element g) const {
  check_vector(x);
  group_->check_element(g);
  FpVector r(p_, dim());
  auto out = r.data();
  for (Element h = 0; h < dim(); ++h) {
    const Coeff c = x[h];
    if (c == 0) continue;
    const Element hg = group_->mul(h, g);
    const Element gh = group_->mul(g, h);
    if (hg == gh) continue;
    out[hg] = static_cast<Coeff>((out[hg] + c) % p_);
    out[gh] = static_cast<Coeff>((out[gh] + p_ - c) % p_);
  }
  return r;
}

namespace {

FpSubspace saturate(const GroupAlgebra& A, const FpSubspace& S, const std::vector<Element>& multipliers) {
  FpSubspace T = S;
  if (T.dimension() == T.ambient_dim()) return T;
  std::vector<FpVector> work = T.basis();
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (Element g : multipliers) {
      FpVector l = A.left_mul(g, work[i]);
      if (T.insert(l)) work.push_back(std::move(l));
      FpVector r = A.right_mul(work[i], g);
      if (T.insert(r)) work.push_back(std::move(r));
    }
  }
  return T;
}

std::vector<Element> all_elements(const FiniteGroup& G) {
  std::vector<Element> e(G.order());
  for (Element g = 0; g < G.order(); ++g) e[g] = g;
  return e;
}

void check_subspace(const GroupAlgebra& A, const FpSubspace& S) {
  if (S.p() != A.p() || S.ambient_dim() != A.dim()) throw InputError("subspace does not live in this group algebra");
}

void check_steps(std::size_t max_steps) {
  if (max_steps < 1) throw InputError("max_steps must be at least 1");
}

}  // namespace

// Closure under multiplication by the generators of G suffices: the
// stabilizer of a subspace is a submonoid, hence a subgroup in a finite group.
FpSubspace ideal_closure(const GroupAlgebra& A, const FpSubspace& S) {
  check_subspace(A, S);
  return saturate(A, S, A.group()->generators());
}

FpSubspace ideal_closure_full(const GroupAlgebra& A, const FpSubspace& S) {
  check_subspace(A, S);
  return saturate(A, S, all_elements(*A.group()));
}

bool is_ideal(const GroupAlgebra& A, const FpSubspace& S) {
  check_subspace(A, S);
  for (const auto& v : S.basis())
    for (Element g = 0; g < A.dim(); ++g)
      if (!S.contains(A.left_mul(g, v)) || !S.contains(A.right_mul(v, g))) return false;
  return true;
}

std::string_view to_string(ChainStatus status) {
  switch (status) {
    case ChainStatus::nilpotent:
      return "nilpotent";
    case ChainStatus::stabilized:
      return "stabilized";
    case ChainStatus::bound_exceeded:
      return "exceeds bound";
  }
  return "?";
}

std::vector<std::size_t> LiePowerChain::dimensions() const {
  std::vector<std::size_t> d;
  d.reserve(terms.size());
  for (const auto& t : terms) d.push_back(t.dimension());
  return d;
}

std::size_t default_max_steps(const GroupAlgebra& A) {
  const Subgroup all = whole_group(A.group());
  return commutator_subgroup(all, all).order() + 2;
}

LiePowerChain lower_lie_chain(const GroupAlgebra& A, std::size_t max_steps) {
  check_steps(max_steps);
  const std::size_t n = A.dim();
  LiePowerChain chain{ChainKind::lower, {FpSubspace::full(A.p(), n)}, ChainStatus::bound_exceeded, std::nullopt};
  FpSubspace commutators = chain.terms.front();
  for (std::size_t step = 2; step <= max_steps; ++step) {
    FpSubspace next(A.p(), n);
    for (const auto& v : commutators.basis())
      for (Element g = 0; g < n; ++g) next.insert(A.bracket_with_basis(v, g));
    chain.terms.push_back(ideal_closure(A, next));
    if (next.is_zero()) {
      chain.status = ChainStatus::nilpotent;
      chain.nilpotency_index = step;
      break;
    }
    if (next == commutators) {
      chain.status = ChainStatus::stabilized;
      break;
    }
    commutators = std::move(next);
  }
  return chain;
}

LiePowerChain lower_lie_chain(const GroupAlgebra& A) { return lower_lie_chain(A, default_max_steps(A)); }

// [v, e_{gh}] = [v, e_g] e_h + e_g [v, e_h], so brackets with the generators
// of G generate the same ideal as brackets with all of G.
LiePowerChain upper_lie_chain(const GroupAlgebra& A, std::size_t max_steps) {
  check_steps(max_steps);
  const std::size_t n = A.dim();
  LiePowerChain chain{ChainKind::upper, {FpSubspace::full(A.p(), n)}, ChainStatus::bound_exceeded, std::nullopt};
  const auto& gens = A.group()->generators();
  for (std::size_t step = 2; step <= max_steps; ++step) {
    const FpSubspace& prev = chain.terms.back();
    FpSubspace seeds(A.p(), n);
    for (const auto& v : prev.basis())
      for (Element g : gens) seeds.insert(A.bracket_with_basis(v, g));
    FpSubspace next = ideal_closure(A, seeds);
    const bool zero = next.is_zero();
    const bool stable = next == prev;
    chain.terms.push_back(std::move(next));
    if (zero) {
      chain.status = ChainStatus::nilpotent;
      chain.nilpotency_index = step;
      break;
    }
    if (stable) {
      chain.status = ChainStatus::stabilized;
      break;
    }
  }
  return chain;
}

LiePowerChain upper_lie_chain(const GroupAlgebra& A) { return upper_lie_chain(A, default_max_steps(A)); }

Subgroup dimension_subgroup_oracle(const GroupAlgebra& A, const LiePowerChain& upper, std::size_t m) {
  if (m < 1) throw InputError("dimension_subgroup_oracle: m must be positive");
  if (upper.kind != ChainKind::upper) throw InputError("dimension_subgroup_oracle: needs the upper Lie power chain");
  const GroupPtr& G = A.group();
  if (m > upper.terms.size()) {
    if (upper.status == ChainStatus::nilpotent) return trivial_subgroup(G);
    throw StateError("dimension_subgroup_oracle: upper chain has only " + std::to_string(upper.terms.size()) +
                     " terms, need " + std::to_string(m));
  }
  const FpSubspace& term = upper.terms[m - 1];
  const FpVector one = A.one();
  std::vector<Element> members;
  for (Element g = 0; g < G->order(); ++g)
    if (term.contains(A.basis_vector(g) - one)) members.push_back(g);
  Subgroup result = subgroup_closure(G, members);
  if (result.order() != members.size())
    throw std::logic_error("dimension_subgroup_oracle: G n (1 + R^(m)) is not closed under multiplication");
  return result;
}

std::vector<Subgroup> dimension_series_oracle(const GroupAlgebra& A, const LiePowerChain& upper) {
  std::vector<Subgroup> series;
  for (std::size_t m = 1;; ++m) {
    series.push_back(dimension_subgroup_oracle(A, upper, m));
    if (series.back().is_trivial()) break;
  }
  return series;
}

}  // namespace lienil
