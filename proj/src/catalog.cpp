#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <string>

#include "lienil/catalog.hpp"
#include "lienil/errors.hpp"

namespace lienil {

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::cyclic:
      return "cyclic";
    case GroupKind::dihedral:
      return "dihedral";
    case GroupKind::quaternion:
      return "quaternion";
    case GroupKind::semidihedral:
      return "semidihedral";
    case GroupKind::modular:
      return "modular";
    case GroupKind::direct_product:
      return "direct_product";
    case GroupKind::semidirect_product:
      return "semidirect_product";
    case GroupKind::raw_table:
      return "raw_table";
  }
  return "?";
}

namespace {

std::string power_label(const char* base, std::int64_t i) {
  if (i == 0) return "";
  if (i == 1) return base;
  return std::string(base) + "^" + std::to_string(i);
}

void require_family_n(unsigned n, unsigned min_n, const char* symbol) {
  if (n < min_n)
    throw InputError(std::string(symbol) + "_{2^n} requires n >= " + std::to_string(min_n) + ", got n = " +
                     std::to_string(n));
  if (n > 10) throw InputError(std::string(symbol) + "_{2^n}: n = " + std::to_string(n) + " is too large");
}

GroupSpec family_spec(GroupKind kind, const char* prefix, unsigned n, unsigned min_n) {
  require_family_n(n, min_n, prefix);
  GroupSpec s;
  s.kind = kind;
  s.n = n;
  s.name = std::string(prefix) + std::to_string(1U << n);
  return s;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

GroupPtr build_family(const GroupSpec& spec) {
  const unsigned n = spec.n;
  std::int64_t k = 0, j = 0, e = 0;
  switch (spec.kind) {
    case GroupKind::dihedral:
      require_family_n(spec.n, 3, "D");
      k = std::int64_t{1} << (n - 1);
      e = -1;
      break;
    case GroupKind::quaternion:
      require_family_n(spec.n, 3, "Q");
      k = std::int64_t{1} << (n - 1);
      j = std::int64_t{1} << (n - 2);
      e = -1;
      break;
    case GroupKind::semidihedral:
      require_family_n(spec.n, 4, "SD");
      k = std::int64_t{1} << (n - 1);
      e = -1 + (std::int64_t{1} << (n - 2));
      break;
    case GroupKind::modular:
      require_family_n(spec.n, 4, "MD");
      k = std::int64_t{1} << (n - 1);
      e = 1 + (std::int64_t{1} << (n - 2));
      break;
    default:
      throw std::logic_error("build_family: not a 2-group family");
  }
  GroupPtr G = build_metacyclic(static_cast<unsigned>(k), static_cast<unsigned>(j), e);

  // Re-check the defining relations on the finished table.
  const Element a = 1;
  const auto b = static_cast<Element>(k);
  const bool ok = G->order() == static_cast<std::size_t>(2 * k) &&
                  G->element_order(a) == static_cast<std::size_t>(k) && G->mul(b, b) == G->power(a, j) &&
                  G->mul(G->mul(G->inverse(b), a), b) == G->power(a, e);
  if (!ok) throw std::logic_error("defining relations fail for " + spec.name);
  return G;
}

}  // namespace

GroupSpec cyclic_spec(unsigned order) {
  GroupSpec s;
  s.kind = GroupKind::cyclic;
  s.n = order;
  s.name = "C" + std::to_string(order);
  return s;
}

GroupSpec dihedral_spec(unsigned n) { return family_spec(GroupKind::dihedral, "D", n, 3); }
GroupSpec quaternion_spec(unsigned n) { return family_spec(GroupKind::quaternion, "Q", n, 3); }
GroupSpec semidihedral_spec(unsigned n) { return family_spec(GroupKind::semidihedral, "SD", n, 4); }
GroupSpec modular_spec(unsigned n) { return family_spec(GroupKind::modular, "MD", n, 4); }

GroupSpec direct_product_spec(std::vector<GroupSpec> factors) {
  if (factors.empty()) throw InputError("direct product needs at least one factor");
  if (factors.size() == 1) return std::move(factors.front());
  GroupSpec s;
  s.kind = GroupKind::direct_product;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s.name += "x";
    s.name += factors[i].name;
  }
  s.factors = std::move(factors);
  return s;
}

GroupSpec semidirect_spec(GroupSpec normal, GroupSpec acting, SemidirectAction action, std::string name) {
  GroupSpec s;
  s.kind = GroupKind::semidirect_product;
  s.name = std::move(name);
  s.factors = {std::move(normal), std::move(acting)};
  s.action = std::move(action);
  return s;
}

GroupSpec raw_spec(std::string name, FiniteGroup::Table table, std::vector<std::string> labels) {
  GroupSpec s;
  s.kind = GroupKind::raw_table;
  s.name = std::move(name);
  s.table = std::move(table);
  s.labels = std::move(labels);
  return s;
}

Element abelian_element(std::span<const unsigned> orders, std::span<const unsigned> exponents) {
  if (orders.size() != exponents.size()) throw InputError("abelian_element: length mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + exponents[i] % orders[i];
  return static_cast<Element>(idx);
}

GroupPtr build_metacyclic(unsigned k, unsigned j, std::int64_t e) {
  if (k == 0) throw InputError("a^k = 1 requires k >= 1");
  const auto K = static_cast<std::int64_t>(k);
  const std::int64_t ee = mod(e, K);
  const std::int64_t jj = mod(j, K);
  if (std::gcd(ee, K) != 1 && K > 1) throw InputError("a -> a^" + std::to_string(e) + " is not an automorphism of <a>");
  if (mod(ee * ee, K) != 1 % K)
    throw InputError("conjugation by b must square to the identity on <a>: e^2 != 1 mod " + std::to_string(k));
  if (mod(jj * (ee - 1), K) != 0)
    throw InputError("b^2 = a^" + std::to_string(j) + " does not commute with b under a^b = a^" + std::to_string(e));

  const std::size_t n = 2 * k;
  auto index = [&](std::int64_t i, std::int64_t s) { return static_cast<Element>(s * K + mod(i, K)); };
  FiniteGroup::Table t(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (std::int64_t s = 0; s < 2; ++s) {
    for (std::int64_t i = 0; i < K; ++i) {
      std::string l = power_label("a", i);
      if (s == 1) l += l.empty() ? "b" : "·b";
      labels[index(i, s)] = l.empty() ? "1" : l;
      for (std::int64_t u = 0; u < 2; ++u) {
        for (std::int64_t r = 0; r < K; ++r) {
          std::int64_t ni = i + r * (s ? ee : 1);
          std::int64_t ns = s + u;
          if (ns == 2) {
            ns = 0;
            ni += jj;
          }
          t[index(i, s)][index(r, u)] = index(ni, ns);
        }
      }
    }
  }
  return make_group(t, std::move(labels));
}

GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B) {
  const std::size_t na = A->order(), nb = B->order(), n = na * nb;
  FiniteGroup::Table t(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (Element a1 = 0; a1 < na; ++a1)
    for (Element b1 = 0; b1 < nb; ++b1) {
      const std::size_t x = a1 * nb + b1;
      labels[x] = "(" + A->label(a1) + "," + B->label(b1) + ")";
      for (Element a2 = 0; a2 < na; ++a2)
        for (Element b2 = 0; b2 < nb; ++b2)
          t[x][a2 * nb + b2] = static_cast<Element>(A->mul(a1, a2) * nb + B->mul(b1, b2));
    }
  return make_group(t, std::move(labels));
}

std::optional<std::vector<Element>> extend_homomorphism(const FiniteGroup& source, std::span<const Element> gens,
                                                        std::span<const Element> images, const FiniteGroup& target) {
  if (gens.size() != images.size()) throw InputError("extend_homomorphism: generator/image count mismatch");
  for (Element g : gens) source.check_element(g);
  for (Element g : images) target.check_element(g);
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> map(source.order(), kUnset);
  map[source.identity()] = target.identity();
  std::vector<Element> queue{source.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Element x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = source.mul(x, gens[i]);
      const Element v = target.mul(map[x], images[i]);
      if (map[y] == kUnset) {
        map[y] = v;
        queue.push_back(y);
      } else if (map[y] != v) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != source.order()) throw InputError("extend_homomorphism: listed elements do not generate the group");
  return map;
}

GroupPtr semidirect_product(const GroupPtr& N, const GroupPtr& H, const SemidirectAction& action) {
  const std::size_t nn = N->order(), nh = H->order();
  std::vector<std::pair<Element, std::vector<Element>>> autos;
  for (const auto& [h, imgs] : action.images) {
    H->check_element(h);
    if (imgs.size() != action.normal_generators.size())
      throw InputError("semidirect action: expected " + std::to_string(action.normal_generators.size()) + " images");
    auto hom = extend_homomorphism(*N, action.normal_generators, imgs, *N);
    if (!hom) throw InputError("semidirect action of " + H->label(h) + " is not a homomorphism of N");
    std::vector<bool> hit(nn, false);
    for (Element x : *hom) hit[x] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
      throw InputError("semidirect action of " + H->label(h) + " is not bijective");
    autos.emplace_back(h, std::move(*hom));
  }

  // phi(h x) = phi(h) o phi(x) along every edge of the Cayley graph of H.
  std::vector<std::vector<Element>> phi(nh);
  std::vector<Element> id(nn);
  std::iota(id.begin(), id.end(), Element{0});
  phi[H->identity()] = id;
  std::vector<Element> queue{H->identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Element h = queue[q];
    for (const auto& [x, ax] : autos) {
      const Element hx = H->mul(h, x);
      std::vector<Element> comp(nn);
      for (Element v = 0; v < nn; ++v) comp[v] = phi[h][ax[v]];
      if (phi[hx].empty()) {
        phi[hx] = std::move(comp);
        queue.push_back(hx);
      } else if (phi[hx] != comp) {
        throw InputError("semidirect action is incompatible with the relations of H");
      }
    }
  }
  if (queue.size() != nh) throw InputError("semidirect action: listed elements do not generate H");

  const std::size_t n = nn * nh;
  FiniteGroup::Table t(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (Element n1 = 0; n1 < nn; ++n1)
    for (Element h1 = 0; h1 < nh; ++h1) {
      const std::size_t x = n1 * nh + h1;
      labels[x] = "(" + N->label(n1) + "," + H->label(h1) + ")";
      for (Element n2 = 0; n2 < nn; ++n2)
        for (Element h2 = 0; h2 < nh; ++h2)
          t[x][n2 * nh + h2] = static_cast<Element>(N->mul(n1, phi[h1][n2]) * nh + H->mul(h1, h2));
    }
  return make_group(t, std::move(labels));
}

GroupPtr semidirect_product(const GroupSpec& N_spec, const GroupSpec& H_spec, const SemidirectAction& action) {
  return semidirect_product(build(N_spec), build(H_spec), action);
}

GroupPtr build(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::cyclic: {
      const unsigned n = spec.n;
      if (n == 0) throw InputError("C_n requires n >= 1");
      FiniteGroup::Table t(n, std::vector<Element>(n));
      std::vector<std::string> labels(n);
      for (unsigned i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "1" : power_label("g", i);
        for (unsigned j = 0; j < n; ++j) t[i][j] = (i + j) % n;
      }
      return make_group(t, std::move(labels));
    }
    case GroupKind::dihedral:
    case GroupKind::quaternion:
    case GroupKind::semidihedral:
    case GroupKind::modular:
      return build_family(spec);
    case GroupKind::direct_product: {
      if (spec.factors.empty()) throw InputError("direct product without factors");
      GroupPtr G = build(spec.factors.front());
      for (std::size_t i = 1; i < spec.factors.size(); ++i) G = direct_product(G, build(spec.factors[i]));
      return G;
    }
    case GroupKind::semidirect_product:
      if (spec.factors.size() != 2) throw InputError("semidirect product needs exactly two factors");
      return semidirect_product(spec.factors[0], spec.factors[1], spec.action);
    case GroupKind::raw_table:
      return make_group(spec.table, spec.labels);
  }
  throw std::logic_error("unknown group kind");
}

namespace {

GroupSpec abelian_spec(const std::vector<unsigned>& orders) {
  std::vector<GroupSpec> f;
  for (unsigned o : orders) f.push_back(cyclic_spec(o));
  return direct_product_spec(std::move(f));
}

std::vector<Element> abelian_generators(const std::vector<unsigned>& orders) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<unsigned> e(orders.size(), 0);
    e[i] = 1;
    gens.push_back(abelian_element(orders, e));
  }
  return gens;
}

std::string parenthesized(const std::string& name) {
  return name.find('x') == std::string::npos ? name : "(" + name + ")";
}

}  // namespace

GroupSpec heisenberg_spec(unsigned q) {
  if (q < 2) throw InputError("He_q requires q >= 2");
  const std::vector<unsigned> orders{q, q};
  const auto gens = abelian_generators(orders);
  const std::vector<unsigned> xz{1, 1};
  SemidirectAction action{gens, {{1, {abelian_element(orders, xz), gens[1]}}}};
  return semidirect_spec(abelian_spec(orders), cyclic_spec(q), action, "He" + std::to_string(q));
}

GroupSpec m27_spec() {
  return semidirect_spec(cyclic_spec(9), cyclic_spec(3), SemidirectAction{{1}, {{1, {4}}}}, "M27");
}

GroupSpec wreath_c3_spec() {
  const std::vector<unsigned> orders{3, 3, 3};
  const auto e = abelian_generators(orders);
  SemidirectAction action{e, {{1, {e[1], e[2], e[0]}}}};
  return semidirect_spec(abelian_spec(orders), cyclic_spec(3), action, "C3wrC3");
}

GroupSpec symmetric3_spec() {
  return semidirect_spec(cyclic_spec(3), cyclic_spec(2), SemidirectAction{{1}, {{1, {2}}}}, "S3");
}

GroupSpec frobenius21_spec() {
  return semidirect_spec(cyclic_spec(7), cyclic_spec(3), SemidirectAction{{1}, {{1, {2}}}}, "C7:C3");
}

Fingerprint fingerprint(const GroupPtr& G) {
  Fingerprint f{G->order(), {}, {}, center(G).order()};
  for (const auto& t : lower_central_series(G)) f.lower_central_orders.push_back(t.order());
  for (Element g = 0; g < G->order(); ++g) ++f.element_orders[G->element_order(g)];
  return f;
}

WitnessSweep klein_witness_sweep(std::size_t max_order) {
  struct Candidate {
    std::vector<unsigned> normal;
    unsigned acting;
  };
  static const std::vector<Candidate> kCandidates = {
      {{4, 4}, 2},    {{8, 2}, 2},       {{4, 2, 2}, 2}, {{2, 2, 2, 2}, 2}, {{2, 2, 2}, 4},
      {{4, 2}, 4},    {{4, 4}, 4},       {{8, 4}, 2},    {{4, 4, 2}, 2},    {{4, 2, 2}, 4},
  };

  WitnessSweep result;
  std::set<Fingerprint> seen;
  for (const auto& cand : kCandidates) {
    const std::size_t nn = std::accumulate(cand.normal.begin(), cand.normal.end(), std::size_t{1},
                                           [](std::size_t a, unsigned b) { return a * b; });
    if (nn * cand.acting > max_order) continue;
    const GroupSpec N_spec = abelian_spec(cand.normal);
    const GroupPtr N = build(N_spec);
    const auto gens = abelian_generators(cand.normal);
    const std::string base = parenthesized(N_spec.name) + ":C" + std::to_string(cand.acting);

    std::vector<std::vector<Element>> options(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (Element x = 0; x < nn; ++x)
        if (cand.normal[i] % N->element_order(x) == 0) options[i].push_back(x);

    std::vector<std::size_t> pick(gens.size(), 0);
    std::size_t auto_index = 0;
    while (true) {
      std::vector<Element> images(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i) images[i] = options[i][pick[i]];
      if (auto hom = extend_homomorphism(*N, gens, images, *N)) {
        std::vector<bool> hit(nn, false);
        for (Element x : *hom) hit[x] = true;
        const bool bijective = std::find(hit.begin(), hit.end(), false) == hit.end();
        std::vector<Element> power = *hom;
        for (unsigned k = 1; k < cand.acting; ++k)
          for (auto& v : power) v = (*hom)[v];
        bool identity = true;
        for (Element x = 0; x < nn && identity; ++x) identity = (*hom)[x] == x;
        bool order_divides = true;
        for (Element x = 0; x < nn && order_divides; ++x) order_divides = power[x] == x;
        if (bijective && order_divides && !identity) {
          ++auto_index;
          ++result.candidates;
          GroupSpec spec = semidirect_spec(N_spec, cyclic_spec(cand.acting), SemidirectAction{gens, {{1, images}}},
                                           base + "#" + std::to_string(auto_index));
          const GroupPtr G = build(spec);
          const auto lcs = lower_central_series(G);
          if (lcs.size() > 1 && is_klein_four(lcs[1]) && seen.insert(fingerprint(G)).second) {
            const bool class3 = lcs.size() > 2 && !lcs[2].is_trivial();
            (class3 ? result.witnesses : result.class_two_klein).push_back(std::move(spec));
          }
        }
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return result;
}

const WitnessSweep& default_witness_sweep() {
  static const WitnessSweep sweep = klein_witness_sweep(64);
  return sweep;
}

std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> c;
  auto add = [&](GroupSpec s, std::uint32_t p, bool negative = false) { c.push_back({std::move(s), p, negative}); };

  for (unsigned n = 1; n <= 16; ++n) {
    std::uint32_t p = 2;
    if (n > 1)
      while (n % p != 0) ++p;
    add(cyclic_spec(n), p);
  }
  add(direct_product_spec({cyclic_spec(4), cyclic_spec(2)}), 2);
  add(direct_product_spec({cyclic_spec(3), cyclic_spec(3)}), 3);

  for (unsigned n = 3; n <= 5; ++n) {
    add(dihedral_spec(n), 2);
    add(quaternion_spec(n), 2);
  }
  for (unsigned n = 4; n <= 5; ++n) {
    add(semidihedral_spec(n), 2);
    add(modular_spec(n), 2);
  }
  add(direct_product_spec({cyclic_spec(2), dihedral_spec(3)}), 2);
  add(direct_product_spec({cyclic_spec(2), quaternion_spec(3)}), 2);
  add(direct_product_spec({cyclic_spec(3), dihedral_spec(3)}), 2);
  add(direct_product_spec({dihedral_spec(3), dihedral_spec(3)}), 2);
  add(heisenberg_spec(4), 2);

  add(heisenberg_spec(3), 3);
  add(m27_spec(), 3);
  add(direct_product_spec({cyclic_spec(2), heisenberg_spec(3)}), 3);
  add(wreath_c3_spec(), 3);
  add(heisenberg_spec(5), 5);

  const WitnessSweep& sweep = default_witness_sweep();
  for (const auto& w : sweep.witnesses) add(w, 2);
  for (const auto& w : sweep.class_two_klein) add(w, 2);

  add(symmetric3_spec(), 2, true);
  add(symmetric3_spec(), 3, true);
  add(dihedral_spec(3), 3, true);
  add(frobenius21_spec(), 3, true);
  add(quaternion_spec(3), 5, true);
  return c;
}

namespace {

std::optional<unsigned> parse_uint(std::string_view s) {
  if (s.empty()) return std::nullopt;
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

unsigned family_exponent(std::string_view name, unsigned order) {
  const auto k = log_exact(order, 2);
  if (!k) throw InputError("'" + std::string(name) + "': order " + std::to_string(order) + " is not a power of 2");
  return *k;
}

GroupSpec parse_atom(std::string_view name) {
  if (name == "S3") return symmetric3_spec();
  if (name == "M27") return m27_spec();
  if (name == "C3wrC3") return wreath_c3_spec();
  if (name == "C7:C3") return frobenius21_spec();
  struct Prefix {
    std::string_view prefix;
    GroupSpec (*make)(unsigned);
    bool two_power;
  };
  static const Prefix kPrefixes[] = {
      {"SD", semidihedral_spec, true}, {"MD", modular_spec, true}, {"He", heisenberg_spec, false},
      {"C", cyclic_spec, false},       {"D", dihedral_spec, true}, {"Q", quaternion_spec, true},
  };
  for (const auto& pre : kPrefixes) {
    if (!name.starts_with(pre.prefix)) continue;
    const auto v = parse_uint(name.substr(pre.prefix.size()));
    if (!v) continue;
    if (*v == 0) throw InputError("'" + std::string(name) + "': order must be positive");
    GroupSpec s = pre.make(pre.two_power ? family_exponent(name, *v) : *v);
    return s;
  }
  throw InputError("unknown group name '" + std::string(name) + "'");
}

}  // namespace

GroupSpec parse_named(std::string_view name) {
  if (name.empty()) throw InputError("empty group name");
  const WitnessSweep& sweep = default_witness_sweep();
  for (const auto* list : {&sweep.witnesses, &sweep.class_two_klein})
    for (const auto& w : *list)
      if (w.name == name) return w;

  std::vector<GroupSpec> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i) {
    if (i == name.size() || name[i] == 'x') {
      const auto part = name.substr(start, i - start);
      if (part.empty()) throw InputError("malformed product name '" + std::string(name) + "'");
      factors.push_back(parse_atom(part));
      start = i + 1;
    }
  }
  return direct_product_spec(std::move(factors));
}

}  // namespace lienil
