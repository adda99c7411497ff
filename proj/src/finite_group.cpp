#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "lienil/errors.hpp"
#include "lienil/group_core.hpp"

namespace lienil {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 256;
constexpr std::size_t kSampledTriples = 100000;

std::string element_str(std::size_t i) { return std::to_string(i); }

}  // namespace

FiniteGroup::FiniteGroup(const Table& table, std::vector<std::string> labels)
    : order_(table.size()), labels_(std::move(labels)) {
  const std::size_t n = order_;
  if (n == 0) throw InputError("group table is empty");
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw InputError("group table row " + element_str(i) + " has " + std::to_string(table[i].size()) +
                       " entries, expected " + std::to_string(n));
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = table[i][j];
      if (v >= n) throw InputError("group table entry [" + element_str(i) + "][" + element_str(j) + "] out of range");
      if (seen[v]) throw InputError("group table row " + element_str(i) + " repeats element " + element_str(v));
      seen[v] = true;
      table_[i * n + j] = v;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const Element v = table_[i * n + j];
      if (seen[v]) throw InputError("group table column " + element_str(j) + " repeats element " + element_str(v));
      seen[v] = true;
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table_[e * n + j] == j && table_[j * n + e] == j;
    if (ok) {
      identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw InputError("group table has no two-sided identity");

  inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i * n + j] == identity_) {
        inverse_[i] = static_cast<Element>(j);
        break;
      }
    }
  }

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return table_[table_[a * n + b] * n + c] == table_[a * n + table_[b * n + c]];
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c))
            throw InputError("group table is not associative at (" + element_str(a) + "," + element_str(b) + "," +
                             element_str(c) + ")");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < kSampledTriples; ++t) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (!assoc(a, b, c))
        throw InputError("group table is not associative at (" + element_str(a) + "," + element_str(b) + "," +
                         element_str(c) + ")");
    }
  }

  element_orders_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t k = 1;
    Element x = static_cast<Element>(g);
    while (x != identity_) {
      x = mul(x, static_cast<Element>(g));
      ++k;
    }
    element_orders_[g] = k;
  }

  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(element_str(i));
  } else if (labels_.size() != n) {
    throw InputError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels_.size()));
  }

  // Greedy generating set: try elements of large order first.
  std::vector<Element> by_order(n);
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return element_orders_[a] > element_orders_[b]; });
  ElementSet reached(n);
  reached.insert(identity_);
  std::vector<Element> members{identity_};
  for (Element g : by_order) {
    if (reached.contains(g)) continue;
    generators_.push_back(g);
    // Re-close from scratch; at most log2(n) generators are ever added.
    reached = ElementSet(n);
    reached.insert(identity_);
    members.assign(1, identity_);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element s : generators_) {
        const Element y = mul(members[i], s);
        if (!reached.contains(y)) {
          reached.insert(y);
          members.push_back(y);
        }
      }
    }
  }
}

Element FiniteGroup::power(Element g, std::int64_t k) const {
  check_element(g);
  const auto ord = static_cast<std::int64_t>(element_orders_[g]);
  std::int64_t e = ((k % ord) + ord) % ord;
  Element result = identity_;
  Element base = g;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

void FiniteGroup::check_element(Element g) const {
  if (g >= order_)
    throw InputError("element index " + std::to_string(g) + " out of range for group of order " +
                     std::to_string(order_));
}

FiniteGroup::Table FiniteGroup::table() const {
  Table t(order_, std::vector<Element>(order_));
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) t[i][j] = table_[i * order_ + j];
  return t;
}

GroupPtr make_group(const FiniteGroup::Table& table, std::vector<std::string> labels) {
  return std::make_shared<const FiniteGroup>(table, std::move(labels));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> prime_power(std::uint64_t n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return PrimePower{1, 0};
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, k};
}

std::optional<unsigned> log_exact(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return std::nullopt;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

}  // namespace lienil
