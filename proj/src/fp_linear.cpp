#include <algorithm>
#include <string>

#include "lienil/errors.hpp"
#include "lienil/fp_linear.hpp"
#include "lienil/group_core.hpp"

namespace lienil {

namespace {

std::uint32_t validated_prime(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
  if (p > PrimeField::kMaxPrime)
    throw InputError("modulus " + std::to_string(p) + " exceeds the supported maximum " +
                     std::to_string(PrimeField::kMaxPrime));
  return p;
}

Coeff reduce_int(std::int64_t x, std::uint32_t p) {
  const auto m = static_cast<std::int64_t>(p);
  return static_cast<Coeff>(((x % m) + m) % m);
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(validated_prime(p)), inverse_(p, 0) {
  for (std::uint32_t a = 1; a < p_; ++a)
    for (std::uint32_t b = 1; b < p_; ++b)
      if ((a * b) % p_ == 1) {
        inverse_[a] = static_cast<Coeff>(b);
        break;
      }
}

FpVector::FpVector(std::uint32_t p, std::size_t n) : p_(validated_prime(p)), coords_(n, 0) {}

FpVector::FpVector(std::uint32_t p, std::span<const std::int64_t> coords)
    : p_(validated_prime(p)), coords_(coords.size()) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = reduce_int(coords[i], p_);
}

FpVector::FpVector(std::uint32_t p, std::initializer_list<std::int64_t> coords)
    : FpVector(p, std::span<const std::int64_t>(coords.begin(), coords.size())) {}

void FpVector::set(std::size_t i, std::int64_t value) { coords_.at(i) = reduce_int(value, p_); }

bool FpVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coeff c) { return c == 0; });
}

namespace {

void check_same_space(const FpVector& a, const FpVector& b) {
  if (a.p() != b.p() || a.size() != b.size())
    throw InputError("vector mismatch: F_" + std::to_string(a.p()) + "^" + std::to_string(a.size()) + " vs F_" +
                     std::to_string(b.p()) + "^" + std::to_string(b.size()));
}

}  // namespace

FpVector operator+(const FpVector& a, const FpVector& b) {
  check_same_space(a, b);
  FpVector r = a;
  axpy(r.data(), b.data(), 1, a.p());
  return r;
}

FpVector operator-(const FpVector& a, const FpVector& b) {
  check_same_space(a, b);
  FpVector r = a;
  axpy(r.data(), b.data(), static_cast<Coeff>(a.p() - 1), a.p());
  return r;
}

FpVector scaled(const FpVector& v, std::int64_t c) {
  FpVector r(v.p(), v.size());
  const Coeff k = reduce_int(c, v.p());
  axpy(r.data(), v.data(), k, v.p());
  return r;
}

void axpy(std::span<Coeff> dst, std::span<const Coeff> src, Coeff k, std::uint32_t p, std::size_t from) {
  if (k == 0) return;
  const std::size_t n = dst.size();
  Coeff* d = dst.data();
  const Coeff* s = src.data();
  if (p == 2) {
    for (std::size_t j = from; j < n; ++j) d[j] ^= s[j];
    return;
  }
  // t < 2^16, so a 16-bit Barrett estimate is off by at most one.
  const std::uint32_t m = (std::uint32_t{1} << 16) / p;
  const std::uint32_t kk = k;
  for (std::size_t j = from; j < n; ++j) {
    const std::uint32_t t = d[j] + kk * s[j];
    std::uint32_t r = t - ((t * m) >> 16) * p;
    r = r >= p ? r - p : r;
    d[j] = static_cast<Coeff>(r);
  }
}

FpSubspace::FpSubspace(std::uint32_t p, std::size_t ambient_dim) : p_(p), n_(ambient_dim), field_(p) {}

FpSubspace FpSubspace::full(std::uint32_t p, std::size_t ambient_dim) {
  FpSubspace s(p, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    FpVector e(p, ambient_dim);
    e.set(i, 1);
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

void FpSubspace::check_compatible(const FpVector& v) const {
  if (v.p() != p_ || v.size() != n_)
    throw InputError("vector in F_" + std::to_string(v.p()) + "^" + std::to_string(v.size()) +
                     " does not belong to subspace of F_" + std::to_string(p_) + "^" + std::to_string(n_));
}

void FpSubspace::reduce_in_place(std::span<Coeff> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t c = pivots_[r];
    const Coeff coef = v[c];
    if (coef == 0) continue;
    axpy(v, rows_[r].data(), field_.neg(coef), p_, c);
  }
}

FpVector FpSubspace::reduce(FpVector v) const {
  check_compatible(v);
  reduce_in_place(v.data());
  return v;
}

bool FpSubspace::contains(const FpVector& v) const {
  check_compatible(v);
  FpVector w = v;
  reduce_in_place(w.data());
  return w.is_zero();
}

bool FpSubspace::insert(const FpVector& v) {
  check_compatible(v);
  if (rows_.size() == n_) return false;
  FpVector w = v;
  auto wd = w.data();
  reduce_in_place(wd);
  std::size_t lead = 0;
  while (lead < n_ && wd[lead] == 0) ++lead;
  if (lead == n_) return false;

  const Coeff scale = field_.inv(wd[lead]);
  if (scale != 1) {
    for (std::size_t j = lead; j < n_; ++j) wd[j] = field_.mul(wd[j], scale);
  }
  for (auto& row : rows_) {
    const Coeff coef = row[lead];
    if (coef != 0) axpy(row.data(), w.data(), field_.neg(coef), p_, lead);
  }
  const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
  return true;
}

std::pair<FpSubspace, bool> echelon_insert(FpSubspace S, const FpVector& v) {
  const bool grew = S.insert(v);
  return {std::move(S), grew};
}

bool contains(const FpSubspace& S, const FpVector& v) { return S.contains(v); }

bool subspace_equal(const FpSubspace& A, const FpSubspace& B) {
  if (A.p() != B.p() || A.ambient_dim() != B.ambient_dim())
    throw InputError("subspace_equal: ambient spaces differ");
  return A == B;
}

FpSubspace span_of(std::uint32_t p, std::size_t ambient_dim, std::span<const FpVector> vectors) {
  FpSubspace s(p, ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

}  // namespace lienil
