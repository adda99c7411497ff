#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lienil {

using Coeff = std::uint8_t;

// Arithmetic in F_p for a prime p < 256. Composite moduli are rejected.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxPrime = 251;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  Coeff add(Coeff a, Coeff b) const { return static_cast<Coeff>((a + b) % p_); }
  Coeff sub(Coeff a, Coeff b) const { return static_cast<Coeff>((a + p_ - b) % p_); }
  Coeff mul(Coeff a, Coeff b) const { return static_cast<Coeff>((static_cast<std::uint32_t>(a) * b) % p_); }
  Coeff neg(Coeff a) const { return static_cast<Coeff>((p_ - a) % p_); }
  Coeff inv(Coeff a) const { return inverse_[a]; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
  std::vector<Coeff> inverse_;
};

// A vector in F_p^N with every coordinate reduced into [0, p).
class FpVector {
 public:
  FpVector(std::uint32_t p, std::size_t n);
  // Coordinates are reduced mod p; negative values are allowed.
  FpVector(std::uint32_t p, std::span<const std::int64_t> coords);
  FpVector(std::uint32_t p, std::initializer_list<std::int64_t> coords);

  std::uint32_t p() const { return p_; }
  std::size_t size() const { return coords_.size(); }
  Coeff operator[](std::size_t i) const { return coords_[i]; }
  void set(std::size_t i, std::int64_t value);
  bool is_zero() const;

  std::span<Coeff> data() { return coords_; }
  std::span<const Coeff> data() const { return coords_; }

  friend bool operator==(const FpVector&, const FpVector&) = default;

 private:
  std::uint32_t p_;
  std::vector<Coeff> coords_;
};

FpVector operator+(const FpVector& a, const FpVector& b);
FpVector operator-(const FpVector& a, const FpVector& b);
FpVector scaled(const FpVector& v, std::int64_t c);

// Subspace of F_p^N stored as a reduced row echelon basis: pivots are 1,
// pivot columns strictly increase, and every pivot column is zero in all
// other rows. The representation is canonical, so equality of subspaces is
// equality of bases.
class FpSubspace {
 public:
  FpSubspace(std::uint32_t p, std::size_t ambient_dim);
  static FpSubspace full(std::uint32_t p, std::size_t ambient_dim);

  std::uint32_t p() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dimension() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<FpVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  // Adds v to the span in place; returns true iff the dimension grew.
  bool insert(const FpVector& v);
  bool contains(const FpVector& v) const;
  // Residue of v after elimination against the basis.
  FpVector reduce(FpVector v) const;

  friend bool operator==(const FpSubspace&, const FpSubspace&) = default;

 private:
  void check_compatible(const FpVector& v) const;
  void reduce_in_place(std::span<Coeff> v) const;

  std::uint32_t p_;
  std::size_t n_;
  PrimeField field_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// span(S u {v}) and whether the dimension grew.
std::pair<FpSubspace, bool> echelon_insert(FpSubspace S, const FpVector& v);

bool contains(const FpSubspace& S, const FpVector& v);

/// Throws InputError when the ambient spaces differ.
bool subspace_equal(const FpSubspace& A, const FpSubspace& B);

FpSubspace span_of(std::uint32_t p, std::size_t ambient_dim, std::span<const FpVector> vectors);

// dst[j] += k * src[j] (mod p) for j >= from.
void axpy(std::span<Coeff> dst, std::span<const Coeff> src, Coeff k, std::uint32_t p, std::size_t from = 0);

}  // namespace lienil
