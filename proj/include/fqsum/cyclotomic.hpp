#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fqsum {

using BigInt = boost::multiprecision::cpp_int;

class CyclotomicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by exact_div_int when some coefficient is not a multiple of the divisor.
class NotDivisibleError : public std::runtime_error {
 public:
  NotDivisibleError(std::size_t index, const BigInt& coeff, const BigInt& divisor);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

std::uint32_t euler_phi(std::uint32_t n);

// Phi_n as low-to-high integer coefficients, obtained by dividing x^n - 1 by
// Phi_d for every proper divisor d of n.
std::vector<BigInt> cyclotomic_poly(std::uint32_t n);

// Z[zeta_n] in the power basis 1, zeta, ..., zeta^(phi(n)-1). Instances are
// interned for the life of the process and never mutated after construction,
// so CycInt values hold a plain pointer to their ring.
class CyclotomicRing {
 public:
  static const CyclotomicRing& get(std::uint32_t n);

  std::uint32_t n() const { return n_; }
  std::uint32_t phi() const { return phi_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  bool has_power_table() const { return !rows_.empty(); }

  // Reduce a group-ring vector (index j stands for zeta^j, any length) to the
  // power basis.
  std::vector<BigInt> reduce(std::vector<BigInt> v) const;
  // Same for machine-integer counts; this is the hot path of the point sums.
  std::vector<BigInt> reduce_counts(std::span<const std::int64_t> counts) const;

  CyclotomicRing(const CyclotomicRing&) = delete;
  CyclotomicRing& operator=(const CyclotomicRing&) = delete;

 private:
  explicit CyclotomicRing(std::uint32_t n);

  // Row j holds zeta^j reduced, for phi <= j < n.
  std::span<const std::int64_t> row(std::uint32_t j) const {
    return {rows_.data() + static_cast<std::size_t>(j - phi_) * phi_, phi_};
  }

  std::uint32_t n_;
  std::uint32_t phi_;
  std::vector<std::int64_t> modulus_;  // Phi_n, degree phi_
  std::vector<std::int64_t> rows_;     // empty when the table would be too large
};

// An exact element of Z[zeta_n] in canonical reduced form.
class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(const CyclotomicRing& ring);  // zero
  CycInt(const CyclotomicRing& ring, std::vector<BigInt> coeffs);

  static CycInt from_integer(const CyclotomicRing& ring, const BigInt& m);
  static CycInt from_counts(const CyclotomicRing& ring, std::span<const std::int64_t> counts);

  const CyclotomicRing& ring() const { return *ring_; }
  std::uint32_t n() const { return ring_->n(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::optional<BigInt> as_integer() const;

  CycInt& operator+=(const CycInt& b);
  CycInt& operator-=(const CycInt& b);
  CycInt& operator*=(const CycInt& b);
  CycInt operator-() const;
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const BigInt& m, CycInt a);
  friend bool operator==(const CycInt& a, const CycInt& b);

  // Multiply by zeta^k.
  CycInt mul_root(std::int64_t k) const;
  CycInt galois(std::int64_t k) const;
  CycInt exact_div_int(const BigInt& m) const;

  std::string to_string() const;

 private:
  void check_same_ring(const CycInt& b) const;

  const CyclotomicRing* ring_ = nullptr;
  std::vector<BigInt> coeffs_;
};

CycInt root_of_unity(std::uint32_t n, std::int64_t k);
CycInt scalar_mul(const BigInt& m, const CycInt& a);
CycInt exact_div_int(const CycInt& a, const BigInt& m);
CycInt galois(const CycInt& a, std::int64_t k);
std::optional<BigInt> as_integer(const CycInt& a);

}  // namespace fqsum
