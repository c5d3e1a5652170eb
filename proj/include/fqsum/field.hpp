#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fqsum {

inline constexpr std::uint32_t kDefaultTableCap = 1u << 16;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FieldParams {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  std::uint32_t q = 0;
  // Monic modulus, coefficients low-to-high (size r + 1).
  std::vector<std::uint32_t> modulus;
};

class FieldTable;

// An element of F_q. The code is the base-p integer sum c_k p^k of the
// canonical coefficient vector, so equality of codes is equality of vectors.
// Elements refer to their table by pointer: the table must outlive them.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldTable* field, std::uint32_t code) : field_(field), code_(code) {}

  const FieldTable& field() const { return *field_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  std::vector<std::uint32_t> coeffs() const;
  // Discrete log relative to the table's generator; throws on zero.
  std::uint32_t log() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  // Throws FieldError when b is zero.
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

 private:
  const FieldTable* field_ = nullptr;
  std::uint32_t code_ = 0;
};

// A fully materialized F_{p^r}: exp/log tables relative to a fixed generator,
// plus the Zech-style table log(1 - g^k) used by the character sums.
// Immutable once built.
class FieldTable {
 public:
  static constexpr std::int32_t kNoLog = -1;

  const FieldParams& params() const { return params_; }
  std::uint32_t p() const { return params_.p; }
  std::uint32_t r() const { return params_.r; }
  std::uint32_t q() const { return params_.q; }
  // Order of the multiplicative group, q - 1.
  std::uint32_t order() const { return params_.q - 1; }
  // q = 2 has only the trivial character.
  bool degenerate() const { return params_.q == 2; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  FieldElement minus_one() const { return exp(minus_one_log_); }
  FieldElement generator() const { return {this, exp_[1 % order()]}; }

  FieldElement exp(std::uint64_t k) const { return {this, exp_[k % order()]}; }
  std::int32_t log_of_code(std::uint32_t code) const { return log_[code]; }
  std::uint32_t log(const FieldElement& x) const;
  // log(1 - g^k), or kNoLog when g^k = 1.
  std::int32_t one_minus_log(std::uint32_t k) const { return one_minus_log_[k]; }
  std::uint32_t minus_one_log() const { return minus_one_log_; }

  FieldElement from_code(std::uint32_t code) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs_of(std::uint32_t code) const;

  // Enumeration order: zero first, then g^0, g^1, ..., g^(q-2).
  FieldElement from_index(std::uint32_t index) const;
  std::uint32_t index_of(const FieldElement& x) const;
  std::vector<FieldElement> enumerate() const;

  std::uint32_t add_codes(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_code(std::uint32_t a) const;

 private:
  friend std::shared_ptr<const FieldTable> build_field(std::uint32_t, std::uint32_t,
                                                       std::uint32_t);
  FieldTable() = default;

  FieldParams params_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::int32_t> log_;
  std::vector<std::int32_t> one_minus_log_;
  std::uint32_t minus_one_log_ = 0;
};

bool is_prime(std::uint64_t n);

// Deterministic: the modulus is the first monic irreducible polynomial in
// lexicographic order of (c_0, ..., c_{r-1}), and the generator is the first
// element of order q - 1 in the same ordering of coefficient tuples.
std::shared_ptr<const FieldTable> build_field(std::uint32_t p, std::uint32_t r,
                                              std::uint32_t table_cap = kDefaultTableCap);

// Splits a prime power q into (p, r); throws FieldError otherwise.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q);

FieldElement one_minus(const FieldElement& a);
FieldElement inv(const FieldElement& a);

}  // namespace fqsum
