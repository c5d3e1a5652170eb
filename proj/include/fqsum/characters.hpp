#pragma once

#include "fqsum/cyclotomic.hpp"
#include "fqsum/field.hpp"

#include <cstdint>
#include <vector>

namespace fqsum {

class CharacterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A character value: either 0 or zeta_n^k. Products stay in this form, which
// keeps prefactors like AC(-1) B(1-x) out of the big-integer arithmetic.
class CharValue {
 public:
  static CharValue zero(std::uint32_t n) { return CharValue(n, -1); }
  static CharValue root(std::uint32_t n, std::int64_t k) {
    const std::int64_t m = k % static_cast<std::int64_t>(n);
    return CharValue(n, static_cast<std::int32_t>(m < 0 ? m + n : m));
  }

  bool is_zero() const { return exponent_ < 0; }
  std::uint32_t exponent() const { return static_cast<std::uint32_t>(exponent_); }
  std::uint32_t n() const { return n_; }

  CycInt to_cyc() const;

  friend CharValue operator*(CharValue a, CharValue b) {
    if (a.is_zero() || b.is_zero()) return zero(a.n_);
    return root(a.n_, static_cast<std::int64_t>(a.exponent_) + b.exponent_);
  }
  friend CycInt operator*(CharValue a, const CycInt& v) {
    if (a.is_zero()) return CycInt(v.ring());
    return v.mul_root(a.exponent_);
  }
  friend CycInt operator*(const CycInt& v, CharValue a) { return a * v; }
  friend bool operator==(CharValue a, CharValue b) = default;

 private:
  CharValue(std::uint32_t n, std::int32_t exponent) : n_(n), exponent_(exponent) {}
  std::uint32_t n_;
  std::int32_t exponent_;
};

// chi(g^k) = zeta_{q-1}^(exponent * k), chi(0) = 0 for every chi including the
// trivial character.
class Character {
 public:
  Character() = default;
  Character(const FieldTable& field, std::int64_t exponent);

  const FieldTable& field() const { return *field_; }
  std::uint32_t exponent() const { return exponent_; }
  bool is_trivial() const { return exponent_ == 0; }

  CharValue operator()(const FieldElement& x) const;
  CharValue at_minus_one() const;
  Character conj() const;

  friend Character operator*(const Character& a, const Character& b);
  friend bool operator==(const Character& a, const Character& b) {
    return a.field_ == b.field_ && a.exponent_ == b.exponent_;
  }

 private:
  const FieldTable* field_ = nullptr;
  std::uint32_t exponent_ = 0;
};

std::vector<Character> all_characters(const FieldTable& field);
Character trivial_character(const FieldTable& field);

CycInt char_eval(const Character& chi, const FieldElement& x);
Character char_mul(const Character& a, const Character& b);
Character char_inv(const Character& a);
bool is_trivial(const Character& a);
// +1 or -1 as a ring element.
CycInt eval_minus_one(const Character& a);

// 1 iff x = 0.
int delta_elem(const FieldElement& x);
// 1 iff chi is trivial.
int delta_char(const Character& chi);

// J(A, B) = sum over u of A(u) B(1 - u).
CycInt jacobi_sum(const Character& a, const Character& b);
// [A | B] = B(-1) J(A, conj(B)).
CycInt binom(const Character& a, const Character& b);

const CyclotomicRing& value_ring(const FieldTable& field);

}  // namespace fqsum
