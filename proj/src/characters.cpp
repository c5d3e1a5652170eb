#include "fqsum/characters.hpp"

namespace fqsum {

namespace {

void check_same_field(const Character& a, const Character& b) {
  if (&a.field() != &b.field()) throw CharacterError("characters belong to different fields");
}

// Histogram of sum over u of zeta^(a log u + b log(1-u)), shifted by `offset`.
std::vector<std::int64_t> jacobi_counts(const FieldTable& f, std::uint32_t a, std::uint32_t b,
                                        std::uint64_t offset) {
  const std::uint32_t n = f.order();
  std::vector<std::int64_t> counts(n, 0);
  for (std::uint32_t k = 0; k < n; ++k) {
    const std::int32_t z = f.one_minus_log(k);
    if (z < 0) continue;
    ++counts[(offset + static_cast<std::uint64_t>(a) * k + static_cast<std::uint64_t>(b) * z) % n];
  }
  return counts;
}

}  // namespace

CycInt CharValue::to_cyc() const {
  const CyclotomicRing& ring = CyclotomicRing::get(n_);
  if (is_zero()) return CycInt(ring);
  return CycInt::from_integer(ring, 1).mul_root(exponent_);
}

Character::Character(const FieldTable& field, std::int64_t exponent) : field_(&field) {
  const std::int64_t n = field.order();
  const std::int64_t m = exponent % n;
  exponent_ = static_cast<std::uint32_t>(m < 0 ? m + n : m);
}

CharValue Character::operator()(const FieldElement& x) const {
  const std::uint32_t n = field_->order();
  if (x.is_zero()) return CharValue::zero(n);
  return CharValue::root(n, static_cast<std::int64_t>(exponent_) * field_->log_of_code(x.code()));
}

CharValue Character::at_minus_one() const {
  const std::uint32_t n = field_->order();
  return CharValue::root(n, static_cast<std::int64_t>(exponent_) * field_->minus_one_log());
}

Character Character::conj() const {
  return Character(*field_, -static_cast<std::int64_t>(exponent_));
}

Character operator*(const Character& a, const Character& b) {
  check_same_field(a, b);
  return Character(*a.field_, static_cast<std::int64_t>(a.exponent_) + b.exponent_);
}

std::vector<Character> all_characters(const FieldTable& field) {
  std::vector<Character> out;
  out.reserve(field.order());
  for (std::uint32_t e = 0; e < field.order(); ++e) out.emplace_back(field, e);
  return out;
}

Character trivial_character(const FieldTable& field) { return Character(field, 0); }

const CyclotomicRing& value_ring(const FieldTable& field) { return CyclotomicRing::get(field.order()); }

CycInt char_eval(const Character& chi, const FieldElement& x) { return chi(x).to_cyc(); }

Character char_mul(const Character& a, const Character& b) { return a * b; }

Character char_inv(const Character& a) { return a.conj(); }

bool is_trivial(const Character& a) { return a.is_trivial(); }

CycInt eval_minus_one(const Character& a) { return a.at_minus_one().to_cyc(); }

int delta_elem(const FieldElement& x) { return x.is_zero() ? 1 : 0; }

int delta_char(const Character& chi) { return chi.is_trivial() ? 1 : 0; }

CycInt jacobi_sum(const Character& a, const Character& b) {
  check_same_field(a, b);
  const FieldTable& f = a.field();
  return CycInt::from_counts(value_ring(f), jacobi_counts(f, a.exponent(), b.exponent(), 0));
}

CycInt binom(const Character& a, const Character& b) {
  check_same_field(a, b);
  const FieldTable& f = a.field();
  const std::uint32_t n = f.order();
  const std::uint64_t sign = static_cast<std::uint64_t>(b.exponent()) * f.minus_one_log();
  return CycInt::from_counts(value_ring(f), jacobi_counts(f, a.exponent(), (n - b.exponent()) % n, sign));
}

}  // namespace fqsum
