#pragma once

#include "fqsum/characters.hpp"

#include <memory>
#include <mutex>

namespace fqsum {

// 2F1[A, B; C; x] in the q-scaled convention.
struct Hyp2F1Params {
  Character A, B, C;
  FieldElement x;
};

// F1(A; B, B'; C; x, y).
struct AppellF1Params {
  Character A, B, Bp, C;
  FieldElement x, y;
};

// eps(x) BC(-1) sum_u B(u) conj(B)C(1-u) conj(A)(1-ux).  Theta(q).
CycInt f21_point_sum(const Hyp2F1Params& params);
// (1/(q-1)) sum_chi [A chi | chi][B chi | C chi] chi(x).  Theta(q) binomials.
CycInt f21_char_sum(const Hyp2F1Params& params);
// eps(xy) AC(-1) sum_u A(u) conj(A)C(1-u) conj(B)(1-ux) conj(B')(1-uy).  Theta(q).
CycInt appell_f1_point_sum(const AppellF1Params& params);
// (1/(q-1)^2) sum_{chi,lambda} [A chi lambda | C chi lambda][B chi | chi][B' lambda | lambda]
//   chi(x) lambda(y).  Theta(q^2) binomials.
CycInt appell_f1_char_sum(const AppellF1Params& params);

// Shared state for repeated evaluation over one field: the value ring and a
// lazily built table of every binomial [A | B]. Thread-safe after construction.
class SumContext {
 public:
  explicit SumContext(std::shared_ptr<const FieldTable> field);

  const FieldTable& field() const { return *field_; }
  const std::shared_ptr<const FieldTable>& field_ptr() const { return field_; }
  const CyclotomicRing& ring() const { return *ring_; }
  std::uint32_t q() const { return field_->q(); }
  std::uint32_t order() const { return field_->order(); }

  Character character(std::int64_t exponent) const { return Character(*field_, exponent); }
  FieldElement element(std::uint32_t index) const { return field_->from_index(index); }
  CycInt zero() const { return CycInt(*ring_); }
  CycInt integer(const BigInt& m) const { return CycInt::from_integer(*ring_, m); }

  const CycInt& binom(const Character& a, const Character& b) const;

  CycInt f21(const Character& A, const Character& B, const Character& C, const FieldElement& x) const;
  CycInt appell(const Character& A, const Character& B, const Character& Bp, const Character& C,
                const FieldElement& x, const FieldElement& y) const;

  // The character-sum forms before division by (q-1) and (q-1)^2.
  CycInt f21_character_total(const Character& A, const Character& B, const Character& C,
                             const FieldElement& x) const;
  CycInt appell_character_total(const Character& A, const Character& B, const Character& Bp,
                                const Character& C, const FieldElement& x, const FieldElement& y) const;

 private:
  void build_binomials() const;

  std::shared_ptr<const FieldTable> field_;
  const CyclotomicRing* ring_;
  mutable std::once_flag binom_once_;
  mutable std::vector<CycInt> binom_;
};

}  // namespace fqsum
