#include "fqsum/hypergeometric.hpp"

namespace fqsum {

namespace {

void require_field(const FieldTable& f, const Character& c) {
  if (&c.field() != &f) throw CharacterError("character belongs to a different field");
}

void require_field(const FieldTable& f, const FieldElement& x) {
  if (&x.field() != &f) throw FieldError("element belongs to a different field");
}

std::uint64_t neg_mod(std::uint32_t e, std::uint32_t n) { return (n - e) % n; }

// Histogram-based point sum. Each term is a product of four character values,
// so it contributes a single root of unity: only exponents are accumulated.
CycInt f21_point(const FieldTable& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                 const FieldElement& x) {
  const CyclotomicRing& ring = value_ring(f);
  if (x.is_zero()) return CycInt(ring);
  const std::uint32_t n = f.order();
  const std::uint64_t lx = f.log_of_code(x.code());
  const std::uint64_t base = (static_cast<std::uint64_t>(b) + c) % n * f.minus_one_log();
  const std::uint64_t e_one_minus_u = (static_cast<std::uint64_t>(c) + n - b) % n;
  const std::uint64_t e_one_minus_ux = neg_mod(a, n);
  std::vector<std::int64_t> counts(n, 0);
  for (std::uint32_t k = 0; k < n; ++k) {
    const std::int32_t z1 = f.one_minus_log(k);
    if (z1 < 0) continue;
    const std::int32_t z2 = f.one_minus_log(static_cast<std::uint32_t>((k + lx) % n));
    if (z2 < 0) continue;
    ++counts[(base + static_cast<std::uint64_t>(b) * k + e_one_minus_u * z1 + e_one_minus_ux * z2) % n];
  }
  return CycInt::from_counts(ring, counts);
}

CycInt appell_point(const FieldTable& f, std::uint32_t a, std::uint32_t b, std::uint32_t bp,
                    std::uint32_t c, const FieldElement& x, const FieldElement& y) {
  const CyclotomicRing& ring = value_ring(f);
  if (x.is_zero() || y.is_zero()) return CycInt(ring);
  const std::uint32_t n = f.order();
  const std::uint64_t lx = f.log_of_code(x.code());
  const std::uint64_t ly = f.log_of_code(y.code());
  const std::uint64_t base = (static_cast<std::uint64_t>(a) + c) % n * f.minus_one_log();
  const std::uint64_t e1 = (static_cast<std::uint64_t>(c) + n - a) % n;
  const std::uint64_t e2 = neg_mod(b, n);
  const std::uint64_t e3 = neg_mod(bp, n);
  std::vector<std::int64_t> counts(n, 0);
  for (std::uint32_t k = 0; k < n; ++k) {
    const std::int32_t z1 = f.one_minus_log(k);
    if (z1 < 0) continue;
    const std::int32_t z2 = f.one_minus_log(static_cast<std::uint32_t>((k + lx) % n));
    if (z2 < 0) continue;
    const std::int32_t z3 = f.one_minus_log(static_cast<std::uint32_t>((k + ly) % n));
    if (z3 < 0) continue;
    ++counts[(base + static_cast<std::uint64_t>(a) * k + e1 * z1 + e2 * z2 + e3 * z3) % n];
  }
  return CycInt::from_counts(ring, counts);
}

template <typename Binom>
CycInt f21_total(const FieldTable& f, const Character& A, const Character& B, const Character& C,
                 const FieldElement& x, Binom&& binom) {
  const CyclotomicRing& ring = value_ring(f);
  CycInt total(ring);
  if (x.is_zero()) return total;
  const std::uint64_t lx = f.log_of_code(x.code());
  for (std::uint32_t e = 0; e < f.order(); ++e) {
    const Character chi(f, e);
    const CycInt term = binom(A * chi, chi) * binom(B * chi, C * chi);
    total += term.mul_root(static_cast<std::int64_t>((e * lx) % f.order()));
  }
  return total;
}

template <typename Binom>
CycInt appell_total(const FieldTable& f, const Character& A, const Character& B, const Character& Bp,
                    const Character& C, const FieldElement& x, const FieldElement& y, Binom&& binom) {
  const CyclotomicRing& ring = value_ring(f);
  CycInt total(ring);
  if (x.is_zero() || y.is_zero()) return total;
  const std::uint32_t n = f.order();
  const std::uint64_t lx = f.log_of_code(x.code());
  const std::uint64_t ly = f.log_of_code(y.code());
  // sum_chi [B chi|chi] chi(x) * (sum_lambda [A chi lambda|C chi lambda][B' lambda|lambda] lambda(y))
  for (std::uint32_t e = 0; e < n; ++e) {
    const Character chi(f, e);
    CycInt inner(ring);
    for (std::uint32_t l = 0; l < n; ++l) {
      const Character lambda(f, l);
      const CycInt term = binom(A * chi * lambda, C * chi * lambda) * binom(Bp * lambda, lambda);
      inner += term.mul_root(static_cast<std::int64_t>((l * ly) % n));
    }
    total += (binom(B * chi, chi) * inner).mul_root(static_cast<std::int64_t>((e * lx) % n));
  }
  return total;
}

BigInt group_order(const FieldTable& f) { return BigInt(f.order()); }

void check_params(const Hyp2F1Params& p) {
  const FieldTable& f = p.A.field();
  require_field(f, p.B);
  require_field(f, p.C);
  require_field(f, p.x);
}

void check_params(const AppellF1Params& p) {
  const FieldTable& f = p.A.field();
  require_field(f, p.B);
  require_field(f, p.Bp);
  require_field(f, p.C);
  require_field(f, p.x);
  require_field(f, p.y);
}

}  // namespace

CycInt f21_point_sum(const Hyp2F1Params& p) {
  check_params(p);
  return f21_point(p.A.field(), p.A.exponent(), p.B.exponent(), p.C.exponent(), p.x);
}

CycInt f21_char_sum(const Hyp2F1Params& p) {
  check_params(p);
  const FieldTable& f = p.A.field();
  return f21_total(f, p.A, p.B, p.C, p.x, [](const Character& a, const Character& b) { return binom(a, b); })
      .exact_div_int(group_order(f));
}

CycInt appell_f1_point_sum(const AppellF1Params& p) {
  check_params(p);
  return appell_point(p.A.field(), p.A.exponent(), p.B.exponent(), p.Bp.exponent(), p.C.exponent(), p.x,
                      p.y);
}

CycInt appell_f1_char_sum(const AppellF1Params& p) {
  check_params(p);
  const FieldTable& f = p.A.field();
  const BigInt m = group_order(f);
  return appell_total(f, p.A, p.B, p.Bp, p.C, p.x, p.y,
                      [](const Character& a, const Character& b) { return binom(a, b); })
      .exact_div_int(m * m);
}

SumContext::SumContext(std::shared_ptr<const FieldTable> field)
    : field_(std::move(field)), ring_(&value_ring(*field_)) {}

void SumContext::build_binomials() const {
  std::call_once(binom_once_, [this] {
    const std::uint32_t n = order();
    binom_.reserve(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) binom_.push_back(fqsum::binom(character(a), character(b)));
    }
  });
}

const CycInt& SumContext::binom(const Character& a, const Character& b) const {
  build_binomials();
  return binom_[static_cast<std::size_t>(a.exponent()) * order() + b.exponent()];
}

CycInt SumContext::f21(const Character& A, const Character& B, const Character& C,
                       const FieldElement& x) const {
  return f21_point(*field_, A.exponent(), B.exponent(), C.exponent(), x);
}

CycInt SumContext::appell(const Character& A, const Character& B, const Character& Bp, const Character& C,
                          const FieldElement& x, const FieldElement& y) const {
  return appell_point(*field_, A.exponent(), B.exponent(), Bp.exponent(), C.exponent(), x, y);
}

CycInt SumContext::f21_character_total(const Character& A, const Character& B, const Character& C,
                                       const FieldElement& x) const {
  return f21_total(*field_, A, B, C, x,
                   [this](const Character& a, const Character& b) -> const CycInt& { return binom(a, b); });
}

CycInt SumContext::appell_character_total(const Character& A, const Character& B, const Character& Bp,
                                          const Character& C, const FieldElement& x,
                                          const FieldElement& y) const {
  return appell_total(*field_, A, B, Bp, C, x, y,
                      [this](const Character& a, const Character& b) -> const CycInt& { return binom(a, b); });
}

}  // namespace fqsum
