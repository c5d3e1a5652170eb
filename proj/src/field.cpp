#include "fqsum/field.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fqsum {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = lead * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return true;
  // Trial division by every monic polynomial of degree 1 .. deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_mod(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

// Digits of the coefficient tuple at lexicographic rank `rank`, with c_0 the
// most significant position.
Poly tuple_at_rank(std::uint64_t rank, std::uint32_t p, std::uint32_t len) {
  Poly c(len, 0);
  for (std::uint32_t k = len; k-- > 0;) {
    c[k] = static_cast<std::uint32_t>(rank % p);
    rank /= p;
  }
  return c;
}

std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t k = c.size(); k-- > 0;) code = code * p + c[k];
  return code;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
  if (q < 2) throw FieldError("q = " + std::to_string(q) + " is not a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t r = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) throw FieldError("q = " + std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), r};
}

std::shared_ptr<const FieldTable> build_field(std::uint32_t p, std::uint32_t r,
                                              std::uint32_t table_cap) {
  if (!is_prime(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
  if (r == 0) throw FieldError("r must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > table_cap) {
      throw FieldError("q = " + std::to_string(p) + "^" + std::to_string(r) +
                       " exceeds the table cap " + std::to_string(table_cap));
    }
  }

  auto field = std::shared_ptr<FieldTable>(new FieldTable());
  FieldParams& params = field->params_;
  params.p = p;
  params.r = r;
  params.q = static_cast<std::uint32_t>(q);

  // Modulus: first irreducible c_0 + ... + c_{r-1} x^{r-1} + x^r in tuple order.
  std::uint64_t tuples = q;
  for (std::uint64_t rank = 0; rank < tuples && params.modulus.empty(); ++rank) {
    Poly f = tuple_at_rank(rank, p, r);
    f.push_back(1);
    if (is_irreducible(f, p)) params.modulus = f;
  }
  if (params.modulus.empty()) throw std::logic_error("no irreducible polynomial found");

  const std::uint32_t order = params.q - 1;
  auto mulmod = [&](const Poly& a, const Poly& b) {
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
      }
    }
    Poly rem = poly_mod(std::move(prod), params.modulus, p);
    rem.resize(r, 0);
    return rem;
  };

  // Generator: first nonzero tuple whose powers cycle back to 1 at exactly q - 1.
  for (std::uint64_t rank = 1; rank < tuples; ++rank) {
    const Poly g = tuple_at_rank(rank, p, r);
    std::vector<std::uint32_t> powers;
    powers.reserve(order);
    Poly cur(r, 0);
    cur[0] = 1;
    bool full = true;
    for (std::uint32_t k = 0; k < order; ++k) {
      const std::uint32_t code = encode(cur, p);
      if (k > 0 && code == 1) {
        full = false;
        break;
      }
      powers.push_back(code);
      cur = mulmod(cur, g);
    }
    if (full && encode(cur, p) == 1) {
      field->exp_ = std::move(powers);
      break;
    }
  }
  if (field->exp_.size() != order) throw std::logic_error("no generator found");

  field->log_.assign(params.q, FieldTable::kNoLog);
  for (std::uint32_t k = 0; k < order; ++k) field->log_[field->exp_[k]] = static_cast<std::int32_t>(k);

  // -1 = g^((q-1)/2) in odd characteristic, and -1 = 1 in characteristic 2.
  field->minus_one_log_ = (p == 2) ? 0 : order / 2;

  field->one_minus_log_.resize(order);
  for (std::uint32_t k = 0; k < order; ++k) {
    const std::uint32_t u = field->exp_[k];
    const std::uint32_t v = field->add_codes(1, field->neg_code(u));
    field->one_minus_log_[k] = field->log_[v];
  }
  return field;
}

std::uint32_t FieldTable::add_codes(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = params_.p;
  if (params_.r == 1) return (a + b) % p;
  if (p == 2) return a ^ b;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t k = 0; k < params_.r; ++k) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t FieldTable::neg_code(std::uint32_t a) const {
  const std::uint32_t p = params_.p;
  if (p == 2) return a;
  if (params_.r == 1) return (p - a) % p;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t k = 0; k < params_.r; ++k) {
    out += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t FieldTable::log(const FieldElement& x) const {
  if (x.is_zero()) throw FieldError("log of zero");
  return static_cast<std::uint32_t>(log_[x.code()]);
}

FieldElement FieldTable::from_code(std::uint32_t code) const {
  if (code >= params_.q) throw FieldError("element code " + std::to_string(code) + " out of range");
  return {this, code};
}

FieldElement FieldTable::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != params_.r) {
    throw FieldError("expected " + std::to_string(params_.r) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  }
  for (std::uint32_t c : coeffs) {
    if (c >= params_.p) throw FieldError("coefficient " + std::to_string(c) + " not reduced mod p");
  }
  return {this, encode(Poly(coeffs.begin(), coeffs.end()), params_.p)};
}

std::vector<std::uint32_t> FieldTable::coeffs_of(std::uint32_t code) const {
  std::vector<std::uint32_t> c(params_.r);
  for (auto& digit : c) {
    digit = code % params_.p;
    code /= params_.p;
  }
  return c;
}

FieldElement FieldTable::from_index(std::uint32_t index) const {
  if (index >= params_.q) throw FieldError("element index " + std::to_string(index) + " out of range");
  if (index == 0) return zero();
  return {this, exp_[index - 1]};
}

std::uint32_t FieldTable::index_of(const FieldElement& x) const {
  return x.is_zero() ? 0 : static_cast<std::uint32_t>(log_[x.code()]) + 1;
}

std::vector<FieldElement> FieldTable::enumerate() const {
  std::vector<FieldElement> out;
  out.reserve(params_.q);
  for (std::uint32_t i = 0; i < params_.q; ++i) out.push_back(from_index(i));
  return out;
}

std::vector<std::uint32_t> FieldElement::coeffs() const { return field_->coeffs_of(code_); }

std::uint32_t FieldElement::log() const { return field_->log(*this); }

FieldElement FieldElement::operator-() const { return {field_, field_->neg_code(code_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return {a.field_, a.field_->add_codes(a.code_, b.code_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return {a.field_, a.field_->add_codes(a.code_, a.field_->neg_code(b.code_))};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() || b.is_zero()) return a.field_->zero();
  const FieldTable& f = *a.field_;
  return f.exp(static_cast<std::uint64_t>(f.log_of_code(a.code_)) + f.log_of_code(b.code_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (b.is_zero()) throw FieldError("division by zero");
  if (a.is_zero()) return a;
  const FieldTable& f = *a.field_;
  return f.exp(static_cast<std::uint64_t>(f.log_of_code(a.code_)) + f.order() - f.log_of_code(b.code_));
}

FieldElement one_minus(const FieldElement& a) { return a.field().one() - a; }

FieldElement inv(const FieldElement& a) { return a.field().one() / a; }

}  // namespace fqsum
