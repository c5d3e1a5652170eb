#include "fqsum/cyclotomic.hpp"

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace fqsum {

namespace {

// Cap on (n - phi) * phi entries of the power-reduction table.
constexpr std::size_t kPowerTableLimit = std::size_t{1} << 22;

std::int64_t mod_n(std::int64_t k, std::uint32_t n) {
  const std::int64_t m = k % static_cast<std::int64_t>(n);
  return m < 0 ? m + n : m;
}

// In-place long division by the monic modulus; leaves the remainder in v[0, phi).
void divide_out(std::vector<BigInt>& v, const std::vector<std::int64_t>& modulus) {
  const std::size_t phi = modulus.size() - 1;
  for (std::size_t j = v.size(); j-- > phi;) {
    if (v[j].is_zero()) continue;
    const BigInt c = v[j];
    for (std::size_t i = 0; i < phi; ++i) {
      if (modulus[i] != 0) v[j - phi + i] -= c * modulus[i];
    }
    v[j] = 0;
  }
  v.resize(phi);
}

}  // namespace

NotDivisibleError::NotDivisibleError(std::size_t index, const BigInt& coeff, const BigInt& divisor)
    : std::runtime_error("coefficient " + std::to_string(index) + " (" + coeff.str() +
                         ") is not divisible by " + divisor.str()),
      index_(index) {}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<BigInt> cyclotomic_poly(std::uint32_t n) {
  if (n == 0) throw CyclotomicError("cyclotomic_poly requires n >= 1");
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<BigInt>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  std::vector<BigInt> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<BigInt> den = cyclotomic_poly(d);
    // Exact division by a monic polynomial.
    const std::size_t dd = den.size() - 1;
    std::vector<BigInt> quot(num.size() - dd, 0);
    for (std::size_t j = num.size(); j-- > dd;) {
      const BigInt c = num[j];
      quot[j - dd] = c;
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i <= dd; ++i) num[j - dd + i] -= c * den[i];
    }
    num = std::move(quot);
  }
  std::lock_guard lock(mu);
  memo.emplace(n, num);
  return num;
}

const CyclotomicRing& CyclotomicRing::get(std::uint32_t n) {
  if (n == 0) throw CyclotomicError("ring order must be positive");
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<CyclotomicRing>> rings;
  std::lock_guard lock(mu);
  auto& slot = rings[n];
  if (!slot) slot.reset(new CyclotomicRing(n));
  return *slot;
}

CyclotomicRing::CyclotomicRing(std::uint32_t n) : n_(n), phi_(euler_phi(n)) {
  for (const BigInt& c : cyclotomic_poly(n)) modulus_.push_back(static_cast<std::int64_t>(c));

  const std::size_t entries = static_cast<std::size_t>(n_ - phi_) * phi_;
  if (entries == 0 || entries > kPowerTableLimit) return;
  std::vector<BigInt> cur(phi_, 0);
  if (phi_ == 0) return;
  // zeta^(phi-1), then repeatedly multiply by zeta.
  cur[phi_ - 1] = 1;
  std::vector<std::int64_t> rows;
  rows.reserve(entries);
  for (std::uint32_t j = phi_; j < n_; ++j) {
    const BigInt top = cur[phi_ - 1];
    for (std::uint32_t i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::uint32_t i = 0; i < phi_; ++i) cur[i] -= top * modulus_[i];
    for (const BigInt& c : cur) {
      if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min()) {
        return;  // leave the table empty and fall back to long division
      }
      rows.push_back(static_cast<std::int64_t>(c));
    }
  }
  rows_ = std::move(rows);
}

std::vector<BigInt> CyclotomicRing::reduce(std::vector<BigInt> v) const {
  if (v.size() > n_) {
    for (std::size_t j = n_; j < v.size(); ++j) v[j % n_] += v[j];
    v.resize(n_);
  }
  if (v.size() <= phi_) {
    v.resize(phi_, 0);
    return v;
  }
  if (!has_power_table()) {
    divide_out(v, modulus_);
    return v;
  }
  std::vector<BigInt> out(v.begin(), v.begin() + phi_);
  for (std::uint32_t j = phi_; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    const auto r = row(j);
    for (std::uint32_t i = 0; i < phi_; ++i) {
      if (r[i] != 0) out[i] += v[j] * r[i];
    }
  }
  return out;
}

std::vector<BigInt> CyclotomicRing::reduce_counts(std::span<const std::int64_t> counts) const {
  if (counts.size() <= n_ && has_power_table()) {
    std::vector<__int128> acc(phi_, 0);
    bool overflow = false;
    for (std::uint32_t i = 0; i < phi_ && i < counts.size(); ++i) acc[i] = counts[i];
    for (std::uint32_t j = phi_; j < counts.size() && !overflow; ++j) {
      const std::int64_t c = counts[j];
      if (c == 0) continue;
      const auto r = row(j);
      for (std::uint32_t i = 0; i < phi_; ++i) {
        __int128 term;
        if (__builtin_mul_overflow(static_cast<__int128>(c), static_cast<__int128>(r[i]), &term) ||
            __builtin_add_overflow(acc[i], term, &acc[i])) {
          overflow = true;
          break;
        }
      }
    }
    if (!overflow) {
      std::vector<BigInt> out(phi_);
      for (std::uint32_t i = 0; i < phi_; ++i) {
        const __int128 a = acc[i];
        if (a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max()) {
          out[i] = static_cast<std::int64_t>(a);
        } else {
          const bool neg = a < 0;
          unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(a) : static_cast<unsigned __int128>(a);
          BigInt b = static_cast<std::uint64_t>(mag >> 64);
          b <<= 64;
          b += static_cast<std::uint64_t>(mag);
          out[i] = neg ? BigInt(-b) : b;
        }
      }
      return out;
    }
  }
  return reduce(std::vector<BigInt>(counts.begin(), counts.end()));
}

CycInt::CycInt(const CyclotomicRing& ring) : ring_(&ring), coeffs_(ring.phi(), 0) {}

CycInt::CycInt(const CyclotomicRing& ring, std::vector<BigInt> coeffs)
    : ring_(&ring), coeffs_(ring.reduce(std::move(coeffs))) {}

CycInt CycInt::from_integer(const CyclotomicRing& ring, const BigInt& m) {
  CycInt out(ring);
  out.coeffs_[0] = m;
  return out;
}

CycInt CycInt::from_counts(const CyclotomicRing& ring, std::span<const std::int64_t> counts) {
  CycInt out(ring);
  out.coeffs_ = ring.reduce_counts(counts);
  return out;
}

bool CycInt::is_zero() const {
  for (const BigInt& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<BigInt> CycInt::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return std::nullopt;
  }
  return coeffs_[0];
}

void CycInt::check_same_ring(const CycInt& b) const {
  if (ring_ != b.ring_) {
    throw CyclotomicError("ring mismatch: n = " + std::to_string(n()) + " vs " + std::to_string(b.n()));
  }
}

CycInt& CycInt::operator+=(const CycInt& b) {
  check_same_ring(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& b) {
  check_same_ring(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& b) { return *this = *this * b; }

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (BigInt& c : out.coeffs_) c = -c;
  return out;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_same_ring(b);
  const std::size_t phi = a.coeffs_.size();
  std::vector<BigInt> prod(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (!b.coeffs_[j].is_zero()) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  divide_out(prod, a.ring_->modulus());
  CycInt out(*a.ring_);
  out.coeffs_ = std::move(prod);
  return out;
}

CycInt operator*(const BigInt& m, CycInt a) {
  for (BigInt& c : a.coeffs_) c *= m;
  return a;
}

bool operator==(const CycInt& a, const CycInt& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

CycInt CycInt::mul_root(std::int64_t k) const {
  const std::uint32_t n = ring_->n();
  const std::int64_t shift = mod_n(k, n);
  if (shift == 0) return *this;
  std::vector<BigInt> v(n, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[(i + shift) % n] = coeffs_[i];
  CycInt out(*ring_);
  out.coeffs_ = ring_->reduce(std::move(v));
  return out;
}

CycInt CycInt::galois(std::int64_t k) const {
  const std::uint32_t n = ring_->n();
  const std::int64_t kk = mod_n(k, n);
  if (std::gcd(kk, static_cast<std::int64_t>(n)) != 1) {
    throw CyclotomicError("galois exponent " + std::to_string(k) + " is not coprime to " + std::to_string(n));
  }
  std::vector<BigInt> v(n, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[(i * kk) % n] += coeffs_[i];
  CycInt out(*ring_);
  out.coeffs_ = ring_->reduce(std::move(v));
  return out;
}

CycInt CycInt::exact_div_int(const BigInt& m) const {
  if (m.is_zero()) throw CyclotomicError("division by zero");
  CycInt out = *this;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    BigInt quot, rem;
    boost::multiprecision::divide_qr(coeffs_[i], m, quot, rem);
    if (!rem.is_zero()) throw NotDivisibleError(i, coeffs_[i], m);
    out.coeffs_[i] = std::move(quot);
  }
  return out;
}

std::string CycInt::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c.is_zero()) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += "z";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CycInt root_of_unity(std::uint32_t n, std::int64_t k) {
  const CyclotomicRing& ring = CyclotomicRing::get(n);
  return CycInt::from_integer(ring, 1).mul_root(k);
}

CycInt scalar_mul(const BigInt& m, const CycInt& a) { return m * a; }

CycInt exact_div_int(const CycInt& a, const BigInt& m) { return a.exact_div_int(m); }

CycInt galois(const CycInt& a, std::int64_t k) { return a.galois(k); }

std::optional<BigInt> as_integer(const CycInt& a) { return a.as_integer(); }

}  // namespace fqsum
