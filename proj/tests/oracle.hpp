#pragma once

// Brute-force reference implementations, written without any of the library's
// tables: fields as coefficient vectors, discrete logs by walking powers,
// cyclotomic reduction by a Moebius-product Phi_n. Slow and obvious.

#include "fqsum/cyclotomic.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;  // low-to-high

inline void trim(Poly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

// Exact division by a monic polynomial; throws if there is a remainder.
inline Poly div_exact(Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  if (a.size() - 1 < dm) throw std::logic_error("degree");
  Poly quot(a.size() - dm, 0);
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::int64_t c = a[i];
    quot[i - dm] = c;
    for (std::size_t k = 0; k <= dm; ++k) a[i - dm + k] -= c * m[k];
  }
  for (std::int64_t c : a)
    if (c != 0) throw std::logic_error("remainder");
  return quot;
}

inline Poly rem_monic(Poly a, const Poly& m) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= dm; ++k) a[i - dm + k] -= c * m[k];
  }
  a.resize(dm, 0);
  return a;
}

inline int mobius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}.
inline Poly cyclotomic(int n) {
  Poly num{1}, den{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    Poly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    const int mu = mobius(n / d);
    if (mu == 1) num = mul(num, f);
    if (mu == -1) den = mul(den, f);
  }
  return div_exact(num, den);
}

// Canonical power-basis coefficients of sum_j counts[j] zeta_n^j.
inline Poly reduce_counts(const std::vector<std::int64_t>& counts, int n) {
  static std::map<int, Poly> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, cyclotomic(n)).first;
  return rem_monic(counts, it->second);
}

inline bool equals(const fqsum::CycInt& v, const Poly& expected) {
  if (v.coeffs().size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (v.coeffs()[i] != fqsum::BigInt(expected[i])) return false;
  return true;
}

// F_{p^r} as F_p[x]/(m) on coefficient vectors.
struct Field {
  int p = 0;
  int r = 0;
  int q = 0;
  std::vector<int> modulus;  // monic, size r + 1

  using Elem = std::vector<int>;  // size r

  int code(const Elem& a) const {
    int c = 0;
    for (int k = r; k-- > 0;) c = c * p + a[k];
    return c;
  }
  Elem elem(int code) const {
    Elem a(r);
    for (int k = 0; k < r; ++k, code /= p) a[k] = code % p;
    return a;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem c(r);
    for (int k = 0; k < r; ++k) c[k] = (a[k] + b[k]) % p;
    return c;
  }
  Elem neg(const Elem& a) const {
    Elem c(r);
    for (int k = 0; k < r; ++k) c[k] = (p - a[k]) % p;
    return c;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<int> c(2 * r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    for (int i = 2 * r - 1; i >= r; --i) {
      const int t = c[i];
      if (!t) continue;
      for (int k = 0; k <= r; ++k) c[i - r + k] = ((c[i - r + k] - t * modulus[k]) % p + p) % p;
    }
    c.resize(r);
    return c;
  }
  int add(int a, int b) const { return code(add(elem(a), elem(b))); }
  int mul(int a, int b) const { return code(mul(elem(a), elem(b))); }
  int neg(int a) const { return code(neg(elem(a))); }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int order(int a) const {
    if (a == 0) return 0;
    int x = a, k = 1;
    while (x != 1) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }
};

// Ordering used for both the modulus and the generator: lexicographic on the
// coefficient tuple (c_0, ..., c_{r-1}) with c_0 compared first.
inline std::vector<int> tuple_at(int p, int r, int rank) {
  std::vector<int> c(r);
  for (int k = r; k-- > 0; rank /= p) c[k] = rank % p;
  return c;
}

// F_p[x]/(m) is a field iff it has no zero divisors.
inline bool quotient_is_domain(const Field& f) {
  for (int a = 1; a < f.q; ++a)
    for (int b = 1; b < f.q; ++b)
      if (f.mul(a, b) == 0) return false;
  return true;
}

inline Field make_field(int p, int r) {
  Field f{p, r, 1, {}};
  for (int k = 0; k < r; ++k) f.q *= p;
  for (int rank = 0; rank < f.q; ++rank) {
    f.modulus = tuple_at(p, r, rank);
    f.modulus.push_back(1);
    if (quotient_is_domain(f)) return f;
  }
  throw std::logic_error("no irreducible polynomial");
}

inline int first_generator_code(const Field& f) {
  for (int rank = 0; rank < f.q; ++rank) {
    const int c = f.code(tuple_at(f.p, f.r, rank));
    if (f.order(c) == f.q - 1) return c;
  }
  throw std::logic_error("no generator");
}

// Characters relative to a given generator code; values as exponent histograms.
struct Chars {
  const Field& f;
  int n;
  std::vector<int> log;  // by code, -1 for zero

  Chars(const Field& field, int generator) : f(field), n(field.q - 1), log(field.q, -1) {
    int x = 1;
    for (int k = 0; k < n; ++k) {
      log[x] = k;
      x = f.mul(x, generator);
    }
  }
  // exponent of chi_e(x), or nullopt for chi(0) = 0
  std::optional<int> value(int e, int x) const {
    if (x == 0) return std::nullopt;
    return static_cast<int>((static_cast<long long>(e) * log[x]) % n);
  }
  int conj(int e) const { return (n - e % n) % n; }
  int minus_one() const { return f.neg(1); }

  // sum over u of prod chi_{e_i}(arg_i(u)); each factor given as (exponent, argument code)
  template <typename Terms>
  Poly sum_over_u(Terms&& terms_of_u) const {
    std::vector<std::int64_t> counts(n, 0);
    for (int u = 0; u < f.q; ++u) {
      long long total = 0;
      bool zero = false;
      for (auto [e, arg] : terms_of_u(u)) {
        auto v = value(e, arg);
        if (!v) {
          zero = true;
          break;
        }
        total += *v;
      }
      if (!zero) ++counts[total % n];
    }
    return reduce_counts(counts, n);
  }

  Poly scale_by_root(const Poly& a, std::optional<int> root) const {
    std::vector<std::int64_t> counts(n, 0);
    if (!root) return reduce_counts(counts, n);
    // a is in power basis; multiply by zeta^root as a group-ring vector
    for (std::size_t j = 0; j < a.size(); ++j) counts[(j + *root) % n] += a[j];
    return reduce_counts(counts, n);
  }

  Poly jacobi(int a, int b) const {
    return sum_over_u([&](int u) {
      return std::vector<std::pair<int, int>>{{a, u}, {b, f.sub(1, u)}};
    });
  }
  Poly binom(int a, int b) const { return scale_by_root(jacobi(a, conj(b)), value(b, minus_one())); }

  Poly f21(int A, int B, int C, int x) const {
    if (x == 0) return reduce_counts(std::vector<std::int64_t>(n, 0), n);
    const Poly s = sum_over_u([&](int u) {
      return std::vector<std::pair<int, int>>{
          {B, u}, {(conj(B) + C) % n, f.sub(1, u)}, {conj(A), f.sub(1, f.mul(u, x))}};
    });
    return scale_by_root(s, value((B + C) % n, minus_one()));
  }

  Poly appell(int A, int B, int Bp, int C, int x, int y) const {
    if (x == 0 || y == 0) return reduce_counts(std::vector<std::int64_t>(n, 0), n);
    const Poly s = sum_over_u([&](int u) {
      return std::vector<std::pair<int, int>>{{A, u},
                                              {(conj(A) + C) % n, f.sub(1, u)},
                                              {conj(B), f.sub(1, f.mul(u, x))},
                                              {conj(Bp), f.sub(1, f.mul(u, y))}};
    });
    return scale_by_root(s, value((A + C) % n, minus_one()));
  }
};

}  // namespace oracle
