/**
 * @file ff.cpp
 * @brief Table construction for GF(p^k).
 */
#include "orthochar/ff.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "orthochar/exact.hpp"

namespace orthochar {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Canonical moduli, lowest coefficient first; these agree with the Conway
// polynomials for the extension fields of order at most 16.
std::vector<int> canonical_modulus(int p, int k) {
  if (k == 1) return {0, 1};
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},    {{2, 3}, {1, 1, 0, 1}},
      {{3, 2}, {2, 2, 1}},
  };
  auto it = table.find({p, k});
  if (it == table.end())
    throw std::invalid_argument("no canonical modulus for GF(" + std::to_string(p) + "^" +
                                std::to_string(k) + ") within the supported range");
  return it->second;
}

std::vector<int> digits(int code, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int code = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p + d[i];
  return code;
}

}  // namespace

std::shared_ptr<const Field> Field::make(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1 || k > 3) throw std::invalid_argument("extension degree must lie in [1,3]");
  int q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > kMaxFieldOrder) throw std::invalid_argument("field order exceeds the configured bound");

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->k_ = k;
  f->q_ = q;
  f->modulus_ = canonical_modulus(p, k);
  f->kind_ = k == 1 ? Kind::Prime : (p == 2 ? Kind::Char2 : Kind::General);

  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p, k);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p, k);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      f->add_[a * kMaxFieldOrder + b] = static_cast<uint8_t>(undigits(s, p));

      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int d = 2 * k - 2; d >= k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        for (int i = 0; i <= k; ++i)
          prod[d - k + i] = ((prod[d - k + i] - c * f->modulus_[i]) % p + p) % p;
      }
      prod.resize(k);
      f->mul_[a * kMaxFieldOrder + b] = static_cast<uint8_t>(undigits(prod, p));
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (f->add_[a * kMaxFieldOrder + b] == 0) f->neg_[a] = static_cast<uint8_t>(b);
      if (f->mul_[a * kMaxFieldOrder + b] == 1) f->inv_[a] = static_cast<uint8_t>(b);
    }
  }
  for (int a = 0; a < q; ++a) {
    // Tr(a) = a + a^p + ... + a^{p^{k-1}}, which lies in the prime field.
    uint8_t t = 0, x = static_cast<uint8_t>(a);
    for (int i = 0; i < k; ++i) {
      t = f->add(t, x);
      x = f->pow(x, p);
    }
    if (t >= p) throw std::logic_error("trace left the prime field");
    f->trace_[a] = t;
  }
  for (int a = 1; a < q; ++a) f->square_[f->mul(a, a)] = true;
  for (int g = 1; g < q; ++g) {
    int ord = 1;
    uint8_t x = static_cast<uint8_t>(g);
    while (x != 1) {
      x = f->mul(x, static_cast<uint8_t>(g));
      ++ord;
    }
    if (ord == q - 1) {
      f->primitive_ = static_cast<uint8_t>(g);
      break;
    }
  }
  uint8_t x = 1;
  for (int e = 0; e < q - 1; ++e) {
    f->log_[x] = static_cast<uint8_t>(e);
    x = f->mul(x, f->primitive_);
  }
  for (int a = 1; a < q; ++a)
    if (!f->square_[a]) {
      f->nonsquare_ = static_cast<uint8_t>(a);
      break;
    }
  return f;
}

uint8_t Field::inv(uint8_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  return inv_[a];
}

uint8_t Field::pow(uint8_t a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  uint8_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint8_t Field::from_int(long x) const { return static_cast<uint8_t>(((x % p_) + p_) % p_); }

FieldPtr field_make(int p, int k) { return Field::make(p, k); }

FieldPtr field_of_order(int q) {
  static std::mutex mu;
  static std::map<int, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    int k = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) break;
    auto f = Field::make(p, k);
    cache[q] = f;
    return f;
  }
  throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
}

FieldElement find_nu(const Field& f) {
  for (int nu = 0; nu < f.q(); ++nu) {
    bool has_root = false;
    for (int x = 0; x < f.q() && !has_root; ++x) {
      uint8_t v = f.add(f.add(f.mul(x, x), static_cast<uint8_t>(x)), static_cast<uint8_t>(nu));
      has_root = v == 0;
    }
    if (!has_root) return FieldElement(&f, static_cast<uint8_t>(nu));
  }
  throw std::logic_error("no irreducible X^2+X+nu found");
}

Cyclotomic AdditiveCharacter::value(uint8_t x) const {
  return Cyclotomic::zeta(f_->p(), exponent(x));
}

AdditiveCharacter additive_char(const Field& f) { return AdditiveCharacter(&f); }

}  // namespace orthochar
