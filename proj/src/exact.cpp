/**
 * @file exact.cpp
 * @brief Cyclotomic field arithmetic in the dense power basis.
 */
#include "orthochar/exact.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace orthochar {

long gcd_l(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_l(long a, long b) { return a / gcd_l(a, b) * b; }

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

namespace {

struct CycloData {
  long N = 1;
  long phi = 1;
  std::vector<long> poly;
  // powers[e] holds the power-basis coordinates of z_N^e for 0 <= e < N.
  std::vector<std::vector<long>> powers;
};

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
  long dn = static_cast<long>(num.size()) - 1, dd = static_cast<long>(den.size()) - 1;
  std::vector<long> quo(dn - dd + 1, 0);
  for (long i = dn; i >= dd; --i) {
    long c = num[i];
    quo[i - dd] = c;
    if (c == 0) continue;
    for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (long i = 0; i < dd; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return quo;
}

const CycloData& cyclo_data(long N) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<CycloData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return *it->second;

  auto data = std::make_unique<CycloData>();
  data->N = N;
  data->phi = euler_phi(N);
  std::vector<long> poly(N + 1, 0);
  poly[0] = -1;
  poly[N] = 1;
  for (long d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    auto itd = cache.find(d);
    if (itd == cache.end()) throw std::logic_error("cyclotomic cache out of order");
    poly = poly_div_exact(poly, itd->second->poly);
  }
  data->poly = poly;
  long phi = data->phi;
  data->powers.assign(N, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (long e = 0; e < N; ++e) {
    data->powers[e] = cur;
    std::vector<long> next(phi, 0);
    long top = cur[phi - 1];
    for (long i = phi - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (top != 0)
      for (long i = 0; i < phi; ++i) next[i] -= top * poly[i];
    cur = next;
  }
  auto& ref = *data;
  cache[N] = std::move(data);
  return ref;
}

// Warms the cache for every divisor of N in increasing order so that
// cyclo_data never needs a missing smaller entry.
const CycloData& cyclo(long N) {
  if (N < 1) throw std::invalid_argument("conductor must be positive");
  for (long d = 1; d < N; ++d)
    if (N % d == 0) cyclo_data(d);
  return cyclo_data(N);
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long N) { return cyclo(N).poly; }

Cyclotomic::Cyclotomic() : N_(1), c_(1, Rational(0)) {}
Cyclotomic::Cyclotomic(long v) : N_(1), c_(1, Rational(v)) {}
Cyclotomic::Cyclotomic(const Rational& v) : N_(1), c_(1, v) {}

Cyclotomic Cyclotomic::make(long N, const std::map<long, Rational>& terms) {
  const CycloData& d = cyclo(N);
  Cyclotomic r;
  r.N_ = N;
  r.c_.assign(d.phi, Rational(0));
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    long ee = ((e % N) + N) % N;
    const auto& pw = d.powers[ee];
    for (long i = 0; i < d.phi; ++i)
      if (pw[i] != 0) r.c_[i] += c * pw[i];
  }
  return r;
}

Cyclotomic Cyclotomic::zeta(long N, long e) { return make(N, {{e, Rational(1)}}); }

Cyclotomic Cyclotomic::lift(long M) const {
  if (M % N_ != 0)
    throw std::invalid_argument("cannot lift conductor " + std::to_string(N_) + " to " +
                                std::to_string(M));
  if (M == N_) return *this;
  const CycloData& d = cyclo(M);
  Cyclotomic r;
  r.N_ = M;
  r.c_.assign(d.phi, Rational(0));
  long step = M / N_;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& pw = d.powers[(static_cast<long>(i) * step) % M];
    for (long j = 0; j < d.phi; ++j)
      if (pw[j] != 0) r.c_[j] += c_[i] * pw[j];
  }
  return r;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (gcd_l(k, N_) != 1) throw std::invalid_argument("Galois exponent not coprime to conductor");
  if (N_ == 1) return *this;
  const CycloData& d = cyclo(N_);
  Cyclotomic r;
  r.N_ = N_;
  r.c_.assign(d.phi, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long e = ((static_cast<long>(i) * k) % N_ + N_) % N_;
    const auto& pw = d.powers[e];
    for (long j = 0; j < d.phi; ++j)
      if (pw[j] != 0) r.c_[j] += c_[i] * pw[j];
  }
  return r;
}

Cyclotomic Cyclotomic::conj() const { return galois(N_ - 1 == 0 ? 1 : N_ - 1); }

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value " + str() + " is not rational");
  return c_[0];
}

bool Cyclotomic::is_integer() const { return is_rational() && c_[0].get_den() == 1; }

Cyclotomic Cyclotomic::reduced() const {
  if (is_rational()) return Cyclotomic(c_[0]);
  for (long d = 3; d < N_; ++d) {
    if (N_ % d != 0 || d % 4 == 2) continue;
    bool invariant = true;
    for (long k = 1 + d; k < N_ && invariant; k += d)
      if (gcd_l(k, N_) == 1 && galois(k) != *this) invariant = false;
    if (!invariant) continue;
    // Solve lift_{d -> N}(y) = x by elimination over Q.
    const CycloData& dn = cyclo(N_);
    long pd = euler_phi(d), pn = dn.phi, step = N_ / d;
    std::vector<std::vector<Rational>> a(pn, std::vector<Rational>(pd + 1));
    for (long j = 0; j < pd; ++j) {
      const auto& pw = dn.powers[(j * step) % N_];
      for (long i = 0; i < pn; ++i) a[i][j] = pw[i];
    }
    for (long i = 0; i < pn; ++i) a[i][pd] = c_[i];
    long row = 0;
    std::vector<long> pivcol;
    for (long col = 0; col < pd && row < pn; ++col) {
      long piv = -1;
      for (long i = row; i < pn; ++i)
        if (a[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(a[piv], a[row]);
      Rational inv = 1 / a[row][col];
      for (long j = col; j <= pd; ++j) a[row][j] *= inv;
      for (long i = 0; i < pn; ++i) {
        if (i == row || a[i][col] == 0) continue;
        Rational f = a[i][col];
        for (long j = col; j <= pd; ++j) a[i][j] -= f * a[row][j];
      }
      pivcol.push_back(col);
      ++row;
    }
    Cyclotomic r;
    r.N_ = d;
    r.c_.assign(pd, Rational(0));
    for (size_t i = 0; i < pivcol.size(); ++i) r.c_[pivcol[i]] = a[i][pd];
    if (r.lift(N_) != *this) throw std::logic_error("conductor reduction failed");
    return r;
  }
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.N_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (N_ != o.N_) {
    long M = lcm_l(N_, o.N_);
    if (M != N_) *this = lift(M);
    if (M != o.N_) return *this += o.lift(M);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& r) {
  if (r == 0) throw std::domain_error("division of a cyclotomic by zero");
  for (auto& c : c_) c /= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.N_ == 1) return *this *= o.c_[0];
  if (N_ == 1) {
    Rational r = c_[0];
    *this = o;
    return *this *= r;
  }
  long M = lcm_l(N_, o.N_);
  Cyclotomic a = lift(M), b = o.lift(M);
  const CycloData& d = cyclo(M);
  long phi = d.phi;
  std::vector<Rational> acc(2 * phi - 1, Rational(0));
  for (long i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (long j = 0; j < phi; ++j)
      if (b.c_[j] != 0) acc[i + j] += a.c_[i] * b.c_[j];
  }
  N_ = M;
  c_.assign(acc.begin(), acc.begin() + phi);
  for (long e = phi; e < 2 * phi - 1; ++e) {
    if (acc[e] == 0) continue;
    const auto& pw = d.powers[e % M];
    for (long j = 0; j < phi; ++j)
      if (pw[j] != 0) c_[j] += acc[e] * pw[j];
  }
  return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (N_ == o.N_) return c_ == o.c_;
  if (o.N_ == 1 || N_ == 1) {
    if (!is_rational() || !o.is_rational()) return false;
    return c_[0] == o.c_[0];
  }
  long M = lcm_l(N_, o.N_);
  return lift(M).c_ == o.lift(M).c_;
}

nlohmann::json Cyclotomic::to_json() const {
  nlohmann::json terms = nlohmann::json::object();
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) terms[std::to_string(i)] = rational_to_string(c_[i]);
  return {{"N", N_}, {"terms", terms}};
}

Cyclotomic Cyclotomic::from_json(const nlohmann::json& j) {
  long N = j.at("N").get<long>();
  std::map<long, Rational> terms;
  for (const auto& [k, v] : j.at("terms").items())
    terms[std::stol(k)] = rational_from_string(v.get<std::string>());
  return make(N, terms);
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    Rational a = abs(c_[i]);
    if (i == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << N_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace orthochar
