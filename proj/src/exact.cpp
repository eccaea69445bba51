#include "charcorr/exact.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace charcorr {

std::string to_string(const Rat& r) { return r.get_str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / gcd_u64(a, b) * b; }

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t isqrt_ceil(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while (r * r < n) ++r;
  return r;
}

}  // namespace

Fq::Fq(std::uint64_t q) : q_(q) {
  if (!is_prime(q)) throw std::invalid_argument("Fq modulus must be prime");
  if (q >= (1ULL << 32)) throw std::invalid_argument("Fq modulus too large");
}

Fq::value_type Fq::reduce(std::int64_t x) const {
  auto m = static_cast<std::int64_t>(q_);
  auto r = x % m;
  return static_cast<value_type>(r < 0 ? r + m : r);
}

Fq::value_type Fq::pow(value_type a, std::uint64_t e) const {
  value_type result = 1 % q_;
  a %= q_;
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

Fq::value_type Fq::inv(value_type a) const {
  if (a % q_ == 0) throw std::domain_error("Fq: inverse of zero");
  return pow(a, q_ - 2);
}

Fq::value_type Fq::primitive_root() const {
  if (q_ == 2) return 1;
  const auto factors = prime_factors(q_ - 1);
  for (value_type g = 2; g < q_; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](std::uint64_t f) { return pow(g, (q_ - 1) / f) != 1; });
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

Fq::value_type Fq::root_of_unity(std::uint64_t m) const {
  if ((q_ - 1) % m != 0) throw std::invalid_argument("Fq: m does not divide q-1");
  return pow(primitive_root(), (q_ - 1) / m);
}

std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order) {
  if (exponent == 0 || order == 0) throw std::invalid_argument("dixon_prime: zero argument");
  const std::uint64_t bound = 2 * isqrt_ceil(order);
  for (std::uint64_t t = 1;; ++t) {
    const std::uint64_t q = exponent * t + 1;
    if (q > bound && is_prime(q)) return q;
  }
}

// ---------------------------------------------------------------------------
// Cyclotomic fields

namespace {

struct CycloData {
  unsigned n = 1;
  unsigned phi = 1;
  std::vector<long> poly;  // Phi_n, low degree first, monic
  // red[i] = x^i mod Phi_n, for i in [0, n)
  std::vector<std::vector<long>> red;
};

std::vector<long> poly_exact_div(std::vector<long> num, const std::vector<long>& den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

class CycloCache {
 public:
  const CycloData& get(unsigned n) {
    std::lock_guard lock(mu_);
    return get_locked(n);
  }

 private:
  const CycloData& get_locked(unsigned n) {
    if (auto it = data_.find(n); it != data_.end()) return *it->second;
    auto d = std::make_unique<CycloData>();
    d->n = n;
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned k = 1; k < n; ++k)
      if (n % k == 0) p = poly_exact_div(p, get_locked(k).poly);
    d->poly = p;
    d->phi = static_cast<unsigned>(p.size() - 1);
    d->red.assign(n, std::vector<long>(d->phi, 0));
    for (unsigned i = 0; i < n; ++i) {
      if (i < d->phi) {
        d->red[i][i] = 1;
        continue;
      }
      const auto& prev = d->red[i - 1];
      auto& cur = d->red[i];
      const long top = prev[d->phi - 1];
      for (unsigned j = d->phi; j-- > 1;) cur[j] = prev[j - 1];
      cur[0] = 0;
      for (unsigned j = 0; j < d->phi; ++j) cur[j] -= top * p[j];
    }
    auto [it, inserted] = data_.emplace(n, std::move(d));
    return *it->second;
  }

  std::mutex mu_;
  std::map<unsigned, std::unique_ptr<CycloData>> data_;
};

const CycloData& cyclo(unsigned n) {
  static CycloCache cache;
  return cache.get(n);
}

bool is_zero(const Rat& r) { return sgn(r) == 0; }

std::vector<Rat> reduce_bucket(const CycloData& d, const std::vector<Rat>& bucket) {
  std::vector<Rat> out(d.phi);
  for (unsigned i = 0; i < bucket.size(); ++i) {
    if (is_zero(bucket[i])) continue;
    if (i < d.phi) {
      out[i] += bucket[i];
      continue;
    }
    const auto& row = d.red[i];
    for (unsigned j = 0; j < d.phi; ++j)
      if (row[j] != 0) out[j] += bucket[i] * row[j];
  }
  return out;
}

// Solves for the coordinates of an element of Q(zeta_n) in the power basis
// of Q(zeta_d), d | n, given that it lies there.
struct Projection {
  std::vector<unsigned> rows;
  std::vector<std::vector<Rat>> inverse;  // phi(d) x phi(d)
};

class ProjectionCache {
 public:
  const Projection& get(unsigned n, unsigned d) {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(n, d);
    if (auto it = data_.find(key); it != data_.end()) return *it->second;
    auto proj = build(n, d);
    auto [it, inserted] = data_.emplace(key, std::make_unique<Projection>(std::move(proj)));
    return *it->second;
  }

 private:
  static Projection build(unsigned n, unsigned d) {
    const auto& big = cyclo(n);
    const auto& small = cyclo(d);
    const unsigned s = n / d;
    const unsigned m = small.phi;
    // column j of B = coordinates of zeta_n^(j*s)
    std::vector<std::vector<Rat>> b(big.phi, std::vector<Rat>(m));
    for (unsigned j = 0; j < m; ++j) {
      const auto& col = big.red[(j * s) % n];
      for (unsigned i = 0; i < big.phi; ++i) b[i][j] = col[i];
    }
    // pick m independent rows greedily
    Projection proj;
    std::vector<std::vector<Rat>> basis;  // echelonized copies of selected rows
    std::vector<unsigned> pivots;
    for (unsigned i = 0; i < big.phi && proj.rows.size() < m; ++i) {
      auto v = b[i];
      for (std::size_t t = 0; t < basis.size(); ++t) {
        if (is_zero(v[pivots[t]])) continue;
        Rat f = v[pivots[t]] / basis[t][pivots[t]];
        for (unsigned c = 0; c < m; ++c) v[c] -= f * basis[t][c];
      }
      auto it = std::find_if(v.begin(), v.end(), [](const Rat& x) { return !is_zero(x); });
      if (it == v.end()) continue;
      pivots.push_back(static_cast<unsigned>(it - v.begin()));
      basis.push_back(std::move(v));
      proj.rows.push_back(i);
    }
    if (proj.rows.size() != m) throw std::logic_error("cyclotomic projection: rank deficiency");
    // invert the selected square block with Gauss-Jordan
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(2 * m));
    for (unsigned r = 0; r < m; ++r) {
      for (unsigned c = 0; c < m; ++c) a[r][c] = b[proj.rows[r]][c];
      a[r][m + r] = 1;
    }
    for (unsigned c = 0; c < m; ++c) {
      unsigned piv = c;
      while (is_zero(a[piv][c])) ++piv;
      std::swap(a[piv], a[c]);
      Rat f = 1 / a[c][c];
      for (auto& x : a[c]) x *= f;
      for (unsigned r = 0; r < m; ++r) {
        if (r == c || is_zero(a[r][c])) continue;
        Rat g = a[r][c];
        for (unsigned k = 0; k < 2 * m; ++k) a[r][k] -= g * a[c][k];
      }
    }
    proj.inverse.assign(m, std::vector<Rat>(m));
    for (unsigned r = 0; r < m; ++r)
      for (unsigned c = 0; c < m; ++c) proj.inverse[r][c] = a[r][m + c];
    return proj;
  }

  std::mutex mu_;
  std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Projection>> data_;
};

const Projection& projection(unsigned n, unsigned d) {
  static ProjectionCache cache;
  return cache.get(n, d);
}

}  // namespace

Cyc Cyc::from_coeffs(unsigned n, std::vector<Rat> coeffs) {
  if (n == 0) throw std::invalid_argument("Cyc: conductor 0");
  if (coeffs.size() != cyclo(n).phi) throw std::invalid_argument("Cyc: wrong coefficient count");
  Cyc out(n, std::move(coeffs));
  if (out.n_ != 1 && out.is_rational()) return Cyc(out.c_[0]);
  return out;
}

Cyc Cyc::from_powers(unsigned n, const std::vector<Rat>& weights) {
  if (n == 0) throw std::invalid_argument("Cyc: conductor 0");
  std::vector<Rat> bucket(n);
  for (std::size_t k = 0; k < weights.size(); ++k) bucket[k % n] += weights[k];
  return from_coeffs(n, reduce_bucket(cyclo(n), bucket));
}

Cyc Cyc::from_powers(unsigned n, const std::vector<long>& weights) {
  std::vector<Rat> w(weights.begin(), weights.end());
  return from_powers(n, w);
}

Cyc Cyc::root_of_unity(unsigned n, long k) {
  if (n == 0) throw std::invalid_argument("Cyc: conductor 0");
  long e = k % static_cast<long>(n);
  if (e < 0) e += n;
  std::vector<Rat> w(static_cast<std::size_t>(e) + 1);
  w[static_cast<std::size_t>(e)] = 1;
  return from_powers(n, w);
}

bool Cyc::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return charcorr::is_zero(x); });
}

bool Cyc::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& x) { return charcorr::is_zero(x); });
}

std::optional<Rat> Cyc::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

bool Cyc::is_integer_rational() const {
  return is_rational() && c_[0].get_den() == 1;
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyc Cyc::embedded(unsigned n) const {
  if (n % n_ != 0) throw std::invalid_argument("Cyc::embedded: not a multiple of the conductor");
  if (n == n_) return *this;
  const unsigned s = n / n_;
  std::vector<Rat> bucket(n);
  for (unsigned k = 0; k < c_.size(); ++k)
    if (!charcorr::is_zero(c_[k])) bucket[k * s] = c_[k];
  return Cyc(n, reduce_bucket(cyclo(n), bucket));
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (o.n_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (n_ != o.n_) {
    const auto n = static_cast<unsigned>(lcm_u64(n_, o.n_));
    *this = embedded(n);
    if (o.n_ != n) return *this += o.embedded(n);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  if (is_rational()) *this = Cyc(c_[0]);
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc Cyc::scaled(const Rat& r) const {
  Cyc out = *this;
  for (auto& x : out.c_) x *= r;
  return out;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  if (o.n_ == 1) return *this = scaled(o.c_[0]);
  if (n_ == 1) return *this = o.scaled(c_[0]);
  const auto n = static_cast<unsigned>(lcm_u64(n_, o.n_));
  const Cyc a = embedded(n);
  const Cyc b = o.embedded(n);
  std::vector<Rat> bucket(n);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (charcorr::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (charcorr::is_zero(b.c_[j])) continue;
      bucket[(i + j) % n] += a.c_[i] * b.c_[j];
    }
  }
  *this = from_coeffs(n, reduce_bucket(cyclo(n), bucket));
  return *this;
}

Cyc Cyc::galois(long k) const {
  const long n = n_;
  long e = k % n;
  if (e < 0) e += n;
  if (gcd_u64(static_cast<std::uint64_t>(e == 0 ? n : e), n_) != 1 && n_ != 1)
    throw std::invalid_argument("Cyc::galois: exponent not coprime to conductor");
  if (n_ == 1) return *this;
  std::vector<Rat> bucket(n_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!charcorr::is_zero(c_[i])) bucket[(i * static_cast<std::size_t>(e)) % n_] += c_[i];
  return from_coeffs(n_, reduce_bucket(cyclo(n_), bucket));
}

Cyc Cyc::reduced() const {
  if (n_ == 1) return *this;
  if (is_rational()) return Cyc(c_[0]);
  for (unsigned d = 3; d < n_; ++d) {
    if (n_ % d != 0 || d % 4 == 2) continue;
    bool fixed = true;
    for (unsigned k = d + 1; k < n_ && fixed; k += d)
      if (gcd_u64(k, n_) == 1) fixed = (galois(k) == *this);
    if (!fixed) continue;
    const auto& proj = projection(n_, d);
    const auto m = static_cast<unsigned>(proj.rows.size());
    std::vector<Rat> out(m);
    for (unsigned r = 0; r < m; ++r)
      for (unsigned c = 0; c < m; ++c) out[r] += proj.inverse[r][c] * c_[proj.rows[c]];
    return Cyc(d, std::move(out));
  }
  return *this;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  if (a.n_ == 1 && !b.is_rational()) return false;
  if (b.n_ == 1 && !a.is_rational()) return false;
  const auto n = static_cast<unsigned>(lcm_u64(a.n_, b.n_));
  return a.embedded(n).c_ == b.embedded(n).c_;
}

std::strong_ordering operator<=>(const Cyc& a, const Cyc& b) {
  const Cyc ra = a.reduced();
  const Cyc rb = b.reduced();
  if (auto c = ra.n_ <=> rb.n_; c != 0) return c;
  for (std::size_t i = 0; i < ra.c_.size(); ++i) {
    const int c = cmp(ra.c_[i], rb.c_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyc::str() const {
  const Cyc r = reduced();
  std::string out;
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    const Rat& c = r.c_[i];
    if (charcorr::is_zero(c)) continue;
    std::string term;
    if (i == 0) {
      term = c.get_str();
    } else {
      std::string zeta = "z" + std::to_string(r.n_);
      if (i > 1) zeta += "^" + std::to_string(i);
      if (c == 1)
        term = zeta;
      else if (c == -1)
        term = "-" + zeta;
      else
        term = c.get_str() + "*" + zeta;
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::complex<double> Cyc::approx() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
    z += c_[i].get_d() * std::polar(1.0, angle);
  }
  return z;
}

}  // namespace charcorr
