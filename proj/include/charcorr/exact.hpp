#pragma once

// Exact arithmetic: GMP-backed rationals, prime fields for the modular
// phase of the character-table computation, and cyclotomic numbers.

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace charcorr {

using Rat = mpq_class;

std::string to_string(const Rat& r);

/// num/den in lowest terms (the two-argument mpq_class constructor does not
/// canonicalize).
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_prime(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t euler_phi(std::uint64_t n);

/// Arithmetic in the prime field F_q. Elements are plain residues in [0, q).
class Fq {
 public:
  using value_type = std::uint64_t;

  explicit Fq(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }

  value_type reduce(std::int64_t x) const;
  value_type add(value_type a, value_type b) const { return a + b >= q_ ? a + b - q_ : a + b; }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + q_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : q_ - a; }
  value_type mul(value_type a, value_type b) const { return (a * b) % q_; }
  value_type pow(value_type a, std::uint64_t e) const;
  value_type inv(value_type a) const;

  /// Smallest positive primitive root of q.
  value_type primitive_root() const;

  /// The primitive m-th root of unity z^((q-1)/m), z the smallest primitive
  /// root. Requires m | q-1.
  value_type root_of_unity(std::uint64_t m) const;

 private:
  std::uint64_t q_;
};

/// Smallest prime q with q ≡ 1 (mod exponent) and q > 2*ceil(sqrt(order)).
std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order);

/// An element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1)
/// modulo the n-th cyclotomic polynomial.
///
/// Arithmetic between values of different conductors happens in the least
/// common conductor; nothing is reduced to the minimal conductor until
/// `reduced()` is asked for (printing and ordering do this).
class Cyc {
 public:
  Cyc() : n_(1), c_(1) {}
  Cyc(long v) : n_(1), c_{Rat(v)} {}  // NOLINT(google-explicit-constructor)
  Cyc(const Rat& v) : n_(1), c_{v} {}  // NOLINT(google-explicit-constructor)

  /// zeta_n^k.
  static Cyc root_of_unity(unsigned n, long k);

  /// sum_k weights[k] * zeta_n^k for k in [0, weights.size()); exponents are
  /// taken modulo n.
  static Cyc from_powers(unsigned n, const std::vector<Rat>& weights);
  static Cyc from_powers(unsigned n, const std::vector<long>& weights);

  /// Raw constructor from power-basis coordinates (length phi(n)).
  static Cyc from_coeffs(unsigned n, std::vector<Rat> coeffs);

  unsigned conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rat> as_rational() const;
  bool is_integer_rational() const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }

  Cyc scaled(const Rat& r) const;

  /// Complex conjugation, zeta -> zeta^-1.
  Cyc conj() const { return galois(-1); }
  /// zeta_n -> zeta_n^k; k must be coprime to the conductor.
  Cyc galois(long k) const;

  /// Re-expressed in Q(zeta_m) for the minimal conductor m (never 2 mod 4).
  Cyc reduced() const;
  /// Re-expressed in Q(zeta_n) for a multiple n of the current conductor.
  Cyc embedded(unsigned n) const;

  friend bool operator==(const Cyc& a, const Cyc& b);
  /// Total order on minimal-conductor representations: conductor first, then
  /// coefficients lexicographically.
  friend std::strong_ordering operator<=>(const Cyc& a, const Cyc& b);

  /// Integer combinations of powers of zeta, e.g. "1+2*z3", "-z8^3".
  std::string str() const;
  std::complex<double> approx() const;

 private:
  Cyc(unsigned n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}

  unsigned n_;
  std::vector<Rat> c_;
};

}  // namespace charcorr
