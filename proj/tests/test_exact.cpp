#include <doctest.h>

#include <cmath>
#include <random>

#include "charcorr/detail/fq_linalg.hpp"
#include "charcorr/exact.hpp"

using namespace charcorr;

namespace {

Cyc z(unsigned n, long k = 1) { return Cyc::root_of_unity(n, k); }

Cyc random_cyc(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::vector<Rat> w(n);
  for (auto& x : w) x = make_rat(coef(rng), 1 + static_cast<long>(rng() % 2));
  return Cyc::from_powers(n, w);
}

// naive oracle: smallest prime q = 1 mod e with q > 2*ceil(sqrt(n))
std::uint64_t dixon_oracle(std::uint64_t e, std::uint64_t n) {
  const auto bound = 2 * static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  for (std::uint64_t q = bound + 1;; ++q) {
    if (q % e != 1 % e) continue;
    bool prime = q > 1;
    for (std::uint64_t d = 2; d * d <= q && prime; ++d) prime = q % d != 0;
    if (prime) return q;
  }
}

}  // namespace

TEST_CASE("cyclotomic relations") {
  CHECK(z(3) + z(3, 2) == Cyc(-1));
  const Cyc s = Cyc(1) + z(3).scaled(2);
  CHECK(s * s == Cyc(-3));
  CHECK(z(8).galois(3) == z(8, 3));
  CHECK(z(8).conj() == z(8, 7));
  CHECK(z(4) * z(4) == Cyc(-1));
  CHECK(z(2) == Cyc(-1));
  CHECK(z(5) + z(5, 2) + z(5, 3) + z(5, 4) == Cyc(-1));
}

TEST_CASE("galois requires a unit exponent") {
  CHECK_THROWS_AS(z(8).galois(2), std::invalid_argument);
  CHECK_NOTHROW(Cyc(5).galois(2));
}

TEST_CASE("equality across conductors") {
  CHECK(z(12, 4) == z(3));
  CHECK(z(6) == Cyc(1) + z(3));
  CHECK(z(24, 3) == z(8));
  CHECK_FALSE(z(8) == z(8, 3));
}

TEST_CASE("minimal conductor and rendering") {
  CHECK((Cyc(1) + z(3).scaled(2)).str() == "1+2*z3");
  CHECK((Cyc(-1) - z(3).scaled(2)).str() == "-1-2*z3");
  CHECK(z(6).reduced().conductor() == 3);
  CHECK(z(6).str() == "1+z3");
  CHECK(z(12, 4).reduced().conductor() == 3);
  CHECK((z(8) + z(8, 7)).reduced().conductor() == 8);
  CHECK((z(24) + z(24, 5) + z(24, 19) + z(24, 23)).reduced().conductor() <= 24);
  CHECK(Cyc(0).str() == "0");
  CHECK(Cyc(make_rat(1, 2)).str() == "1/2");
  CHECK(z(8, 3).str() == "z8^3");
  CHECK((-z(4)).str() == "-z4");
  // 2 mod 4 conductors never survive reduction
  CHECK(z(10).reduced().conductor() == 5);
}

TEST_CASE("dixon prime") {
  CHECK(dixon_prime(12, 24) == 13);
  CHECK(dixon_prime(1, 1) == 3);
  CHECK(dixon_prime(21, 21) == 43);
  for (std::uint64_t e : {1, 2, 4, 6, 12, 24, 36, 72})
    for (std::uint64_t n : {1, 8, 24, 75, 648, 1296}) CHECK(dixon_prime(e, n) == dixon_oracle(e, n));
}

TEST_CASE("prime field") {
  const Fq f(13);
  CHECK(f.primitive_root() == 2);
  const auto w = f.root_of_unity(12);
  CHECK(f.pow(w, 12) == 1);
  CHECK(f.pow(w, 6) != 1);
  CHECK(f.mul(f.inv(5), 5) == 1);
  CHECK_THROWS(Fq(12));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (unsigned n : {3U, 4U, 8U, 12U, 24U}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Cyc a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).conj() == a.conj() + b.conj());
      CHECK(a.conj().conj() == a);
      // reduction preserves value
      CHECK(a.reduced() == a);
      // numerical oracle
      const auto x = (a * b).approx();
      const auto y = a.approx() * b.approx();
      CHECK(std::abs(x - y) < 1e-9);
    }
  }
}

TEST_CASE("galois automorphisms permute roots of unity and fix rationals") {
  const unsigned n = 24;
  for (long k = 1; k < n; ++k) {
    if (std::gcd(k, static_cast<long>(n)) != 1) continue;
    CHECK(Cyc(make_rat(7, 3)).galois(k) == Cyc(make_rat(7, 3)));
    for (long j = 0; j < n; ++j) CHECK(z(n, j).galois(k) == z(n, j * k));
  }
}

TEST_CASE("integer combinations of roots of unity round-trip") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (unsigned n : {3U, 5U, 8U, 9U, 12U, 15U}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<long> w(n);
      Cyc sum(0);
      std::complex<double> numeric{0, 0};
      for (unsigned k = 0; k < n; ++k) {
        w[k] = coef(rng);
        sum += z(n, k).scaled(w[k]);
        numeric += static_cast<double>(w[k]) * std::polar(1.0, 2 * M_PI * k / n);
      }
      const Cyc direct = Cyc::from_powers(n, w);
      CHECK(direct == sum);
      CHECK(direct.coeffs() == sum.embedded(direct.conductor()).coeffs());
      CHECK(std::abs(direct.approx() - numeric) < 1e-9);
      CHECK(std::abs(direct.reduced().approx() - numeric) < 1e-9);
    }
  }
}

TEST_CASE("characteristic polynomial agrees with det(xI - A)") {
  const Fq f(101);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 7;
    detail::FqMat a(n, detail::FqVec(n));
    for (auto& row : a)
      for (auto& x : row) x = rng() % 4 == 0 ? 0 : rng() % 101;
    const auto cp = detail::charpoly(f, a);
    REQUIRE(cp.size() == n + 1);
    for (std::uint64_t x : {0ULL, 1ULL, 5ULL, 77ULL}) {
      auto m = a;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = f.sub(i == j ? x : 0, a[i][j]);
      CHECK(detail::poly_eval(f, cp, x) == detail::determinant(f, m));
    }
  }
}

TEST_CASE("nullspace vectors are annihilated") {
  const Fq f(13);
  detail::FqMat a{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  const auto ns = detail::nullspace(f, a);
  REQUIRE(ns.size() == 1);
  for (const auto& row : a) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < 3; ++i) acc = f.add(acc, f.mul(row[i], ns[0][i]));
    CHECK(acc == 0);
  }
}
