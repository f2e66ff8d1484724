#pragma once

// Exact integer and rational helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modbrauer {

using Integer = mpz_class;
using Rational = mpq_class;

/// Trial divisors stop here; a cofactor left over is accepted as prime only
/// when it is below the square of this bound.
inline constexpr std::int64_t kTrialDivisionBound = 10'000'000;

/// p-adic valuation of a rational. Zero has infinite valuation, which is a
/// separate state rather than a sentinel number.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation finite(long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  /// Throws if infinite.
  long value() const;

  bool operator==(const Valuation&) const = default;

 private:
  Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
  bool infinite_;
  long value_;
};

struct PrimePower {
  std::int64_t prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

bool is_prime(std::int64_t n);

/// Factorization of |n| by trial division, primes ascending. n = 0 is an
/// invalid argument; |n| = 1 gives an empty list. Throws kScope when a
/// cofactor cannot be certified prime within kTrialDivisionBound.
std::vector<PrimePower> factor_integer(const Integer& n);
std::vector<PrimePower> factor_integer(std::int64_t n);

/// Distinct primes dividing numerator or denominator of q (q != 0).
std::vector<std::int64_t> prime_support(const Rational& q);

Valuation rational_valuation(const Rational& q, std::int64_t p);
long integer_valuation(const Integer& n, std::int64_t p);

/// q / p^{v_p(q)}; q must be nonzero.
Rational strip_prime(const Rational& q, std::int64_t p);

/// Residue of the p-adic unit q modulo m (a power of p, or any m coprime to
/// the denominator). Result in [0, m).
std::int64_t residue_mod(const Rational& q, std::int64_t m);

bool is_squarefree(std::int64_t n);
bool is_perfect_square(const Integer& n);
/// Squarefree part with sign: d = s * m^2 with s squarefree.
std::int64_t squarefree_part(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);
std::int64_t ipow(std::int64_t base, int exp);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// Accepts "n", "-n", "n/d"; result is canonical. Throws kParse otherwise.
Rational parse_rational(std::string_view text);
/// Canonical text: "n" or "n/d" with d > 1.
std::string rational_to_string(const Rational& q);

}  // namespace modbrauer
