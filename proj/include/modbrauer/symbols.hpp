#pragma once

// Quadratic residue and Hilbert symbols over Q.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "modbrauer/arith.hpp"

namespace modbrauer {

/// An element of {+1, -1}.
class Sign {
 public:
  static Sign plus() { return Sign(1); }
  static Sign minus() { return Sign(-1); }
  static Sign from_parity(long e) { return Sign(e % 2 == 0 ? 1 : -1); }

  int value() const { return v_; }
  bool is_plus() const { return v_ == 1; }
  bool is_minus() const { return v_ == -1; }
  Sign operator*(Sign o) const { return Sign(v_ * o.v_); }
  Sign& operator*=(Sign o) { v_ *= o.v_; return *this; }
  bool operator==(const Sign&) const = default;

 private:
  explicit Sign(int v) : v_(v) {}
  int v_;
};

/// A place of Q: a prime or infinity. Finite places sort by prime, infinity last.
class Place {
 public:
  static Place finite(std::int64_t p);  // throws unless p is prime
  static Place infinity() { return Place(0); }

  bool is_infinite() const { return p_ == 0; }
  std::int64_t prime() const;
  /// The prime, or "oo" (or the glyph when pretty).
  std::string to_string(bool pretty = false) const;

  std::strong_ordering operator<=>(const Place& o) const;
  bool operator==(const Place& o) const { return p_ == o.p_; }

 private:
  explicit Place(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

enum class Residue { kZero, kPlus, kMinus };

/// (a/p) for an odd prime p; kZero iff p divides a.
Residue legendre(const Integer& a, std::int64_t p);
/// Same for a rational whose denominator is prime to p.
Residue legendre(const Rational& a, std::int64_t p);

/// +1 iff t = 1 mod 8 (2 splits in Q(sqrt t)); t must be odd.
Sign kronecker_at_2(const Integer& t);

/// (a, b)_p for odd p.
Sign hilbert_tame(const Rational& a, const Rational& b, std::int64_t p);
/// (a, b)_2.
Sign hilbert_wild(const Rational& a, const Rational& b);
/// (a, b)_R.
Sign hilbert_inf(const Rational& a, const Rational& b);
Sign hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Places where (a, b)_v = -1, ascending. The count is always even; an odd
/// count raises kInternal.
std::vector<Place> symbol_ramified_places(const Rational& a, const Rational& b);

}  // namespace modbrauer
