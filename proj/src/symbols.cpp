#include "modbrauer/symbols.hpp"

#include <algorithm>

#include "modbrauer/error.hpp"

namespace modbrauer {

Place Place::finite(std::int64_t p) {
  if (!is_prime(p)) fail(ErrorCode::kInvalidArgument, std::to_string(p) + " is not a prime");
  return Place(p);
}

std::int64_t Place::prime() const {
  if (is_infinite()) fail(ErrorCode::kInvalidArgument, "the infinite place has no prime");
  return p_;
}

std::string Place::to_string(bool pretty) const {
  if (is_infinite()) return pretty ? "∞" : "oo";
  return std::to_string(p_);
}

std::strong_ordering Place::operator<=>(const Place& o) const {
  if (is_infinite() || o.is_infinite()) return is_infinite() <=> o.is_infinite();
  return p_ <=> o.p_;
}

namespace {

void require_odd_prime(std::int64_t p) {
  if (p == 2 || !is_prime(p))
    fail(ErrorCode::kInvalidArgument, std::to_string(p) + " is not an odd prime");
}

void require_nonzero(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) fail(ErrorCode::kInvalidArgument, "Hilbert symbol of zero");
}

Sign to_sign(Residue r) {
  if (r == Residue::kZero) fail(ErrorCode::kInternal, "residue symbol vanished on a unit");
  return r == Residue::kPlus ? Sign::plus() : Sign::minus();
}

}  // namespace

Residue legendre(const Integer& a, std::int64_t p) {
  require_odd_prime(p);
  Integer pz(static_cast<long>(p));
  int r = mpz_legendre(Integer(a % pz + pz).get_mpz_t(), pz.get_mpz_t());
  return r == 0 ? Residue::kZero : (r > 0 ? Residue::kPlus : Residue::kMinus);
}

Residue legendre(const Rational& a, std::int64_t p) {
  require_odd_prime(p);
  if (a == 0) return Residue::kZero;
  if (rational_valuation(a, p).value() > 0) return Residue::kZero;
  return legendre(Integer(residue_mod(a, p)), p);
}

Sign kronecker_at_2(const Integer& t) {
  if (mpz_even_p(t.get_mpz_t()))
    fail(ErrorCode::kInvalidArgument, "kronecker_at_2 needs an odd argument, got " + t.get_str());
  Integer r = t % 8;
  if (r < 0) r += 8;
  return r == 1 ? Sign::plus() : Sign::minus();
}

Sign hilbert_tame(const Rational& a, const Rational& b, std::int64_t p) {
  require_odd_prime(p);
  require_nonzero(a, b);
  long va = rational_valuation(a, p).value();
  long vb = rational_valuation(b, p).value();
  Rational ua = strip_prime(a, p);
  Rational ub = strip_prime(b, p);
  Sign s = Sign::from_parity(((p - 1) / 2) % 2 * (va % 2) * (vb % 2));
  if (va % 2) s *= to_sign(legendre(ub, p));
  if (vb % 2) s *= to_sign(legendre(ua, p));
  return s;
}

Sign hilbert_wild(const Rational& a, const Rational& b) {
  require_nonzero(a, b);
  long va = rational_valuation(a, 2).value();
  long vb = rational_valuation(b, 2).value();
  std::int64_t u = residue_mod(strip_prime(a, 2), 8);
  std::int64_t v = residue_mod(strip_prime(b, 2), 8);
  auto eps = [](std::int64_t x) { return ((x - 1) / 2) % 2; };
  auto omega = [](std::int64_t x) { return ((x * x - 1) / 8) % 2; };
  long e = eps(u) * eps(v) + (va % 2) * omega(v) + (vb % 2) * omega(u);
  return Sign::from_parity(e);
}

Sign hilbert_inf(const Rational& a, const Rational& b) {
  require_nonzero(a, b);
  return a < 0 && b < 0 ? Sign::minus() : Sign::plus();
}

Sign hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (v.is_infinite()) return hilbert_inf(a, b);
  if (v.prime() == 2) return hilbert_wild(a, b);
  return hilbert_tame(a, b, v.prime());
}

std::vector<Place> symbol_ramified_places(const Rational& a, const Rational& b) {
  require_nonzero(a, b);
  std::vector<std::int64_t> primes = prime_support(a);
  for (auto p : prime_support(b)) primes.push_back(p);
  primes.push_back(2);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out;
  for (auto p : primes) {
    Place v = Place::finite(p);
    if (hilbert_symbol(a, b, v).is_minus()) out.push_back(v);
  }
  if (hilbert_inf(a, b).is_minus()) out.push_back(Place::infinity());
  if (out.size() % 2)
    fail(ErrorCode::kInternal, "odd number of ramified places for (" + a.get_str() + ", " +
                                   b.get_str() + ")");
  return out;
}

}  // namespace modbrauer
