#include "modbrauer/arith.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "modbrauer/error.hpp"

namespace modbrauer {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kScope: return "unsupported-scope";
    case ErrorCode::kInsufficientData: return "insufficient-data";
    case ErrorCode::kConsistency: return "consistency-failure";
    case ErrorCode::kIo: return "io-error";
    case ErrorCode::kInternal: return "internal-error";
    case ErrorCode::kInvariant: return "invariant-violation";
  }
  return "unknown";
}

long Valuation::value() const {
  if (infinite_) fail(ErrorCode::kInvalidArgument, "valuation of zero is infinite");
  return value_;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  if (n < 1'000'000'000'000LL) {
    for (std::int64_t d = 5; d * d <= n; d += 6)
      if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
  }
  Integer z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

namespace {

std::vector<PrimePower> factor_impl(Integer n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "cannot factor zero");
  n = abs(n);
  std::vector<PrimePower> out;
  auto take = [&](std::int64_t p) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  take(2);
  take(3);
  for (std::int64_t d = 5; d <= kTrialDivisionBound; d += 6) {
    if (n == 1) break;
    Integer d2 = Integer(static_cast<unsigned long>(d)) * d;
    if (d2 > n) break;
    take(d);
    take(d + 2);
  }
  if (n != 1) {
    Integer bound = Integer(static_cast<unsigned long>(kTrialDivisionBound));
    bound *= bound;
    if (n >= bound)
      fail(ErrorCode::kScope,
           "integer has a cofactor beyond the trial-division bound: " + n.get_str());
    out.push_back({static_cast<std::int64_t>(n.get_si()), 1});
  }
  return out;
}

}  // namespace

std::vector<PrimePower> factor_integer(const Integer& n) { return factor_impl(n); }

std::vector<PrimePower> factor_integer(std::int64_t n) {
  return factor_impl(Integer(static_cast<long>(n)));
}

std::vector<std::int64_t> prime_support(const Rational& q) {
  if (q == 0) fail(ErrorCode::kInvalidArgument, "prime support of zero");
  std::vector<std::int64_t> out;
  for (const auto& pp : factor_integer(Integer(q.get_num()))) out.push_back(pp.prime);
  for (const auto& pp : factor_integer(Integer(q.get_den()))) out.push_back(pp.prime);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long integer_valuation(const Integer& n, std::int64_t p) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "valuation of zero");
  Integer rest;
  Integer pz(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

Valuation rational_valuation(const Rational& q, std::int64_t p) {
  if (q == 0) return Valuation::infinite();
  return Valuation::finite(integer_valuation(q.get_num(), p) -
                           integer_valuation(q.get_den(), p));
}

Rational strip_prime(const Rational& q, std::int64_t p) {
  long v = rational_valuation(q, p).value();
  Integer pv;
  mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(v < 0 ? -v : v));
  Rational r = q;
  if (v > 0) r /= Rational(pv);
  if (v < 0) r *= Rational(pv);
  r.canonicalize();
  return r;
}

std::int64_t residue_mod(const Rational& q, std::int64_t m) {
  Integer mz(static_cast<unsigned long>(m));
  Integer num = q.get_num() % mz;
  Integer den = q.get_den() % mz;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mz.get_mpz_t()) == 0)
    fail(ErrorCode::kInvalidArgument, "denominator not invertible modulo " + mz.get_str());
  Integer r = (num * inv) % mz;
  if (r < 0) r += mz;
  return static_cast<std::int64_t>(r.get_si());
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  for (const auto& pp : factor_integer(n))
    if (pp.exponent > 1) return false;
  return true;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::int64_t squarefree_part(std::int64_t n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "squarefree part of zero");
  std::int64_t s = n < 0 ? -1 : 1;
  for (const auto& pp : factor_integer(n))
    if (pp.exponent % 2) s *= pp.prime;
  return s;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (const auto& pp : factor_integer(n)) r = r / pp.prime * (pp.prime - 1);
  return r;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  __int128 r = 1;
  __int128 b = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) r = r * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

Rational parse_rational(std::string_view text) {
  auto bad = [&]() -> Rational {
    fail(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) return bad();
  std::size_t slash = text.find('/');
  auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) return bad();
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) fail(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace modbrauer
