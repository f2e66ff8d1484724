#include "modbrauer/newform.hpp"

#include <algorithm>

#include "modbrauer/arith.hpp"
#include "modbrauer/error.hpp"

namespace modbrauer {

namespace {

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<bool> sieve(static_cast<std::size_t>(std::max<std::int64_t>(n + 1, 2)), true);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

}  // namespace

const MQElement& NewformData::a(std::int64_t p) const {
  auto it = coeffs.find(p);
  if (it == coeffs.end())
    fail(ErrorCode::kInsufficientData,
         "no coefficient a_" + std::to_string(p) + " (bound " + std::to_string(bound) + ")");
  return it->second;
}

MQElement NewformData::eps_value(std::int64_t n) const {
  return embed_root_of_unity(field, eps(n));
}

std::vector<std::int64_t> NewformData::primes() const { return primes_up_to(bound); }

MQElement NewformData::a_squarefree(std::int64_t n) const {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "a_n needs n >= 1");
  MQElement r = MQElement::from_rational(field, 1);
  for (const auto& pp : factor_integer(n)) {
    if (pp.exponent > 1)
      fail(ErrorCode::kInvalidArgument, std::to_string(n) + " is not squarefree");
    r = r * a(pp.prime);
  }
  return r;
}

std::vector<Integer> NewformData::trace_sequence(std::int64_t limit) const {
  if (limit > bound)
    fail(ErrorCode::kInsufficientData, "trace sequence to " + std::to_string(limit) +
                                           " exceeds the coefficient bound " +
                                           std::to_string(bound));
  std::map<std::int64_t, std::vector<MQElement>> powers;  // p -> a_{p^r}, r = 0, 1, ...
  const MQElement one = MQElement::from_rational(field, 1);
  auto prime_power = [&](std::int64_t p, int r) -> const MQElement& {
    auto& seq = powers[p];
    if (seq.empty()) {
      seq.push_back(one);
      seq.push_back(a(p));
    }
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(weight - 1));
    MQElement c = eps_value(p) * Rational(pk);
    while (static_cast<int>(seq.size()) <= r) {
      std::size_t s = seq.size();
      seq.push_back(seq[1] * seq[s - 1] - c * seq[s - 2]);
    }
    return seq[static_cast<std::size_t>(r)];
  };
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(limit));
  for (std::int64_t n = 1; n <= limit; ++n) {
    MQElement v = one;
    for (const auto& pp : factor_integer(n)) v = v * prime_power(pp.prime, pp.exponent);
    Rational t = v.trace();
    if (t.get_den() != 1)
      fail(ErrorCode::kInvariant, "trace of a_" + std::to_string(n) + " is not an integer");
    out.push_back(t.get_num());
  }
  return out;
}

std::int64_t minimum_bound(std::int64_t level) { return std::max<std::int64_t>(100, 4 * level); }

NewformData make_newform(NewformData f) {
  const std::string who = f.name.empty() ? "form" : f.name;
  if (f.level < 1) fail(ErrorCode::kInvariant, who + ": level must be positive");
  if (f.weight < 2) fail(ErrorCode::kInvariant, who + ": weight must be at least 2");
  if (f.eps.modulus() != f.level)
    fail(ErrorCode::kInvariant, who + ": nebentypus modulus " + std::to_string(f.eps.modulus()) +
                                    " differs from level " + std::to_string(f.level));
  if (!f.non_cm) fail(ErrorCode::kScope, who + ": CM forms are not supported");
  const std::int64_t ord = f.eps.order();
  if (24 % ord != 0)
    fail(ErrorCode::kScope, who + ": nebentypus order " + std::to_string(ord) +
                                " does not divide 24");
  try {
    (void)embed_root_of_unity(f.field, RootOfUnity(1, ord));
  } catch (const Error& e) {
    fail(ErrorCode::kInvariant, who + ": nebentypus values do not lie in E (" + e.what() + ")");
  }
  if (f.eps.parity() != (f.weight % 2 == 0 ? 1 : -1))
    fail(ErrorCode::kInvariant, who + ": eps(-1) != (-1)^k");
  if (f.bound < minimum_bound(f.level))
    fail(ErrorCode::kInsufficientData, who + ": coefficient bound " + std::to_string(f.bound) +
                                           " is below max(100, 4N) = " +
                                           std::to_string(minimum_bound(f.level)));
  auto ps = primes_up_to(f.bound);
  for (auto p : ps)
    if (!f.coeffs.count(p))
      fail(ErrorCode::kInsufficientData, who + ": missing coefficient a_" + std::to_string(p));
  for (const auto& [p, c] : f.coeffs) {
    if (p > f.bound || !is_prime(p))
      fail(ErrorCode::kInvariant, who + ": unexpected coefficient index " + std::to_string(p));
    if (!(c.field() == f.field))
      fail(ErrorCode::kInvariant, who + ": a_" + std::to_string(p) + " lies in another field");
  }
  return f;
}

}  // namespace modbrauer
