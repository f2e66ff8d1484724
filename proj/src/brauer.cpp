#include "modbrauer/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "modbrauer/arith.hpp"
#include "modbrauer/error.hpp"

namespace modbrauer {

namespace {

/// +1, -1, or 0 for psi(n).
int psi_sign(const DirichletCharacter& psi, std::int64_t n) {
  RootOfUnity v = psi(n);
  if (v.is_zero()) return 0;
  return v.is_one() ? 1 : -1;
}

Integer pow_int(std::int64_t p, long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

void require_good(const NewformData& f, std::int64_t p, const char* what) {
  if (!is_prime(p)) fail(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  if (!f.is_good(p))
    fail(ErrorCode::kInvalidArgument,
         std::string(what) + " needs a prime not dividing the level; got " + std::to_string(p));
}

}  // namespace

std::optional<Rational> z_value(const NewformData& f, std::int64_t n) {
  if (n < 1 || std::gcd(n, f.level) != 1)
    fail(ErrorCode::kInvalidArgument, "z_n needs n prime to the level");
  MQElement an = f.a_squarefree(n);
  if (an.is_zero()) return std::nullopt;
  MQElement z = an * an * f.eps_value(n).inverse();
  auto q = z.is_rational();
  if (!q)
    fail(ErrorCode::kConsistency, "z_" + std::to_string(n) + " = " + z.to_string() +
                                      " is not rational");
  return *q;
}

std::vector<std::int64_t> select_n_gamma(const NewformData& f,
                                         const std::vector<ExtraTwist>& basis,
                                         std::optional<std::uint64_t> seed) {
  const std::size_t r = basis.size();
  if (r == 0) return {};
  if (r > 30) fail(ErrorCode::kScope, "too many basis characters");
  struct Cand {
    std::int64_t p;
    std::uint32_t pattern;
  };
  std::vector<Cand> cands;
  for (auto p : f.primes()) {
    if (!f.is_good(p) || f.a(p).is_zero()) continue;
    std::uint32_t pat = 0;
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      int s = psi_sign(basis[i].psi, p);
      if (s == 0) ok = false;
      if (s < 0) pat |= 1u << i;
    }
    if (ok) cands.push_back({p, pat});
  }
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(cands.begin(), cands.end(), rng);
  }
  std::vector<std::int64_t> out(r, 0);
  std::size_t missing = r;
  auto offer = [&](std::uint32_t pat, std::int64_t n) {
    for (std::size_t i = 0; i < r; ++i)
      if (out[i] == 0 && pat == (1u << i)) {
        out[i] = n;
        --missing;
      }
  };
  const std::size_t c = cands.size();
  for (std::size_t i = 0; i < c && missing; ++i) offer(cands[i].pattern, cands[i].p);
  for (std::size_t i = 0; i < c && missing; ++i)
    for (std::size_t j = i + 1; j < c && missing; ++j)
      offer(cands[i].pattern ^ cands[j].pattern, cands[i].p * cands[j].p);
  for (std::size_t i = 0; i < c && missing; ++i)
    for (std::size_t j = i + 1; j < c && missing; ++j)
      for (std::size_t k = j + 1; k < c && missing; ++k)
        offer(cands[i].pattern ^ cands[j].pattern ^ cands[k].pattern,
              cands[i].p * cands[j].p * cands[k].p);
  if (missing)
    fail(ErrorCode::kInsufficientData,
         "no admissible n_gamma among products of up to three primes <= " +
             std::to_string(f.bound));
  return out;
}

TwistData analyze_twists(const NewformData& f, std::optional<std::uint64_t> seed) {
  TwistData td;
  td.group = gamma_group(f);
  if (!td.group.fixed_field_is_q)
    fail(ErrorCode::kScope, "the centre F is not Q; ramification over F is not supported");
  td.twists = all_decompositions(f, td.group);
  td.basis = psi_basis(td.twists);
  td.n_gamma = select_n_gamma(f, td.basis, seed);
  for (auto n : td.n_gamma) {
    auto z = z_value(f, n);
    if (!z) fail(ErrorCode::kInternal, "selected n_gamma has a_n = 0");
    td.z.push_back(*z);
  }
  return td;
}

Sign c_eps_local(const DirichletCharacter& eps, const Place& v) {
  if (v.is_infinite()) return eps.parity() == 1 ? Sign::plus() : Sign::minus();
  return eps.is_even_local(v.prime()) ? Sign::plus() : Sign::minus();
}

Sign symbol_product(const NewformData& f, const TwistData& td, const Place& v) {
  Sign s = c_eps_local(f.eps, v);
  for (std::size_t i = 0; i < td.basis.size(); ++i)
    s *= hilbert_symbol(td.z[i], Rational(static_cast<long>(td.basis[i].t)), v);
  return s;
}

const char* source_name(Source s) {
  switch (s) {
    case Source::kSymbolProduct: return "symbol-product";
    case Source::kSlopeParity: return "slope-parity";
    case Source::kExceptionalSplit: return "exceptional-split";
    case Source::kPDagger: return "p-dagger";
    case Source::kRpsCriterion: return "RPS-criterion";
    case Source::kParityOfK: return "parity-of-k";
  }
  return "?";
}

std::vector<Place> BrauerClass::places() const {
  std::vector<Place> out;
  for (auto p : finite_ramified) out.push_back(Place::finite(p));
  if (infinite_ramified) out.push_back(Place::infinity());
  return out;
}

std::string BrauerClass::to_string() const {
  std::string s = "finite:";
  if (finite_ramified.empty()) s += " none";
  for (auto p : finite_ramified) s += " " + std::to_string(p);
  s += "; infinite: ";
  s += infinite_ramified ? "yes" : "no";
  return s;
}

BrauerClass global_class(const NewformData& f) { return global_class(f, analyze_twists(f)); }

BrauerClass global_class(const NewformData& f, const TwistData& td) {
  std::set<std::int64_t> support{2};
  for (const auto& pp : factor_integer(f.level)) support.insert(pp.prime);
  for (const auto& z : td.z)
    for (auto p : prime_support(z)) support.insert(p);
  for (const auto& b : td.basis)
    for (const auto& pp : factor_integer(b.t)) support.insert(pp.prime);

  BrauerClass cls;
  for (auto p : support) {
    Place v = Place::finite(p);
    bool ram = symbol_product(f, td, v).is_minus();
    if (ram) cls.finite_ramified.push_back(p);
    Source src = Source::kSymbolProduct;
    // The local invariant only labels the provenance; when the table has no
    // auxiliary prime the symbol product stands alone.
    if (f.is_good(p) && p <= f.bound && (!f.a(p).is_zero() || p_dagger(f, p))) {
      bool local_ram;
      if (f.a(p).is_zero()) {
        local_ram = a_p_zero_invariant(f, td, p).is_minus();
        src = Source::kPDagger;
      } else {
        local_ram = good_prime_invariant(f, td, p).is_minus();
        src = all_psi_split(f, td, p) ? Source::kExceptionalSplit : Source::kSlopeParity;
      }
      if (local_ram != ram) src = Source::kSymbolProduct;
    } else if (!f.is_good(p) && classify_bad_prime(f, p).kind == BadPrimeKind::kRps &&
               rps_split_criterion(f, p) == RpsVerdict::kSplit && !ram) {
      src = Source::kRpsCriterion;
    }
    cls.provenance.push_back({v, ram, src});
  }
  cls.infinite_ramified = symbol_product(f, td, Place::infinity()).is_minus();
  if (cls.infinite_ramified != infinite_invariant(f.weight).is_minus())
    fail(ErrorCode::kConsistency, "infinite invariant disagrees with the parity of the weight");
  cls.provenance.push_back({Place::infinity(), cls.infinite_ramified, Source::kParityOfK});
  if ((cls.finite_ramified.size() + (cls.infinite_ramified ? 1 : 0)) % 2)
    fail(ErrorCode::kConsistency, "odd number of ramified places");
  return cls;
}

std::optional<long> slope_m(const NewformData& f, std::int64_t p) {
  require_good(f, p, "slope_m");
  if (f.a(p).is_zero()) return std::nullopt;
  auto z = z_value(f, p);
  return rational_valuation(*z, p).value();
}

bool all_psi_split(const NewformData& f, const TwistData& td, std::int64_t p) {
  require_good(f, p, "all_psi_split");
  for (const auto& b : td.basis) {
    int s = psi_sign(b.psi, p);
    if (p == 2 && b.t % 2 != 0 && (s == 1) != kronecker_at_2(Integer(static_cast<long>(b.t))).is_plus())
      fail(ErrorCode::kInternal, "psi(2) disagrees with the residue of t mod 8");
    if (s != 1) return false;
  }
  return true;
}

Sign good_prime_invariant(const NewformData& f, const TwistData& td, std::int64_t p) {
  require_good(f, p, "good_prime_invariant");
  if (f.a(p).is_zero())
    fail(ErrorCode::kInvalidArgument,
         "a_" + std::to_string(p) + " = 0; use the auxiliary prime invariant");
  if (all_psi_split(f, td, p)) return Sign::plus();
  return Sign::from_parity(*slope_m(f, p));
}

std::optional<std::int64_t> p_dagger(const NewformData& f, std::int64_t p) {
  require_good(f, p, "p_dagger");
  const std::int64_t n = f.level;
  for (auto q : f.primes()) {
    if (!f.is_good(q)) continue;
    if (static_cast<__int128>(p) * q % n != 1 % n) continue;
    if (!f.a(q).is_zero()) return q;
  }
  return std::nullopt;
}

long slope_m_dagger(const NewformData& f, std::int64_t p) {
  auto q = p_dagger(f, p);
  if (!q)
    fail(ErrorCode::kInsufficientData, "no auxiliary prime for p = " + std::to_string(p) +
                                           " below the bound " + std::to_string(f.bound));
  const MQElement& aq = f.a(*q);
  MQElement x = aq * aq * f.eps_value(*q);
  // eps(q) is a unit, so the valuation is read off the norm
  long vn = rational_valuation(x.norm(), p).value();
  long deg = static_cast<long>(f.field.degree());
  if (vn % deg != 0)
    fail(ErrorCode::kConsistency, "valuation of a_q^2 eps(q) is not integral at " +
                                      std::to_string(p));
  return vn / deg;
}

Sign a_p_zero_invariant(const NewformData& f, const TwistData& td, std::int64_t p) {
  require_good(f, p, "a_p_zero_invariant");
  if (!f.a(p).is_zero())
    fail(ErrorCode::kInvalidArgument, "a_" + std::to_string(p) + " is nonzero");
  if (all_psi_split(f, td, p)) return Sign::plus();
  return Sign::from_parity(slope_m_dagger(f, p));
}

const char* bad_prime_label(BadPrimeKind k) {
  switch (k) {
    case BadPrimeKind::kRps: return "RPS";
    case BadPrimeKind::kSteinberg: return "St";
    case BadPrimeKind::kOther: return "a_p=0";
  }
  return "?";
}

RootOfUnity eps_prime_to_p(const NewformData& f, std::int64_t p) {
  const std::int64_t n = f.level;
  std::int64_t q = 1;
  while (n % (q * p) == 0) q *= p;
  const std::int64_t rest = n / q;
  if (rest == 1) return RootOfUnity::one();
  for (std::int64_t y = 1; y < n; y += q)
    if (mod_floor(y - p, rest) == 0) return f.eps(y);
  fail(ErrorCode::kInternal, "CRT failed");
}

BadPrimeClass classify_bad_prime(const NewformData& f, std::int64_t p) {
  if (!is_prime(p) || f.is_good(p))
    fail(ErrorCode::kInvalidArgument, std::to_string(p) + " does not divide the level");
  BadPrimeClass c{BadPrimeKind::kOther, static_cast<int>(integer_valuation(Integer(static_cast<long>(f.level)), p)),
                  f.eps.conductor_exponent(p)};
  if (c.n_p == c.c_p) c.kind = BadPrimeKind::kRps;
  else if (c.n_p == 1 && c.c_p == 0) c.kind = BadPrimeKind::kSteinberg;
  const MQElement& ap = f.a(p);
  const std::string at = " at p = " + std::to_string(p);
  switch (c.kind) {
    case BadPrimeKind::kRps: {
      Rational n = ap.norm();
      Integer expect = pow_int(p, static_cast<long>(f.weight - 1) * static_cast<long>(f.field.degree()));
      if (n * n != Rational(expect))
        fail(ErrorCode::kConsistency, "|a_p| != p^((k-1)/2)" + at);
      break;
    }
    case BadPrimeKind::kSteinberg: {
      MQElement rhs = embed_root_of_unity(f.field, eps_prime_to_p(f, p)) *
                      Rational(pow_int(p, f.weight - 2));
      if (ap * ap != rhs) fail(ErrorCode::kConsistency, "a_p^2 != eps'(p) p^(k-2)" + at);
      break;
    }
    case BadPrimeKind::kOther:
      if (!ap.is_zero()) fail(ErrorCode::kConsistency, "a_p != 0" + at);
      break;
  }
  return c;
}

Polynomial rps_h_poly(const NewformData& f, std::int64_t p) {
  if (classify_bad_prime(f, p).kind != BadPrimeKind::kRps)
    fail(ErrorCode::kInvalidArgument, std::to_string(p) + " is not a ramified principal series prime");
  const MQElement& ap = f.a(p);
  MQElement other = embed_root_of_unity(f.field, eps_prime_to_p(f, p)) * ap.conj();
  return ap.char_poly() * other.char_poly();
}

RpsVerdict rps_split_from_slopes(const std::vector<Rational>& vals, int weight) {
  const Rational top(weight - 1);
  std::set<Rational> cands;
  for (const auto& s : vals) {
    cands.insert(s);
    cands.insert(top - s);
  }
  for (const auto& alpha : cands) {
    if (alpha < 0 || !(alpha * 2 < top)) continue;
    if (alpha.get_den() % 2 == 0) continue;
    Rational beta = top - alpha;
    if (std::all_of(vals.begin(), vals.end(),
                    [&](const Rational& s) { return s == alpha || s == beta; }))
      return RpsVerdict::kSplit;
  }
  return RpsVerdict::kUnknown;
}

RpsVerdict rps_split_criterion(const NewformData& f, std::int64_t p) {
  NewtonSlopes ns = newton_slopes(rps_h_poly(f, p), p);
  if (ns.zero_roots) return RpsVerdict::kUnknown;
  return rps_split_from_slopes(ns.root_valuations, f.weight);
}

Sign infinite_invariant(int weight) {
  if (weight < 2) fail(ErrorCode::kInvalidArgument, "weight must be at least 2");
  return weight % 2 ? Sign::minus() : Sign::plus();
}

ConsistencyReport consistency_report(const NewformData& f) {
  TwistData td = analyze_twists(f);
  return consistency_report(f, td, global_class(f, td));
}

ConsistencyReport consistency_report(const NewformData& f, const TwistData& td,
                                     const BrauerClass& cls) {
  ConsistencyReport rep;
  auto fail_check = [&](const std::string& what) {
    rep.passed = false;
    rep.failures.push_back(what);
  };
  std::set<std::int64_t> ram(cls.finite_ramified.begin(), cls.finite_ramified.end());
  const auto& ramified_in_e = f.field.ramified_primes();
  auto in_e = [&](std::int64_t p) {
    return std::binary_search(ramified_in_e.begin(), ramified_in_e.end(), p);
  };

  for (auto p : cls.finite_ramified) {
    if (!f.is_good(p)) continue;
    const std::string at = "place " + std::to_string(p);
    if (p > f.bound) {
      fail_check("(i) " + at + ": ramified good prime beyond the coefficient table");
      continue;
    }
    long m = f.a(p).is_zero() ? slope_m_dagger(f, p) : *slope_m(f, p);
    if (m % 2 == 0) fail_check("(i) " + at + ": ramified with even slope " + std::to_string(m));
    if (all_psi_split(f, td, p)) fail_check("(i) " + at + ": ramified but every psi(p) = 1");
  }
  for (auto p : f.primes())
    if (f.is_good(p) && !in_e(p) && ram.count(p))
      fail_check("(ii) place " + std::to_string(p) + ": unramified in E but ramified in X");
  for (auto p : cls.finite_ramified)
    if (p != 2 && f.level % p != 0 && !in_e(p))
      fail_check("(iii) place " + std::to_string(p) + " does not divide 2 N disc(E)");
  if (cls.infinite_ramified != infinite_invariant(f.weight).is_minus())
    fail_check("(iv) infinite invariant differs from the parity of k");
  if ((cls.finite_ramified.size() + (cls.infinite_ramified ? 1 : 0)) % 2)
    fail_check("(v) odd number of ramified places");
  for (const auto& pp : factor_integer(f.level)) {
    std::int64_t p = pp.prime;
    if (classify_bad_prime(f, p).kind != BadPrimeKind::kRps) continue;
    if (rps_split_criterion(f, p) == RpsVerdict::kSplit && ram.count(p))
      fail_check("(vi) place " + std::to_string(p) + ": RPS criterion says split but ramified");
  }
  return rep;
}

}  // namespace modbrauer
