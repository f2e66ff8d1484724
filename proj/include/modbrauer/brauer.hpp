#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modbrauer/newform.hpp"
#include "modbrauer/polynomial.hpp"
#include "modbrauer/symbols.hpp"
#include "modbrauer/twists.hpp"

namespace modbrauer {

/// Everything the symbol formula needs, computed once per form.
struct TwistData {
  GammaGroup group;
  std::vector<ExtraTwist> twists;  // all (gamma, lift) decompositions
  std::vector<ExtraTwist> basis;   // Gamma_0
  std::vector<std::int64_t> n_gamma;
  std::vector<Rational> z;  // z_{n_gamma}
};

/// a_n^2 eps(n)^-1 for squarefree n prime to the level; nothing when a_n = 0.
/// Raises kConsistency if the value is not rational.
std::optional<Rational> z_value(const NewformData& f, std::int64_t n);

/// n_gamma for each basis element: squarefree, prime to the level, a_n != 0,
/// psi_{gamma'}(n) = -1 iff gamma' = gamma. Candidates are primes in
/// ascending order (or shuffled by seed), then products of two and three
/// of them. Raises kInsufficientData when the table runs out.
std::vector<std::int64_t> select_n_gamma(const NewformData& f,
                                         const std::vector<ExtraTwist>& basis,
                                         std::optional<std::uint64_t> seed = std::nullopt);

/// Raises kScope when the centre F is not Q.
TwistData analyze_twists(const NewformData& f, std::optional<std::uint64_t> seed = std::nullopt);

/// [c_eps]_v: at p, -1 iff the local component eps_p is odd; at infinity,
/// -1 iff eps is odd.
Sign c_eps_local(const DirichletCharacter& eps, const Place& v);

/// [c_eps]_v times prod over Gamma_0 of (z_{n_gamma}, t_gamma)_v.
Sign symbol_product(const NewformData& f, const TwistData& td, const Place& v);

enum class Source { kSymbolProduct, kSlopeParity, kExceptionalSplit, kPDagger, kRpsCriterion, kParityOfK };
const char* source_name(Source s);

struct PlaceDecision {
  Place place;
  bool ramified;
  Source source;
};

struct BrauerClass {
  std::vector<std::int64_t> finite_ramified;
  bool infinite_ramified = false;
  /// Every place where the symbol product was evaluated, ascending.
  std::vector<PlaceDecision> provenance;

  std::vector<Place> places() const;
  /// "finite: 2 3; infinite: no"
  std::string to_string() const;
};

BrauerClass global_class(const NewformData& f, const TwistData& td);
BrauerClass global_class(const NewformData& f);

/// v_p(a_p^2 eps(p)^-1) at a good prime; nothing when a_p = 0.
std::optional<long> slope_m(const NewformData& f, std::int64_t p);

/// True when psi(p) = 1 for every psi in the basis.
bool all_psi_split(const NewformData& f, const TwistData& td, std::int64_t p);

/// Local invariant at a good prime with a_p != 0: +1 in the exceptional
/// case, (-1)^{m_v} otherwise.
Sign good_prime_invariant(const NewformData& f, const TwistData& td, std::int64_t p);

/// Least prime q <= bound with p q = 1 mod N and a_q != 0.
std::optional<std::int64_t> p_dagger(const NewformData& f, std::int64_t p);
/// v_p(a_q^2 eps(q)) for q = p_dagger(p).
long slope_m_dagger(const NewformData& f, std::int64_t p);
/// Local invariant at a good prime with a_p = 0.
Sign a_p_zero_invariant(const NewformData& f, const TwistData& td, std::int64_t p);

enum class BadPrimeKind { kRps, kSteinberg, kOther };
struct BadPrimeClass {
  BadPrimeKind kind;
  int n_p;  // v_p(N)
  int c_p;  // v_p(conductor of eps)
};
const char* bad_prime_label(BadPrimeKind k);

/// Also checks the coefficient against the class; raises kConsistency on a mismatch.
BadPrimeClass classify_bad_prime(const NewformData& f, std::int64_t p);

/// eps'(p) where eps' is the prime-to-p part of eps.
RootOfUnity eps_prime_to_p(const NewformData& f, std::int64_t p);
/// charpoly(a_p) * charpoly(eps'(p) conj(a_p)) at an RPS prime.
Polynomial rps_h_poly(const NewformData& f, std::int64_t p);

enum class RpsVerdict { kSplit, kUnknown };
/// Split iff some alpha in [0, (k-1)/2) with odd denominator has every root
/// valuation in {alpha, k-1-alpha}.
RpsVerdict rps_split_from_slopes(const std::vector<Rational>& root_valuations, int weight);
RpsVerdict rps_split_criterion(const NewformData& f, std::int64_t p);

/// -1 iff k is odd.
Sign infinite_invariant(int weight);

struct ConsistencyReport {
  bool passed = true;
  std::vector<std::string> failures;
};

/// The local criteria checked against the class:
///  (i)   odd m_v (or m_v dagger) and some psi(p) = -1 at ramified good primes
///  (ii)  good primes unramified in E are split
///  (iii) finite support divides 2 N disc(E)
///  (iv)  the infinite invariant is the parity of k
///  (v)   even number of ramified places
///  (vi)  RPS primes where the criterion says Split are split
ConsistencyReport consistency_report(const NewformData& f, const TwistData& td,
                                     const BrauerClass& cls);
ConsistencyReport consistency_report(const NewformData& f);

}  // namespace modbrauer
