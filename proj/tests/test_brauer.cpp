#include "doctest.h"

#include <gmpxx.h>

#include "modbrauer/brauer.hpp"
#include "modbrauer/error.hpp"
#include "support.hpp"

using namespace modbrauer;

namespace {

std::vector<Rational> vals(std::initializer_list<Rational> v) { return v; }

int kronecker(std::int64_t t, std::int64_t p) {
  return mpz_si_kronecker(static_cast<long>(t), Integer(static_cast<long>(p)).get_mpz_t());
}

}  // namespace

TEST_CASE("z values") {
  auto f = mbtest::fixture("19B3");
  CHECK(z_value(f, 1) == Rational(1));
  auto z2 = z_value(f, 2);
  REQUIRE(z2);
  // a_2 = r sqrt(-13) and eps(2) = -1, so z_2 = 13 r^2: odd valuation at 13.
  CHECK(rational_valuation(*z2, 13).value() % 2 == 1);
  auto e = mbtest::fixture("11A");
  for (std::int64_t p : {2, 3, 5, 7, 13})
    CHECK(z_value(e, p) == e.a(p).pow(2).is_rational());
}

TEST_CASE("n_gamma selection") {
  auto f = mbtest::fixture("28A");
  auto td = analyze_twists(f);
  REQUIRE(td.basis.size() == td.n_gamma.size());
  for (std::size_t i = 0; i < td.basis.size(); ++i) {
    std::int64_t n = td.n_gamma[i];
    CHECK(is_squarefree(n));
    CHECK(gcd64(n, f.level) == 1);
    CHECK_FALSE(f.a_squarefree(n).is_zero());
    for (std::size_t j = 0; j < td.basis.size(); ++j) {
      int k = kronecker(td.basis[j].t, n);
      CHECK(k == (i == j ? -1 : 1));
    }
  }
  CHECK(select_n_gamma(f, {}).empty());
  // A single basis element with t = -4 needs q = 3 mod 4.
  for (const auto& t : td.twists) {
    if (t.t != -4) continue;
    auto n = select_n_gamma(f, {t});
    REQUIRE(n.size() == 1);
    CHECK(mod_floor(n[0], 4) == 3);
  }
}

TEST_CASE("local classes of the nebentypus") {
  auto triv = DirichletCharacter::trivial(15);
  for (auto v : {Place::finite(2), Place::finite(3), Place::finite(5), Place::infinity()})
    CHECK(c_eps_local(triv, v).is_plus());
  auto eps = DirichletCharacter::from_encoding(19, {9});
  CHECK(c_eps_local(eps, Place::finite(19)).is_minus());
  CHECK(c_eps_local(eps, Place::infinity()).is_minus());
  CHECK(c_eps_local(eps, Place::finite(2)).is_plus());
  auto six = DirichletCharacter::from_encoding(7, {1});
  CHECK(six.order() == 6);
  CHECK(c_eps_local(six, Place::finite(7)).is_minus());
}

TEST_CASE("global classes of examples") {
  auto c = global_class(mbtest::fixture("28A"));
  CHECK(c.finite_ramified == std::vector<std::int64_t>{2, 3});
  CHECK_FALSE(c.infinite_ramified);
  CHECK(c.to_string() == "finite: 2 3; infinite: no");
  auto d = global_class(mbtest::fixture("5A5"));
  CHECK(d.finite_ramified == std::vector<std::int64_t>{2});
  CHECK(d.infinite_ramified);
  auto e = global_class(mbtest::fixture("11A"));
  CHECK(e.finite_ramified.empty());
  CHECK_FALSE(e.infinite_ramified);
  CHECK(e.to_string() == "finite: none; infinite: no");
  auto places = global_class(mbtest::fixture("19B3")).places();
  CHECK(places == std::vector<Place>{Place::finite(13), Place::infinity()});
}

TEST_CASE("slopes at good primes") {
  auto f = mbtest::fixture("19B3");
  auto td = analyze_twists(f);
  CHECK(slope_m(f, 13) == 1);
  CHECK(good_prime_invariant(f, td, 13).is_minus());
  auto g = mbtest::fixture("100B3");
  CHECK(slope_m(g, 3) == 3);
  CHECK_THROWS_AS(slope_m(f, 19), Error);
  for (auto p : f.primes()) {
    if (!f.is_good(p) || f.a(p).is_zero()) continue;
    if (slope_m(f, p) == 0) CHECK(good_prime_invariant(f, td, p).is_plus());
    if (all_psi_split(f, td, p)) CHECK(good_prime_invariant(f, td, p).is_plus());
  }
}

TEST_CASE("supersingular primes with a_p = 0") {
  auto f = mbtest::fixture("5A5");
  // Least prime q = 3 mod 5 with a_q != 0.
  auto q = p_dagger(f, 2);
  REQUIRE(q);
  CHECK(mod_floor(*q, 5) == 3);
  for (std::int64_t r = 3; r < *q; ++r)
    if (is_prime(r) && r % 5 == 3) CHECK(f.a(r).is_zero());

  auto b = mbtest::fixture("95B");
  auto td = analyze_twists(b);
  std::int64_t zero_prime = 0;
  for (auto p : b.primes())
    if (b.is_good(p) && b.a(p).is_zero()) {
      zero_prime = p;
      break;
    }
  CHECK(zero_prime == 2);
  CHECK(slope_m(b, 2) == std::nullopt);
  CHECK(slope_m_dagger(b, 2) % 2 == 1);
  CHECK(a_p_zero_invariant(b, td, 2).is_minus());
}

TEST_CASE("bad prime classification") {
  auto f = mbtest::fixture("19B3");
  CHECK(classify_bad_prime(f, 19).kind == BadPrimeKind::kRps);
  auto e = mbtest::fixture("11A");
  CHECK(classify_bad_prime(e, 11).kind == BadPrimeKind::kSteinberg);
  auto g = mbtest::fixture("36B4");
  auto c2 = classify_bad_prime(g, 2), c3 = classify_bad_prime(g, 3);
  CHECK(c2.kind == BadPrimeKind::kRps);
  CHECK(c3.kind == BadPrimeKind::kOther);
  CHECK((c3.n_p == 2 && c3.c_p == 1));
  CHECK(g.a(3).is_zero());
  CHECK(std::string(bad_prime_label(BadPrimeKind::kOther)) == "a_p=0");
  CHECK_THROWS_AS(classify_bad_prime(f, 13), Error);

  auto tampered = f;
  tampered.coeffs[19] = tampered.coeffs[19] * Rational(2);
  try {
    classify_bad_prime(tampered, 19);
    FAIL("tampered coefficient was accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kConsistency);
  }
}

TEST_CASE("RPS criterion from slopes") {
  CHECK(rps_split_from_slopes(vals({0, 3, 0, 3}), 4) == RpsVerdict::kSplit);
  CHECK(rps_split_from_slopes(vals({Rational(3, 2), Rational(3, 2)}), 4) == RpsVerdict::kUnknown);
  CHECK(rps_split_from_slopes(vals({1, 1}), 3) == RpsVerdict::kUnknown);
  CHECK(rps_split_from_slopes(vals({Rational(1, 3), Rational(8, 3)}), 4) == RpsVerdict::kSplit);
  CHECK(rps_split_from_slopes(vals({0, 1, 2, 3}), 4) == RpsVerdict::kUnknown);
  CHECK(rps_split_criterion(mbtest::fixture("35A4"), 5) == RpsVerdict::kUnknown);
}

TEST_CASE("RPS characteristic polynomials pair slopes to k - 1") {
  for (const auto& name : mbtest::fixture_names()) {
    CAPTURE(name);
    auto f = mbtest::fixture(name);
    for (const auto& pp : factor_integer(f.level)) {
      if (classify_bad_prime(f, pp.prime).kind != BadPrimeKind::kRps) continue;
      auto h = rps_h_poly(f, pp.prime);
      CHECK(h.degree() == 2 * static_cast<int>(f.field.degree()));
      auto ns = newton_slopes(h, pp.prime);
      CHECK(ns.zero_roots == 0);
      auto& v = ns.root_valuations;
      for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] + v[v.size() - 1 - i] == f.weight - 1);
    }
  }
}

TEST_CASE("infinite invariant") {
  CHECK(infinite_invariant(2).is_plus());
  CHECK(infinite_invariant(3).is_minus());
  CHECK(infinite_invariant(4).is_plus());
  CHECK_THROWS_AS(infinite_invariant(1), Error);
}

TEST_CASE("consistency report") {
  for (const auto& name : mbtest::fixture_names()) {
    CAPTURE(name);
    auto rep = consistency_report(mbtest::fixture(name));
    CHECK(rep.passed);
    CHECK(rep.failures.empty());
  }
  // A good ramified prime whose coefficient no longer has odd slope.
  auto f = mbtest::fixture("19B3");
  auto td = analyze_twists(f);
  auto cls = global_class(f, td);
  auto tampered = f;
  tampered.coeffs[13] = MQElement::from_rational(f.field, 1);
  auto rep = consistency_report(tampered, td, cls);
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.failures.empty());
  CHECK(rep.failures.front().rfind("(i)", 0) == 0);
  // An odd class is caught too.
  auto odd = cls;
  odd.infinite_ramified = false;
  CHECK_FALSE(consistency_report(f, td, odd).passed);
}

TEST_CASE("two routes agree at every good prime") {
  for (const auto& name : mbtest::fixture_names()) {
    CAPTURE(name);
    auto f = mbtest::fixture(name);
    auto td = analyze_twists(f);
    for (auto p : f.primes()) {
      if (p > 100 || !f.is_good(p) || f.a(p).is_zero()) continue;
      CAPTURE(p);
      CHECK(symbol_product(f, td, Place::finite(p)) == good_prime_invariant(f, td, p));
      bool all_split = true;
      for (const auto& b : td.basis) all_split = all_split && kronecker(b.t, p) == 1;
      if (all_split) CHECK(symbol_product(f, td, Place::finite(p)).is_plus());
    }
  }
}

TEST_CASE("class is independent of the n_gamma search order") {
  for (const auto& name : mbtest::fixture_names()) {
    CAPTURE(name);
    auto f = mbtest::fixture(name);
    auto reference = global_class(f);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto c = global_class(f, analyze_twists(f, seed));
      CHECK(c.finite_ramified == reference.finite_ramified);
      CHECK(c.infinite_ramified == reference.infinite_ramified);
    }
    CHECK((reference.finite_ramified.size() + reference.infinite_ramified) % 2 == 0);
  }
}
