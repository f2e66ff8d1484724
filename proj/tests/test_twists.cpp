#include "doctest.h"

#include <gmpxx.h>

#include "modbrauer/brauer.hpp"
#include "modbrauer/error.hpp"
#include "modbrauer/twists.hpp"
#include "support.hpp"

using namespace modbrauer;

namespace {

bool is_fundamental(std::int64_t t) {
  if (t == 1) return true;
  std::int64_t r = mod_floor(t, 16);
  if (mod_floor(t, 4) == 1) return is_squarefree(t);
  if (r == 8 || r == 12) return is_squarefree(t / 4);
  return false;
}

}  // namespace

TEST_CASE("search moduli") {
  CHECK(twist_search_moduli(19) == std::vector<std::int64_t>{19, 152});
  CHECK(twist_search_moduli(56) == std::vector<std::int64_t>{56});
}

TEST_CASE("the conjugation twist of 19B3") {
  auto f = mbtest::fixture("19B3");
  auto chi = candidate_chi(f, 1);
  REQUIRE(chi);
  CHECK(chi->modulus() == 19);
  CHECK(chi->to_string() == "[9]");
  CHECK(candidate_chi(f, 0)->is_trivial());
  CHECK(verify_twist(f, 1, *chi).holds);
  CHECK(verify_twist(f, 0, DirichletCharacter::trivial(19)).holds);
  auto wrong = verify_twist(f, 1, DirichletCharacter::trivial(19));
  CHECK_FALSE(wrong.holds);
  REQUIRE(wrong.witness);
  // First prime with a_p outside Q.
  std::int64_t first = 0;
  for (auto p : f.primes())
    if (f.is_good(p) && !f.a(p).is_rational()) {
      first = p;
      break;
    }
  CHECK(*wrong.witness == first);
  auto g = gamma_group(f);
  CHECK(g.elements.size() == 2);
  CHECK(g.fixed_field_is_q);
}

TEST_CASE("a rational newform has no extra twists") {
  auto f = mbtest::fixture("11A");
  auto g = gamma_group(f);
  CHECK(g.elements == std::vector<Mask>{0});
  auto d = all_decompositions(f, g);
  CHECK(psi_basis(d).empty());
  auto rep = cocycle_check_numeric(f, g, 1e-9);
  CHECK(rep.passed);
  CHECK(rep.triples_checked == 0);
}

TEST_CASE("100D4 has three independent twists") {
  auto f = mbtest::fixture("100D4");
  auto g = gamma_group(f);
  CHECK(g.elements.size() == 8);
  CHECK(g.fixed_field_is_q);
}

TEST_CASE("twists of every fixture satisfy their defining relation") {
  for (const auto& name : mbtest::fixture_names()) {
    CAPTURE(name);
    auto f = mbtest::fixture(name);
    auto g = gamma_group(f);
    if (name != "11A") CHECK(g.elements.size() == f.field.degree());
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
      Mask gamma = g.elements[i];
      const auto& chi = g.chis[i];
      for (auto p : f.primes()) {
        if (!f.is_good(p) || chi.modulus() % p == 0) continue;
        CHECK(f.a(p).galois(gamma) == f.a(p) * embed_root_of_unity(f.field, chi(p)));
      }
      for (std::size_t j = 0; j < g.elements.size(); ++j) {
        auto it = std::find(g.elements.begin(), g.elements.end(), gamma ^ g.elements[j]);
        CHECK(it != g.elements.end());
      }
    }
    for (const auto& t : all_decompositions(f, g)) {
      CHECK(t.psi.order() <= 2);
      CHECK(t.psi.conductor() == t.psi.modulus());
      CHECK(t.lift % 2 == 1);
      CHECK(is_fundamental(t.t));
      CHECK(t.t == t.psi.quadratic_discriminant());
      // chi = psi * eps^((lift - 1) / 2) on residues prime to everything.
      auto eps_pow = f.eps.pow((t.lift - 1) / 2);
      for (std::int64_t n = 1; n < 400; ++n) {
        if (gcd64(n, t.chi.modulus() * f.level * t.psi.modulus()) != 1) continue;
        CHECK(t.chi(n) == t.psi(n) * eps_pow(n));
        int k = mpz_si_kronecker(static_cast<long>(t.t), Integer(static_cast<long>(n)).get_mpz_t());
        CHECK(t.psi(n) == (k == 1 ? RootOfUnity::one() : RootOfUnity(1, 2)));
      }
    }
  }
}

TEST_CASE("psi bases") {
  auto f = mbtest::fixture("28A");
  auto g = gamma_group(f);
  auto d = all_decompositions(f, g);
  auto b = psi_basis(d);
  CHECK(b.size() == psi_rank(d));
  CHECK(psi_rank(b) == b.size());
  // Duplicating an entry never raises the rank.
  auto dup = b;
  dup.push_back(b.front());
  CHECK(psi_rank(dup) == b.size());
  CHECK(psi_basis(std::vector<ExtraTwist>{}).empty());
  for (const auto& t : b) CHECK_FALSE(t.psi.is_trivial());
}

TEST_CASE("the ramified class does not depend on the choice of psi basis") {
  for (const auto& name : mbtest::fixture_names()) {
    CAPTURE(name);
    auto f = mbtest::fixture(name);
    auto td = analyze_twists(f);
    auto reference = global_class(f, td);
    auto g = mbtest::rng(61);
    for (int trial = 0; trial < 4; ++trial) {
      auto order = td.twists;
      std::shuffle(order.begin(), order.end(), g);
      std::vector<ExtraTwist> basis;
      for (const auto& t : order) {
        auto next = basis;
        next.push_back(t);
        if (psi_rank(next) > basis.size()) basis = next;
      }
      TwistData alt = td;
      alt.basis = basis;
      alt.n_gamma = select_n_gamma(f, basis, 1000 + trial);
      alt.z.clear();
      for (auto n : alt.n_gamma) alt.z.push_back(*z_value(f, n));
      auto c = global_class(f, alt);
      CHECK(c.finite_ramified == reference.finite_ramified);
      CHECK(c.infinite_ramified == reference.infinite_ramified);
    }
  }
}

TEST_CASE("cocycle check") {
  auto f = mbtest::fixture("19B3");
  auto g = gamma_group(f);
  auto rep = cocycle_check_numeric(f, g, 1e-9);
  CHECK(rep.passed);
  CHECK(rep.triples_checked == 8);
  CHECK(rep.max_identity_error < 1e-9);
  CHECK_THROWS_AS(cocycle_check_numeric(f, g, 0.0), Error);
  CHECK_THROWS_AS(cocycle_check_numeric(f, g, 1e-9, -1.0), Error);
}
