#include "doctest.h"

#include "modbrauer/error.hpp"
#include "modbrauer/quadfield.hpp"
#include "support.hpp"

using namespace modbrauer;

namespace {

const std::vector<std::vector<std::int64_t>> kFields = {
    {-1}, {2}, {-13}, {-1, 3}, {2, -3}, {10, -26}, {-1, 6}, {11, -1, 5}, {-222, -2}, {2, -1, 3}};

MQElement random_element(std::mt19937_64& g, const MQField& f) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < f.degree(); ++i) {
    Rational q(static_cast<long>(mbtest::uniform(g, -9, 9)),
               static_cast<unsigned long>(mbtest::uniform(g, 1, 4)));
    q.canonicalize();
    c.push_back(q);
  }
  return MQElement::from_coords(f, c);
}

bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-8) {
  return std::abs(a - b) <= tol * (1 + std::abs(a));
}

}  // namespace

TEST_CASE("field construction") {
  CHECK(MQField().degree() == 1);
  CHECK(MQField({-1, 3}).to_string() == "Q(sqrt(-1), sqrt(3))");
  CHECK_THROWS_AS(MQField({8}), Error);
  CHECK_THROWS_AS(MQField({1}), Error);
  CHECK_THROWS_AS(MQField({2, 3, 6}), Error);
  CHECK_THROWS_AS(MQField({-1, -1}), Error);
  CHECK(MQField({-1, 3}).ramified_primes() == std::vector<std::int64_t>{2, 3});
  CHECK(MQField({-13}).ramified_primes() == std::vector<std::int64_t>{2, 13});
  CHECK(MQField({5}).ramified_primes() == std::vector<std::int64_t>{5});
}

TEST_CASE("multiplication examples") {
  MQField f({-1, 3});
  auto i = MQElement::basis(f, 1), r3 = MQElement::basis(f, 2);
  CHECK(i * i == MQElement::from_rational(f, -1));
  CHECK(i * r3 == MQElement::basis(f, 3));
  CHECK(*sqrt_of(f, Rational(-3)) == MQElement::basis(f, 3));
  auto zeta6 = (MQElement::from_rational(f, 1) + MQElement::basis(f, 3)) * Rational(1, 2);
  CHECK(zeta6.pow(3) == MQElement::from_rational(f, -1));
  CHECK(zeta6.pow(6) == MQElement::from_rational(f, 1));
  CHECK(i.galois(1) == -i);
  CHECK(zeta6.galois(0) == zeta6);
  CHECK(zeta6.galois(2) == zeta6.inverse());
  CHECK((MQElement::from_rational(f, Rational(7, 2))).is_rational() == Rational(7, 2));
  CHECK_FALSE(MQElement::basis(MQField({2}), 1).is_rational());
  CHECK(MQElement::zero(f).is_rational() == Rational(0));
  CHECK_THROWS_AS(MQElement::zero(f).inverse(), Error);
}

TEST_CASE("characteristic polynomials") {
  MQField q2({2});
  CHECK(MQElement::from_rational(q2, 5).char_poly() == Polynomial({25, -10, 1}));
  CHECK(MQElement::basis(MQField({-13}), 1).char_poly() == Polynomial({13, 0, 1}));
  CHECK((MQElement::from_rational(q2, 1) + MQElement::basis(q2, 1)).char_poly() == Polynomial({-1, -2, 1}));
}

TEST_CASE("field axioms on random elements") {
  auto g = mbtest::rng(31);
  for (const auto& gens : kFields) {
    MQField f(gens);
    for (int it = 0; it < 30; ++it) {
      auto x = random_element(g, f), y = random_element(g, f), z = random_element(g, f);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * y == y * x);
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x - x).is_zero());
      if (!x.is_zero()) {
        CHECK(x * x.inverse() == MQElement::from_rational(f, 1));
        CHECK(x.norm() != 0);
      }
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK((x + y).trace() == x.trace() + y.trace());
      CHECK(x.char_poly().degree() == static_cast<int>(f.degree()));
      CHECK(evaluate(x.char_poly(), x).is_zero());
      for (Mask s = 0; s < f.degree(); ++s) {
        CHECK((x * y).galois(s) == x.galois(s) * y.galois(s));
        CHECK(near((x * y).to_complex(s), x.to_complex(s) * y.to_complex(s)));
      }
      CHECK(near(x.conj().to_complex(), std::conj(x.to_complex())));
    }
  }
}

TEST_CASE("principal square roots") {
  for (const auto& gens : kFields) {
    MQField f(gens);
    for (std::int64_t d = -30; d <= 30; ++d) {
      if (d == 0) continue;
      auto r = sqrt_of(f, Rational(d));
      CHECK(r.has_value() == f.square_class(Rational(d)).has_value());
      if (!r) continue;
      CHECK(r->pow(2) == MQElement::from_rational(f, d));
      auto c = r->to_complex();
      if (d > 0) CHECK(near(c, std::sqrt(static_cast<double>(d))));
      else CHECK(near(c, std::complex<double>(0, std::sqrt(static_cast<double>(-d)))));
    }
  }
}

TEST_CASE("roots of unity embed as the fixed primitive roots") {
  MQField f({-1, 3});
  CHECK(embed_root_of_unity(MQField({-1}), RootOfUnity(1, 4)) == MQElement::basis(MQField({-1}), 1));
  CHECK(embed_root_of_unity(f, RootOfUnity(1, 6)) ==
        (MQElement::from_rational(f, 1) + MQElement::basis(f, 3)) * Rational(1, 2));
  CHECK_THROWS_AS(embed_root_of_unity(MQField({2}), RootOfUnity(1, 8)), Error);
  CHECK_THROWS_AS(embed_root_of_unity(MQField({-1, 3}), RootOfUnity(1, 5)), Error);
  CHECK(embed_root_of_unity(f, RootOfUnity::zero()).is_zero());

  MQField big({2, -1, 3});
  for (std::int64_t m : {1, 2, 3, 4, 6, 8, 12, 24}) {
    for (std::int64_t a = 0; a < m; ++a) {
      RootOfUnity z(a, m);
      auto e = embed_root_of_unity(big, z);
      CHECK(near(e.to_complex(), z.to_complex()));
      CHECK(e.pow(z.order()) == MQElement::from_rational(big, 1));
      for (std::int64_t b = 0; b < 24; ++b) {
        RootOfUnity w(b, 24);
        CHECK(embed_root_of_unity(big, z * w) == e * embed_root_of_unity(big, w));
      }
    }
  }
}

TEST_CASE("coordinate text") {
  MQField f({-1, 3});
  auto x = MQElement::from_coords(f, {Rational(1, 2), 0, Rational(-3), 0});
  CHECK(x.to_strings() == std::vector<std::string>{"1/2", "0", "-3", "0"});
  CHECK_THROWS_AS(MQElement::from_coords(f, {1, 2}), Error);
}
