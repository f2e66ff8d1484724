#pragma once

// Multiquadratic fields E = Q(sqrt d_1, ..., sqrt d_k). An element is a vector
// of 2^k rationals on the basis b_S = prod_{i in S} sqrt d_i, where the subset S
// is a bit mask (bit i <-> sqrt d_{i+1}). Galois elements are masks too: sigma
// negates sqrt d_i for each bit i set.
//
// The complex embedding used throughout sends each sqrt d_i to its principal
// value (positive real, or i times a positive real).

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modbrauer/arith.hpp"
#include "modbrauer/dirichlet.hpp"
#include "modbrauer/polynomial.hpp"

namespace modbrauer {

using Mask = std::uint32_t;

class MQField {
 public:
  static constexpr int kMaxGenerators = 6;

  /// Q itself.
  MQField();
  /// Generators must be squarefree, not 0 or 1, and multiplicatively
  /// independent modulo squares (every nonempty subset product is a
  /// non-square). Their order fixes the basis.
  explicit MQField(std::vector<std::int64_t> gens);

  const std::vector<std::int64_t>& gens() const { return data_->gens; }
  int rank() const { return static_cast<int>(data_->gens.size()); }
  std::size_t degree() const { return std::size_t{1} << rank(); }
  /// prod_{i in S} d_i.
  const Integer& square_of_basis(Mask s) const { return data_->basis_squares[s]; }
  /// Galois mask acting as complex conjugation under the principal embedding.
  Mask complex_conjugation() const { return data_->conjugation; }
  /// Primes ramified in E (those dividing some quadratic subfield discriminant).
  const std::vector<std::int64_t>& ramified_primes() const { return data_->ramified; }

  /// Basis index S and rational m > 0 with prod_{i in S} d_i = d m^2, if any.
  std::optional<std::pair<Mask, Rational>> square_class(const Rational& d) const;

  /// "Q" or "Q(sqrt(d1), sqrt(d2))".
  std::string to_string() const;

  bool operator==(const MQField& o) const { return gens() == o.gens(); }

 private:
  struct Data {
    std::vector<std::int64_t> gens;
    std::vector<Integer> basis_squares;
    Mask conjugation = 0;
    std::vector<std::int64_t> ramified;
  };
  std::shared_ptr<const Data> data_;
};

class MQElement {
 public:
  MQElement();  // zero of Q
  static MQElement zero(const MQField& f);
  static MQElement from_rational(const MQField& f, const Rational& q);
  static MQElement basis(const MQField& f, Mask s);
  /// Throws kInvalidArgument unless coords has length degree().
  static MQElement from_coords(const MQField& f, std::vector<Rational> coords);

  const MQField& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& coord(Mask s) const { return coords_[s]; }

  bool is_zero() const;
  /// The rational value when every coordinate off b_{} vanishes.
  std::optional<Rational> is_rational() const;

  MQElement operator+(const MQElement& o) const;
  MQElement operator-(const MQElement& o) const;
  MQElement operator-() const;
  MQElement operator*(const MQElement& o) const;
  MQElement operator*(const Rational& q) const;
  /// Throws kInvalidArgument on division by zero.
  MQElement inverse() const;
  MQElement operator/(const MQElement& o) const { return *this * o.inverse(); }
  MQElement pow(long e) const;
  bool operator==(const MQElement& o) const;
  bool operator!=(const MQElement& o) const { return !(*this == o); }

  MQElement galois(Mask sigma) const;
  /// Complex conjugate under the principal embedding.
  MQElement conj() const { return galois(field_.complex_conjugation()); }
  Rational norm() const;
  Rational trace() const;
  /// Characteristic polynomial of multiplication by this element on E.
  Polynomial char_poly() const;
  std::complex<double> to_complex() const;
  /// Principal embedding composed with sigma.
  std::complex<double> to_complex(Mask sigma) const { return galois(sigma).to_complex(); }

  /// Coordinates as fraction strings, by mask ascending.
  std::vector<std::string> to_strings() const;
  std::string to_string() const;

 private:
  MQElement(MQField f, std::vector<Rational> c) : field_(std::move(f)), coords_(std::move(c)) {}
  void require_same_field(const MQElement& o) const;
  MQField field_;
  std::vector<Rational> coords_;
};

/// Principal square root of d in E, if E contains one.
std::optional<MQElement> sqrt_of(const MQField& f, const Rational& d);

/// Image of a root of unity in E under the fixed embeddings
///   zeta_4 = sqrt(-1), zeta_3 = (-1 + sqrt(-3))/2, zeta_8 = (sqrt 2 + sqrt(-2))/2
/// and their products. Zero maps to 0. Throws kScope when the order does not
/// divide 24 and kInvalidArgument naming the missing square root when E is too
/// small.
MQElement embed_root_of_unity(const MQField& f, const RootOfUnity& z);

/// p(x) evaluated in E.
MQElement evaluate(const Polynomial& p, const MQElement& x);

}  // namespace modbrauer
