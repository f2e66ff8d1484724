#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modbrauer/arith.hpp"

namespace modbrauer {

/// Dense polynomial over Q, coefficients from the constant term up. The
/// leading coefficient is never zero (the zero polynomial has no terms).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  /// T - r
  static Polynomial linear(const Rational& r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  Rational operator()(const Rational& x) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct NewtonSlopes {
  /// p-adic valuations of the nonzero roots, one entry per root, ascending.
  std::vector<Rational> root_valuations;
  /// Multiplicity of T = 0 as a root (split off before the hull is taken).
  int zero_roots = 0;
};

/// Lower convex hull of {(i, v_p(c_i))}. Each segment of slope -s and
/// horizontal length l contributes l roots of valuation s.
NewtonSlopes newton_slopes(const Polynomial& f, std::int64_t p);

}  // namespace modbrauer
