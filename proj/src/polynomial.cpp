#include "modbrauer/polynomial.hpp"

#include <algorithm>

#include "modbrauer/error.hpp"

namespace modbrauer {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& r) { return Polynomial({-r, Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(r));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Rational a = abs(c);
    if (a != 1 || i == 0) s += a.get_str();
    if (i > 0) s += (a != 1 ? "*T" : "T");
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

NewtonSlopes newton_slopes(const Polynomial& f, std::int64_t p) {
  if (f.is_zero()) fail(ErrorCode::kInvalidArgument, "Newton polygon of the zero polynomial");
  if (!is_prime(p)) fail(ErrorCode::kInvalidArgument, "Newton polygon needs a prime");
  NewtonSlopes out;
  const auto& c = f.coeffs();
  std::size_t lo = 0;
  while (c[lo] == 0) ++lo;
  out.zero_roots = static_cast<int>(lo);

  std::vector<std::pair<long, long>> pts;  // (i, v_p(c_i)) for nonzero c_i
  for (std::size_t i = lo; i < c.size(); ++i)
    if (c[i] != 0)
      pts.emplace_back(static_cast<long>(i - lo), rational_valuation(c[i], p).value());

  // Lower hull by monotone chain; points are already sorted by abscissa.
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // drop b when it lies on or above segment a -> pt
      long cross = (b.first - a.first) * (pt.second - a.second) -
                   (b.second - a.second) * (pt.first - a.first);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  for (std::size_t i = 1; i < hull.size(); ++i) {
    long len = hull[i].first - hull[i - 1].first;
    Rational s(hull[i - 1].second - hull[i].second, len);
    s.canonicalize();
    for (long j = 0; j < len; ++j) out.root_valuations.push_back(s);
  }
  std::sort(out.root_valuations.begin(), out.root_valuations.end());
  return out;
}

}  // namespace modbrauer
