#include "modbrauer/quadfield.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "modbrauer/error.hpp"

namespace modbrauer {

namespace {

Integer squarefree_kernel(const Integer& n) {
  Integer s = n < 0 ? -1 : 1;
  for (const auto& pp : factor_integer(n))
    if (pp.exponent % 2) s *= static_cast<long>(pp.prime);
  return s;
}

Integer exact_sqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::string gen_list(const std::vector<std::int64_t>& gens) {
  std::string s;
  for (auto d : gens) s += (s.empty() ? "" : ", ") + std::to_string(d);
  return s;
}

}  // namespace

MQField::MQField() : MQField(std::vector<std::int64_t>{}) {}

MQField::MQField(std::vector<std::int64_t> gens) {
  if (static_cast<int>(gens.size()) > kMaxGenerators)
    fail(ErrorCode::kScope, "too many field generators (" + std::to_string(gens.size()) + ")");
  auto data = std::make_shared<Data>();
  for (auto d : gens) {
    if (d == 0 || d == 1)
      fail(ErrorCode::kInvalidArgument, "field generator " + std::to_string(d) + " is not allowed");
    if (!is_squarefree(d))
      fail(ErrorCode::kInvalidArgument, "field generator " + std::to_string(d) +
                                            " is not squarefree");
  }
  data->gens = std::move(gens);
  const std::size_t n = std::size_t{1} << data->gens.size();
  data->basis_squares.assign(n, Integer(1));
  std::vector<std::int64_t> ram;
  for (Mask s = 1; s < n; ++s) {
    Integer prod = 1;
    for (std::size_t i = 0; i < data->gens.size(); ++i)
      if (s >> i & 1) prod *= static_cast<long>(data->gens[i]);
    data->basis_squares[s] = prod;
    if (is_perfect_square(prod))
      fail(ErrorCode::kInvalidArgument,
           "field generators [" + gen_list(data->gens) + "] are dependent modulo squares");
    Integer d = squarefree_kernel(prod);
    Integer r = d % 4;
    if (r < 0) r += 4;
    Integer disc = r == 1 ? d : Integer(4 * d);
    for (const auto& pp : factor_integer(disc)) ram.push_back(pp.prime);
  }
  for (std::size_t i = 0; i < data->gens.size(); ++i)
    if (data->gens[i] < 0) data->conjugation |= Mask{1} << i;
  std::sort(ram.begin(), ram.end());
  ram.erase(std::unique(ram.begin(), ram.end()), ram.end());
  data->ramified = std::move(ram);
  data_ = std::move(data);
}

std::optional<std::pair<Mask, Rational>> MQField::square_class(const Rational& d) const {
  if (d == 0) return std::nullopt;
  Integer target = squarefree_kernel(Integer(d.get_num() * d.get_den()));
  for (Mask s = 0; s < degree(); ++s) {
    if (squarefree_kernel(square_of_basis(s)) != target) continue;
    Rational m2 = Rational(square_of_basis(s)) / d;
    m2.canonicalize();
    Rational m(exact_sqrt(m2.get_num()), exact_sqrt(m2.get_den()));
    m.canonicalize();
    return std::make_pair(s, m);
  }
  return std::nullopt;
}

std::string MQField::to_string() const {
  if (gens().empty()) return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < gens().size(); ++i) {
    if (i) s += ", ";
    s += "sqrt(" + std::to_string(gens()[i]) + ")";
  }
  return s + ")";
}

MQElement::MQElement() : MQElement(MQField(), {Rational(0)}) {}

MQElement MQElement::zero(const MQField& f) {
  return MQElement(f, std::vector<Rational>(f.degree()));
}

MQElement MQElement::from_rational(const MQField& f, const Rational& q) {
  MQElement x = zero(f);
  x.coords_[0] = q;
  return x;
}

MQElement MQElement::basis(const MQField& f, Mask s) {
  if (s >= f.degree()) fail(ErrorCode::kInvalidArgument, "basis index out of range");
  MQElement x = zero(f);
  x.coords_[s] = 1;
  return x;
}

MQElement MQElement::from_coords(const MQField& f, std::vector<Rational> coords) {
  if (coords.size() != f.degree())
    fail(ErrorCode::kInvalidArgument, "expected " + std::to_string(f.degree()) +
                                          " coordinates, got " + std::to_string(coords.size()));
  for (auto& c : coords) c.canonicalize();
  return MQElement(f, std::move(coords));
}

void MQElement::require_same_field(const MQElement& o) const {
  if (!(field_ == o.field_))
    fail(ErrorCode::kInvalidArgument,
         "field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

bool MQElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> MQElement::is_rational() const {
  for (std::size_t s = 1; s < coords_.size(); ++s)
    if (coords_[s] != 0) return std::nullopt;
  return coords_[0];
}

MQElement MQElement::operator+(const MQElement& o) const {
  require_same_field(o);
  MQElement r = *this;
  for (std::size_t s = 0; s < coords_.size(); ++s) r.coords_[s] += o.coords_[s];
  return r;
}

MQElement MQElement::operator-(const MQElement& o) const {
  require_same_field(o);
  MQElement r = *this;
  for (std::size_t s = 0; s < coords_.size(); ++s) r.coords_[s] -= o.coords_[s];
  return r;
}

MQElement MQElement::operator-() const {
  MQElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

MQElement MQElement::operator*(const MQElement& o) const {
  require_same_field(o);
  MQElement r = zero(field_);
  const std::size_t n = coords_.size();
  for (Mask s = 0; s < n; ++s) {
    if (coords_[s] == 0) continue;
    for (Mask t = 0; t < n; ++t) {
      if (o.coords_[t] == 0) continue;
      r.coords_[s ^ t] += coords_[s] * o.coords_[t] * field_.square_of_basis(s & t);
    }
  }
  return r;
}

MQElement MQElement::operator*(const Rational& q) const {
  MQElement r = *this;
  for (auto& c : r.coords_) c *= q;
  return r;
}

MQElement MQElement::galois(Mask sigma) const {
  if (sigma >= field_.degree()) fail(ErrorCode::kInvalidArgument, "Galois mask out of range");
  MQElement r = *this;
  for (Mask s = 0; s < coords_.size(); ++s)
    if (std::popcount(s & sigma) % 2) r.coords_[s] = -r.coords_[s];
  return r;
}

MQElement MQElement::inverse() const {
  if (is_zero()) fail(ErrorCode::kInvalidArgument, "division by zero in " + field_.to_string());
  MQElement others = from_rational(field_, 1);
  for (Mask sigma = 1; sigma < field_.degree(); ++sigma) others = others * galois(sigma);
  auto n = (*this * others).is_rational();
  if (!n) fail(ErrorCode::kInternal, "norm is not rational");
  return others * (Rational(1) / *n);
}

MQElement MQElement::pow(long e) const {
  MQElement base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  MQElement r = from_rational(field_, 1);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool MQElement::operator==(const MQElement& o) const {
  return field_ == o.field_ && coords_ == o.coords_;
}

Rational MQElement::norm() const {
  MQElement p = from_rational(field_, 1);
  for (Mask sigma = 0; sigma < field_.degree(); ++sigma) p = p * galois(sigma);
  return *p.is_rational();
}

Rational MQElement::trace() const { return coords_[0] * static_cast<long>(field_.degree()); }

Polynomial MQElement::char_poly() const {
  // prod over sigma of (T - sigma(x)), built with coefficients in E
  std::vector<MQElement> poly{from_rational(field_, 1)};
  for (Mask sigma = 0; sigma < field_.degree(); ++sigma) {
    MQElement root = galois(sigma);
    std::vector<MQElement> next(poly.size() + 1, zero(field_));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * root;
    }
    poly = std::move(next);
  }
  std::vector<Rational> c;
  for (const auto& e : poly) {
    auto q = e.is_rational();
    if (!q) fail(ErrorCode::kInternal, "characteristic polynomial is not rational");
    c.push_back(*q);
  }
  return Polynomial(std::move(c));
}

std::complex<double> MQElement::to_complex() const {
  std::complex<double> acc = 0;
  for (Mask s = 0; s < coords_.size(); ++s) {
    if (coords_[s] == 0) continue;
    std::complex<double> b = 1;
    for (int i = 0; i < field_.rank(); ++i) {
      if (!(s >> i & 1)) continue;
      double d = static_cast<double>(field_.gens()[static_cast<std::size_t>(i)]);
      b *= d < 0 ? std::complex<double>(0, std::sqrt(-d)) : std::complex<double>(std::sqrt(d), 0);
    }
    acc += coords_[s].get_d() * b;
  }
  return acc;
}

std::vector<std::string> MQElement::to_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coords_) out.push_back(rational_to_string(c));
  return out;
}

std::string MQElement::to_string() const {
  std::string s;
  for (Mask m = 0; m < coords_.size(); ++m) {
    const Rational& c = coords_[m];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Rational a = abs(c);
    std::string root;
    for (int i = 0; i < field_.rank(); ++i)
      if (m >> i & 1)
        root += (root.empty() ? "" : "*") +
                ("sqrt(" + std::to_string(field_.gens()[static_cast<std::size_t>(i)]) + ")");
    if (root.empty()) s += a.get_str();
    else if (a == 1) s += root;
    else s += a.get_str() + "*" + root;
  }
  return s.empty() ? "0" : s;
}

std::optional<MQElement> sqrt_of(const MQField& f, const Rational& d) {
  if (d == 0) return MQElement::zero(f);
  auto cls = f.square_class(d);
  if (!cls) return std::nullopt;
  auto [s, m] = *cls;
  int negatives = 0;
  for (int i = 0; i < f.rank(); ++i)
    if ((s >> i & 1) && f.gens()[static_cast<std::size_t>(i)] < 0) ++negatives;
  Rational scale = Rational(1) / m;
  if ((negatives / 2) % 2) scale = -scale;
  return MQElement::basis(f, s) * scale;
}

namespace {

MQElement need_sqrt(const MQField& f, long d, long order) {
  auto r = sqrt_of(f, d);
  if (!r)
    fail(ErrorCode::kInvalidArgument, "root of unity of order " + std::to_string(order) +
                                          " does not embed in " + f.to_string() +
                                          ": missing sqrt(" + std::to_string(d) + ")");
  return *r;
}

}  // namespace

MQElement embed_root_of_unity(const MQField& f, const RootOfUnity& z) {
  if (z.is_zero()) return MQElement::zero(f);
  const long o = static_cast<long>(z.order());
  if (24 % o != 0)
    fail(ErrorCode::kScope, "root of unity of order " + std::to_string(o) +
                                " is outside the supported orders (divisors of 24)");
  long n2 = 1, n3 = 1;
  while (n2 * 2 <= o && o % (n2 * 2) == 0) n2 *= 2;
  n3 = o / n2;
  MQElement one = MQElement::from_rational(f, 1);
  MQElement z2 = one;
  if (n2 == 2) z2 = -one;
  if (n2 == 4) z2 = need_sqrt(f, -1, o);
  if (n2 == 8) z2 = (need_sqrt(f, 2, o) + need_sqrt(f, -2, o)) * Rational(1, 2);
  MQElement z3 = one;
  if (n3 == 3) z3 = (need_sqrt(f, -3, o) - one) * Rational(1, 2);
  // 1/o = u/n2 + w/n3 with u*n3 + w*n2 = 1
  long u = 0, w = 0;
  for (long cand = 0; cand < n2; ++cand)
    if ((cand * n3) % n2 == 1 % n2) {
      u = cand;
      break;
    }
  w = (1 - u * n3) / n2;
  MQElement prim = z2.pow(u) * z3.pow(w);
  return prim.pow(static_cast<long>(z.numerator()));
}

MQElement evaluate(const Polynomial& p, const MQElement& x) {
  MQElement acc = MQElement::zero(x.field());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * x + MQElement::from_rational(x.field(), *it);
  return acc;
}

}  // namespace modbrauer
