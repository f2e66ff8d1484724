#include "modbrauer/dirichlet.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "modbrauer/arith.hpp"
#include "modbrauer/error.hpp"

namespace modbrauer {

RootOfUnity::RootOfUnity(std::int64_t numerator, std::int64_t order) : zero_(false) {
  if (order < 1) fail(ErrorCode::kInvalidArgument, "root of unity order must be positive");
  numerator = mod_floor(numerator, order);
  std::int64_t g = std::gcd(numerator, order);
  if (g == 0) g = order;
  numerator_ = numerator / g;
  order_ = order / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  if (zero_ || other.zero_) return zero();
  std::int64_t l = std::lcm(order_, other.order_);
  return RootOfUnity(numerator_ * (l / order_) + other.numerator_ * (l / other.order_), l);
}

RootOfUnity RootOfUnity::inverse() const {
  if (zero_) fail(ErrorCode::kInvalidArgument, "inverse of the zero character value");
  return RootOfUnity(-numerator_, order_);
}

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
  if (zero_) {
    if (e <= 0) fail(ErrorCode::kInvalidArgument, "non-positive power of zero");
    return zero();
  }
  __int128 n = static_cast<__int128>(numerator_) * e % order_;
  return RootOfUnity(static_cast<std::int64_t>(n), order_);
}

std::complex<double> RootOfUnity::to_complex() const {
  if (zero_) return {0.0, 0.0};
  double angle = 2.0 * std::numbers::pi * static_cast<double>(numerator_) /
                 static_cast<double>(order_);
  return std::polar(1.0, angle);
}

std::string RootOfUnity::to_string() const {
  if (zero_) return "0";
  if (numerator_ == 0) return "1";
  if (order_ == 2) return "-1";
  return "e(" + std::to_string(numerator_) + "/" + std::to_string(order_) + ")";
}

std::int64_t smallest_generator(std::int64_t p, int alpha) {
  if (p < 3 || !is_prime(p) || alpha < 1)
    fail(ErrorCode::kInvalidArgument, "smallest_generator needs an odd prime power");
  std::int64_t q = ipow(p, alpha);
  std::int64_t phi = q / p * (p - 1);
  auto fs = factor_integer(phi);
  for (std::int64_t g = 2;; ++g) {
    if (g % p == 0) continue;
    bool gen = true;
    for (const auto& f : fs) {
      if (mod_pow(g, phi / f.prime, q) == 1) {
        gen = false;
        break;
      }
    }
    if (gen) return g;
  }
}

namespace {

LocalGroup make_local(std::int64_t p, int a) {
  LocalGroup g;
  g.prime = p;
  g.exponent = a;
  g.modulus = ipow(p, a);
  const std::int64_t q = g.modulus;
  if (p != 2) {
    std::int64_t gen = smallest_generator(p, a);
    std::int64_t phi = q / p * (p - 1);
    g.generators = {gen};
    g.orders = {phi};
    g.logs.assign(static_cast<std::size_t>(q), -1);
    std::int64_t x = 1;
    for (std::int64_t j = 0; j < phi; ++j) {
      g.logs[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(j);
      x = x * gen % q;
    }
  } else if (a <= 2) {
    g.generators = {q - 1};
    g.orders = {a == 1 ? 1 : 2};
    g.logs.assign(static_cast<std::size_t>(q), -1);
    g.logs[1] = 0;
    if (a == 2) g.logs[3] = 1;
  } else {
    std::int64_t half = q / 4;
    g.generators = {q - 1, 5};
    g.orders = {2, half};
    g.logs.assign(static_cast<std::size_t>(2 * q), -1);
    std::int64_t y = 1;
    for (std::int64_t j = 0; j < half; ++j) {
      auto set = [&](std::int64_t r, std::int32_t s) {
        g.logs[static_cast<std::size_t>(2 * r)] = s;
        g.logs[static_cast<std::size_t>(2 * r + 1)] = static_cast<std::int32_t>(j);
      };
      set(y, 0);
      set(q - y, 1);
      y = y * 5 % q;
    }
  }
  return g;
}

std::string join_codes(const std::vector<std::int64_t>& codes) {
  std::string s = "[";
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(codes[i]);
  }
  return s + "]";
}

}  // namespace

ModulusStructure::ModulusStructure(std::int64_t modulus) : modulus_(modulus) {
  for (const auto& pp : factor_integer(modulus)) {
    locals_.push_back(make_local(pp.prime, pp.exponent));
    const LocalGroup& g = locals_.back();
    for (std::size_t j = 0; j < g.slots(); ++j) {
      slot_residues_.push_back(crt_embed(g.prime, g.generators[j]));
      slot_primes_.push_back(g.prime);
    }
    slot_count_ += g.slots();
  }
}

std::shared_ptr<const ModulusStructure> ModulusStructure::make(std::int64_t modulus) {
  if (modulus < 1) fail(ErrorCode::kInvalidArgument, "character modulus must be positive");
  if (modulus > kMaxModulus)
    fail(ErrorCode::kScope, "character modulus " + std::to_string(modulus) + " exceeds " +
                                std::to_string(kMaxModulus));
  return std::shared_ptr<const ModulusStructure>(new ModulusStructure(modulus));
}

std::int64_t ModulusStructure::slot_order(std::size_t slot) const {
  for (const auto& g : locals_) {
    if (slot < g.slots()) return g.orders[slot];
    slot -= g.slots();
  }
  fail(ErrorCode::kInvalidArgument, "slot index out of range");
}

std::int64_t ModulusStructure::crt_embed(std::int64_t prime, std::int64_t x) const {
  std::int64_t q = 1;
  for (const auto& g : locals_)
    if (g.prime == prime) q = g.modulus;
  if (q == 1) return 1 % modulus_;
  std::int64_t rest = modulus_ / q;
  if (rest == 1) return mod_floor(x, q);
  // inverse of rest mod q by Euler: q is a prime power
  std::int64_t phi = q / prime * (prime - 1);
  std::int64_t inv = mod_pow(rest % q, phi - 1, q);
  std::int64_t t = mod_floor((x - 1) % q * inv, q);
  return (1 + rest * t) % modulus_;
}

std::vector<std::int64_t> ModulusStructure::log(std::int64_t n) const {
  std::int64_t r = mod_floor(n, modulus_);
  if (std::gcd(r, modulus_) != 1)
    fail(ErrorCode::kInvalidArgument, "discrete log of a non-unit");
  std::vector<std::int64_t> out;
  out.reserve(slot_count_);
  for (const auto& g : locals_) {
    auto x = static_cast<std::size_t>(r % g.modulus);
    for (std::size_t j = 0; j < g.slots(); ++j) out.push_back(g.logs[x * g.slots() + j]);
  }
  return out;
}

DirichletCharacter::DirichletCharacter() : DirichletCharacter(ModulusStructure::make(1), {}) {}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const ModulusStructure> s,
                                       std::vector<std::int64_t> e)
    : structure_(std::move(s)), exps_(std::move(e)) {}

DirichletCharacter DirichletCharacter::trivial(std::int64_t modulus) {
  auto s = ModulusStructure::make(modulus);
  std::vector<std::int64_t> e(s->slot_count(), 0);
  return DirichletCharacter(std::move(s), std::move(e));
}

DirichletCharacter DirichletCharacter::from_encoding(std::int64_t modulus,
                                                     const std::vector<std::int64_t>& codes) {
  auto s = ModulusStructure::make(modulus);
  if (codes.size() != s->slot_count()) {
    std::size_t at = std::min(codes.size(), s->slot_count());
    std::string where = at < s->slot_count()
                            ? "missing entry for prime " + std::to_string(s->slot_prime(at))
                            : "extra entry after the last prime";
    fail(ErrorCode::kParse, "character mod " + std::to_string(modulus) + " expects " +
                                std::to_string(s->slot_count()) + " encoding entries, got " +
                                std::to_string(codes.size()) + " (" + where + ")");
  }
  for (std::size_t j = 0; j < codes.size(); ++j) {
    std::int64_t n = s->slot_order(j);
    if (codes[j] < 0 || codes[j] >= n)
      fail(ErrorCode::kParse, "encoding exponent " + std::to_string(codes[j]) + " at prime " +
                                  std::to_string(s->slot_prime(j)) + " outside [0," +
                                  std::to_string(n) + ")");
  }
  return DirichletCharacter(std::move(s), codes);
}

DirichletCharacter DirichletCharacter::from_string(std::int64_t modulus, std::string_view text) {
  auto bad = [&]() {
    fail(ErrorCode::kParse, "malformed character encoding '" + std::string(text) + "'");
  };
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') bad();
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<std::int64_t> codes;
  if (!body.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      std::string_view item = body.substr(pos, comma == std::string_view::npos ? body.npos
                                                                              : comma - pos);
      if (item.empty() || item.size() > 12) bad();
      std::int64_t v = 0;
      for (char c : item) {
        if (c < '0' || c > '9') bad();
        v = v * 10 + (c - '0');
      }
      codes.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return from_encoding(modulus, codes);
}

DirichletCharacter DirichletCharacter::build(std::shared_ptr<const ModulusStructure> s,
                                             const std::vector<RootOfUnity>& values) {
  std::vector<std::int64_t> e;
  for (std::size_t j = 0; j < values.size(); ++j) {
    std::int64_t n = s->slot_order(j);
    const RootOfUnity& v = values[j];
    if (v.is_zero() || n % v.order() != 0)
      fail(ErrorCode::kInvalidArgument,
           "value " + v.to_string() + " is not a power of the generator's root of unity at prime " +
               std::to_string(s->slot_prime(j)));
    e.push_back(v.numerator() * (n / v.order()));
  }
  return DirichletCharacter(std::move(s), std::move(e));
}

std::vector<DirichletCharacter> DirichletCharacter::all(std::int64_t modulus) {
  auto s = ModulusStructure::make(modulus);
  std::vector<DirichletCharacter> out;
  std::vector<std::int64_t> e(s->slot_count(), 0);
  while (true) {
    out.push_back(DirichletCharacter(s, e));
    std::size_t j = e.size();
    while (j > 0) {
      --j;
      if (++e[j] < s->slot_order(j)) break;
      e[j] = 0;
      if (j == 0) return out;
    }
    if (e.empty()) return out;
  }
}

std::string DirichletCharacter::to_string() const { return join_codes(exps_); }

RootOfUnity DirichletCharacter::operator()(std::int64_t n) const {
  const std::int64_t N = modulus();
  std::int64_t r = mod_floor(n, N);
  if (std::gcd(r, N) != 1) return RootOfUnity::zero();
  RootOfUnity v = RootOfUnity::one();
  std::size_t slot = 0;
  for (const auto& g : structure_->locals()) {
    v = v * local_value(g, slot, r % g.modulus);
    slot += g.slots();
  }
  return v;
}

RootOfUnity DirichletCharacter::local_value(const LocalGroup& g, std::size_t first_slot,
                                            std::int64_t x) const {
  auto xs = static_cast<std::size_t>(mod_floor(x, g.modulus));
  RootOfUnity v = RootOfUnity::one();
  for (std::size_t j = 0; j < g.slots(); ++j) {
    std::int32_t l = g.logs[xs * g.slots() + j];
    if (l < 0) return RootOfUnity::zero();
    __int128 num = static_cast<__int128>(exps_[first_slot + j]) * l % g.orders[j];
    v = v * RootOfUnity(static_cast<std::int64_t>(num), g.orders[j]);
  }
  return v;
}

std::size_t DirichletCharacter::first_slot_of(std::int64_t p) const {
  std::size_t slot = 0;
  for (const auto& g : structure_->locals()) {
    if (g.prime == p) return slot;
    slot += g.slots();
  }
  return slot;
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& other) const {
  if (modulus() != other.modulus())
    fail(ErrorCode::kInvalidArgument, "character moduli differ (" + std::to_string(modulus()) +
                                          " vs " + std::to_string(other.modulus()) +
                                          "); lift to a common modulus first");
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j)
    e[j] = (exps_[j] + other.exps_[j]) % structure_->slot_order(j);
  return DirichletCharacter(structure_, std::move(e));
}

DirichletCharacter DirichletCharacter::inverse() const { return pow(-1); }

DirichletCharacter DirichletCharacter::pow(std::int64_t e) const {
  std::vector<std::int64_t> out(exps_.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    std::int64_t n = structure_->slot_order(j);
    out[j] = mod_floor(static_cast<std::int64_t>(static_cast<__int128>(exps_[j]) * (e % n) % n), n);
  }
  return DirichletCharacter(structure_, std::move(out));
}

DirichletCharacter DirichletCharacter::lift_to_modulus(std::int64_t target) const {
  if (target < 1 || target % modulus() != 0)
    fail(ErrorCode::kInvalidArgument, "cannot lift a character mod " + std::to_string(modulus()) +
                                          " to modulus " + std::to_string(target));
  if (target == modulus()) return *this;
  return from_generator_values(target, [this](std::int64_t r) { return (*this)(r); });
}

std::int64_t DirichletCharacter::order() const {
  std::int64_t o = 1;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    std::int64_t n = structure_->slot_order(j);
    o = std::lcm(o, n / std::gcd(exps_[j], n));
  }
  return o;
}

bool DirichletCharacter::is_trivial() const {
  for (auto e : exps_)
    if (e != 0) return false;
  return true;
}

int DirichletCharacter::conductor_exponent(std::int64_t p) const {
  std::size_t slot = 0;
  for (const auto& g : structure_->locals()) {
    if (g.prime != p) {
      slot += g.slots();
      continue;
    }
    for (int beta = 0; beta <= g.exponent; ++beta) {
      std::int64_t step = ipow(p, beta);
      bool trivial_on_units = true;
      for (std::int64_t x = 1; x < g.modulus + 1 && trivial_on_units; x += step) {
        if (beta == 0 && x % p == 0) continue;
        if (!local_value(g, slot, x).is_one()) trivial_on_units = false;
      }
      if (trivial_on_units) return beta;
    }
    return g.exponent;
  }
  return 0;
}

std::int64_t DirichletCharacter::conductor() const {
  std::int64_t c = 1;
  for (const auto& g : structure_->locals()) c *= ipow(g.prime, conductor_exponent(g.prime));
  return c;
}

DirichletCharacter DirichletCharacter::primitive_part() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> local_conductors;
  for (const auto& g : structure_->locals())
    local_conductors.emplace_back(g.prime, ipow(g.prime, conductor_exponent(g.prime)));
  std::int64_t c = 1;
  for (const auto& lc : local_conductors) c *= lc.second;
  return from_generator_values(c, [&](std::int64_t r) {
    RootOfUnity v = RootOfUnity::one();
    std::size_t slot = 0;
    for (std::size_t i = 0; i < structure_->locals().size(); ++i) {
      const LocalGroup& g = structure_->locals()[i];
      std::int64_t pc = local_conductors[i].second;
      std::int64_t x = pc > 1 ? r % pc : 1;
      v = v * local_value(g, slot, x);
      slot += g.slots();
    }
    return v;
  });
}

DirichletCharacter DirichletCharacter::local_component(std::int64_t p) const {
  std::size_t slot = 0;
  for (const auto& g : structure_->locals()) {
    if (g.prime == p) {
      std::vector<std::int64_t> e(exps_.begin() + static_cast<std::ptrdiff_t>(slot),
                                  exps_.begin() + static_cast<std::ptrdiff_t>(slot + g.slots()));
      return from_encoding(g.modulus, e);
    }
    slot += g.slots();
  }
  return DirichletCharacter();
}

bool DirichletCharacter::is_even_local(std::int64_t p) const {
  for (const auto& g : structure_->locals())
    if (g.prime == p) return local_value(g, first_slot_of(p), g.modulus - 1).is_one();
  return true;
}

int DirichletCharacter::parity() const {
  if (modulus() <= 2) return 1;
  return (*this)(-1).is_one() ? 1 : -1;
}

std::int64_t DirichletCharacter::quadratic_discriminant() const {
  if (order() > 2)
    fail(ErrorCode::kInvalidArgument,
         "character " + to_string() + " mod " + std::to_string(modulus()) + " is not quadratic");
  if (is_trivial()) return 1;
  return parity() * conductor();
}

bool DirichletCharacter::operator==(const DirichletCharacter& other) const {
  return modulus() == other.modulus() && exps_ == other.exps_;
}

bool DirichletCharacter::operator<(const DirichletCharacter& other) const {
  if (modulus() != other.modulus()) return modulus() < other.modulus();
  return exps_ < other.exps_;
}

}  // namespace modbrauer
