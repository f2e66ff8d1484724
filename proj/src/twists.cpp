#include "modbrauer/twists.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include "modbrauer/arith.hpp"
#include "modbrauer/error.hpp"

namespace modbrauer {

namespace {

std::vector<std::int64_t> usable_primes(const NewformData& f, std::int64_t modulus) {
  std::vector<std::int64_t> out;
  for (const auto& [p, ap] : f.coeffs)
    if (f.is_good(p) && modulus % p != 0 && !ap.is_zero()) out.push_back(p);
  return out;
}

bool generates_units(const std::vector<std::int64_t>& gens, std::int64_t m) {
  if (m <= 2) return true;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  std::vector<std::int64_t> stack{1};
  seen[1] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::int64_t x = stack.back();
    stack.pop_back();
    for (auto g : gens) {
      std::int64_t y = x * (g % m) % m;
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return static_cast<std::int64_t>(count) == euler_phi(m);
}

bool order_embeds(const MQField& e, std::int64_t order) {
  if (24 % order != 0) return false;
  try {
    (void)embed_root_of_unity(e, RootOfUnity(1, order));
    return true;
  } catch (const Error&) {
    return false;
  }
}

/// F2 coordinates of the quadratic character of discriminant t: one bit per
/// odd prime, and bits "-4" and "8" for the 2-part (-8 sets both).
std::set<std::int64_t> discriminant_vector(std::int64_t t) {
  std::set<std::int64_t> v;
  if (t == 1) return v;
  std::int64_t odd = 1;
  for (const auto& pp : factor_integer(t)) {
    if (pp.prime == 2) continue;
    v.insert(pp.prime);
    odd *= pp.prime % 4 == 1 ? pp.prime : -pp.prime;
  }
  std::int64_t two = t / odd;
  if (two == -4 || two == -8) v.insert(-4);
  if (two == 8 || two == -8) v.insert(-8);
  if (two != 1 && two != -4 && two != 8 && two != -8)
    fail(ErrorCode::kInternal, std::to_string(t) + " is not a fundamental discriminant");
  return v;
}

std::set<std::int64_t> symdiff(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b) {
  std::set<std::int64_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.end()));
  return out;
}

/// Incremental F2 row reduction keyed by the largest coordinate.
class F2Span {
 public:
  bool add(std::set<std::int64_t> v) {
    while (!v.empty()) {
      std::int64_t lead = *v.rbegin();
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        rows_.emplace(lead, std::move(v));
        return true;
      }
      v = symdiff(v, it->second);
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::int64_t, std::set<std::int64_t>> rows_;
};

}  // namespace

std::vector<std::int64_t> twist_search_moduli(std::int64_t level) {
  std::vector<std::int64_t> out{level};
  std::int64_t l = std::lcm(level, std::int64_t{8});
  if (l != level) out.push_back(l);
  return out;
}

TwistCheck verify_twist(const NewformData& f, Mask gamma, const DirichletCharacter& chi) {
  for (const auto& [p, ap] : f.coeffs) {
    if (!f.is_good(p) || chi.modulus() % p == 0) continue;
    RootOfUnity v = chi(p);
    if (24 % v.order() != 0 || !order_embeds(f.field, v.order())) {
      if (ap.is_zero()) continue;
      return {false, p};
    }
    if (ap.galois(gamma) != ap * embed_root_of_unity(f.field, v)) return {false, p};
  }
  return {true, std::nullopt};
}

std::optional<DirichletCharacter> candidate_chi(const NewformData& f, Mask gamma) {
  if (gamma >= f.field.degree()) fail(ErrorCode::kInvalidArgument, "Galois mask out of range");
  std::map<std::int64_t, bool> embeds;
  for (std::int64_t m : twist_search_moduli(f.level)) {
    auto ps = usable_primes(f, m);
    if (!generates_units(ps, m))
      fail(ErrorCode::kInsufficientData,
           "primes with nonzero a_p up to " + std::to_string(f.bound) +
               " do not generate the units mod " + std::to_string(m));
    std::vector<MQElement> targets;
    targets.reserve(ps.size());
    for (auto p : ps) targets.push_back(f.a(p).galois(gamma));
    for (const auto& chi : DirichletCharacter::all(m)) {
      std::int64_t o = chi.order();
      auto it = embeds.find(o);
      if (it == embeds.end()) it = embeds.emplace(o, order_embeds(f.field, o)).first;
      if (!it->second) continue;
      bool ok = true;
      for (std::size_t i = 0; i < ps.size() && ok; ++i)
        ok = targets[i] == f.a(ps[i]) * embed_root_of_unity(f.field, chi(ps[i]));
      if (ok) return chi;
    }
  }
  return std::nullopt;
}

std::vector<ExtraTwist> psi_decompose(const NewformData& f, Mask gamma,
                                      const DirichletCharacter& chi) {
  const std::int64_t m = f.eps.order();
  std::vector<std::int64_t> lifts;
  if (m == 1) {
    lifts = {1};
  } else {
    MQElement zm = embed_root_of_unity(f.field, RootOfUnity(1, m));
    MQElement image = zm.galois(gamma);
    std::int64_t a = 0;
    for (std::int64_t x = 1; x < m; ++x)
      if (std::gcd(x, m) == 1 && image == zm.pow(x)) a = x;
    if (a == 0) fail(ErrorCode::kInternal, "Galois image of zeta_m is not a power of zeta_m");
    for (std::int64_t x : {a, a + m})
      if (x % 2 == 1) lifts.push_back(x);
    if (order_embeds(f.field, 2 * m)) {
      MQElement z2m = embed_root_of_unity(f.field, RootOfUnity(1, 2 * m));
      MQElement im2 = z2m.galois(gamma);
      std::erase_if(lifts, [&](std::int64_t x) { return im2 != z2m.pow(x); });
    }
  }
  DirichletCharacter eps = f.eps.lift_to_modulus(std::lcm(f.level, chi.modulus()));
  DirichletCharacter c = chi.lift_to_modulus(eps.modulus());
  std::vector<ExtraTwist> out;
  for (std::int64_t lift : lifts) {
    DirichletCharacter psi = (c * eps.pow(-(lift - 1) / 2));
    if (psi.order() > 2)
      fail(ErrorCode::kConsistency, "chi = " + chi.to_string() + " mod " +
                                        std::to_string(chi.modulus()) +
                                        " has no quadratic part for lift " + std::to_string(lift));
    ExtraTwist tw;
    tw.gamma = gamma;
    tw.chi = chi;
    tw.lift = lift;
    tw.psi = psi.primitive_part();
    tw.t = tw.psi.quadratic_discriminant();
    out.push_back(std::move(tw));
  }
  if (out.empty()) fail(ErrorCode::kConsistency, "no admissible lift of the Galois element");
  return out;
}

GammaGroup gamma_group(const NewformData& f) {
  GammaGroup g;
  for (Mask gamma = 0; gamma < f.field.degree(); ++gamma) {
    auto chi = candidate_chi(f, gamma);
    if (!chi) continue;
    g.elements.push_back(gamma);
    g.chis.push_back(*chi);
  }
  if (g.elements.empty() || g.elements.front() != 0)
    fail(ErrorCode::kConsistency, "identity is not an extra twist");
  std::set<Mask> s(g.elements.begin(), g.elements.end());
  for (Mask a : g.elements)
    for (Mask b : g.elements)
      if (!s.count(a ^ b))
        fail(ErrorCode::kConsistency, "extra twists are not closed under composition");
  for (Mask sm = 0; sm < f.field.degree(); ++sm) {
    bool fixed = std::all_of(g.elements.begin(), g.elements.end(),
                             [&](Mask gamma) { return std::popcount(gamma & sm) % 2 == 0; });
    if (fixed) g.fixed_basis.push_back(sm);
  }
  g.fixed_field_is_q = g.fixed_basis.size() == 1;
  // F2-basis of the fixed masks, reported as squarefree generators
  std::vector<Mask> basis;
  for (Mask sm : g.fixed_basis) {
    Mask r = sm;
    for (Mask b : basis)
      if (r & (Mask{1} << (std::bit_width(b) - 1))) r ^= b;
    if (r == 0) continue;
    for (Mask& b : basis)
      if (b & (Mask{1} << (std::bit_width(r) - 1))) b ^= r;
    basis.push_back(r);
  }
  for (Mask b : basis) {
    Integer prod = f.field.square_of_basis(b);
    std::int64_t sq = 1;
    std::int64_t sign = prod < 0 ? -1 : 1;
    for (const auto& pp : factor_integer(prod))
      if (pp.exponent % 2) sq *= pp.prime;
    g.fixed_gens.push_back(sign * sq);
  }
  return g;
}

std::vector<ExtraTwist> all_decompositions(const NewformData& f, const GammaGroup& g) {
  std::vector<ExtraTwist> out;
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    for (auto& tw : psi_decompose(f, g.elements[i], g.chis[i])) out.push_back(std::move(tw));
  return out;
}

std::vector<ExtraTwist> psi_basis(const std::vector<ExtraTwist>& twists) {
  std::vector<ExtraTwist> sorted = twists;
  std::stable_sort(sorted.begin(), sorted.end(), [](const ExtraTwist& a, const ExtraTwist& b) {
    std::int64_t aa = a.t < 0 ? -a.t : a.t, bb = b.t < 0 ? -b.t : b.t;
    return aa != bb ? aa < bb : a.t < b.t;
  });
  F2Span span;
  std::vector<ExtraTwist> out;
  for (auto& tw : sorted) {
    if (tw.t == 1) continue;
    if (span.add(discriminant_vector(tw.t))) out.push_back(tw);
  }
  return out;
}

std::size_t psi_rank(const std::vector<ExtraTwist>& twists) {
  F2Span span;
  for (const auto& tw : twists) span.add(discriminant_vector(tw.t));
  return span.rank();
}

namespace {

using Complex = std::complex<double>;

/// Gauss sum of the primitive character chi with values and zeta_f raised to b.
Complex gauss_sum(const DirichletCharacter& chi, std::int64_t b) {
  const std::int64_t fc = chi.modulus();
  if (fc == 1) return 1.0;
  Complex s = 0;
  for (std::int64_t a = 1; a < fc; ++a) {
    RootOfUnity v = chi(a);
    if (v.is_zero()) continue;
    s += v.pow(b).to_complex() * std::polar(1.0, 2.0 * std::numbers::pi *
                                                     static_cast<double>(a * b % fc) /
                                                     static_cast<double>(fc));
  }
  return s;
}

std::int64_t quadratic_field_discriminant(std::int64_t d) {
  std::int64_t r = mod_floor(d, 4);
  return r == 1 ? d : 4 * d;
}

}  // namespace

CocycleReport cocycle_check_numeric(const NewformData& f, const GammaGroup& g, double tolerance,
                                    double lattice_tolerance) {
  if (!(tolerance > 0) || !(lattice_tolerance > 0))
    fail(ErrorCode::kInvalidArgument, "cocycle tolerance must be positive");
  CocycleReport rep;
  const auto& els = g.elements;
  const std::size_t n = els.size();
  if (n < 2) return rep;
  const MQField& e = f.field;

  // Q(zeta_M) contains E, every chi_gamma value and every zeta_f used below.
  std::int64_t big_m = 4;
  std::vector<DirichletCharacter> prim;
  for (const auto& chi : g.chis) {
    prim.push_back(chi.primitive_part());
    big_m = std::lcm(big_m, prim.back().modulus());
    big_m = std::lcm(big_m, chi.order());
  }
  std::vector<std::int64_t> discs;
  for (auto d : e.gens()) {
    discs.push_back(quadratic_field_discriminant(d));
    big_m = std::lcm(big_m, discs.back() < 0 ? -discs.back() : discs.back());
  }

  // tau_b restricts to sigma on E when (D_i / b) = -1 exactly for the bits of sigma.
  std::vector<std::int64_t> b_of(e.degree(), 0);
  std::size_t found = 0;
  for (std::int64_t b = 1; found < e.degree() && b < 64 * big_m; ++b) {
    if (std::gcd(b, big_m) != 1) continue;
    Mask sigma = 0;
    Integer bz(static_cast<long>(b));
    for (std::size_t i = 0; i < discs.size(); ++i)
      if (mpz_si_kronecker(static_cast<long>(discs[i]), bz.get_mpz_t()) < 0)
        sigma |= Mask{1} << i;
    if (b_of[sigma] == 0) {
      b_of[sigma] = b;
      ++found;
    }
  }
  if (found < e.degree()) fail(ErrorCode::kInternal, "no cyclotomic lift for some Galois element");

  auto index_of = [&](Mask m) -> std::size_t {
    return static_cast<std::size_t>(std::find(els.begin(), els.end(), m) - els.begin());
  };

  std::map<std::pair<std::string, std::int64_t>, Complex> cache;
  auto gsum = [&](const DirichletCharacter& chi, std::int64_t b) {
    auto key = std::make_pair(std::to_string(chi.modulus()) + chi.to_string(), b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Complex v = gauss_sum(chi, b);
    cache.emplace(key, v);
    return v;
  };
  // tau_b applied to c(gamma, delta)
  auto cocycle = [&](std::size_t gi, std::size_t di, std::int64_t b) {
    std::size_t gd = index_of(els[gi] ^ els[di]);
    std::int64_t bg = b_of[els[gi]];
    DirichletCharacter twisted = prim[di].pow(-bg);
    return gsum(prim[gi].inverse(), b) * gsum(twisted, b) / gsum(prim[gd].inverse(), b);
  };

  auto note = [&](const std::string& msg) {
    rep.passed = false;
    if (rep.failures.size() < 20) rep.failures.push_back(msg);
  };
  auto name = [&](std::size_t i) { return std::to_string(els[i]); };

  for (std::size_t gi = 0; gi < n; ++gi) {
    for (std::size_t di = 0; di < n; ++di) {
      std::size_t gd = index_of(els[gi] ^ els[di]);
      Complex c = cocycle(gi, di, 1);
      double expected = std::sqrt(static_cast<double>(prim[gi].modulus()) *
                                  static_cast<double>(prim[di].modulus()) /
                                  static_cast<double>(prim[gd].modulus()));
      double merr = std::abs(std::abs(c) - expected);
      rep.max_magnitude_error = std::max(rep.max_magnitude_error, merr);
      if (merr > tolerance)
        note("|c(" + name(gi) + "," + name(di) + ")| differs from the conductor ratio");

      // coordinates on b_S from the conjugates sigma(c)
      std::vector<Complex> conj(e.degree());
      for (Mask sigma = 0; sigma < e.degree(); ++sigma) conj[sigma] = cocycle(gi, di, b_of[sigma]);
      std::vector<Rational> coords;
      double lerr = 0;
      for (Mask sm = 0; sm < e.degree(); ++sm) {
        Complex acc = 0;
        for (Mask sigma = 0; sigma < e.degree(); ++sigma)
          acc += (std::popcount(sigma & sm) % 2 ? -1.0 : 1.0) * conj[sigma];
        acc /= static_cast<double>(e.degree());
        acc /= MQElement::basis(e, sm).to_complex();
        lerr = std::max(lerr, std::abs(acc.imag()));
        // nearest rational with denominator at most 10^4
        double x = acc.real();
        Rational best(0);
        double best_err = 1e300;
        for (long q = 1; q <= 10000; ++q) {
          double num = std::round(x * static_cast<double>(q));
          double err = std::abs(x - num / static_cast<double>(q));
          if (err < best_err - 1e-15) {
            best_err = err;
            best = Rational(Integer(static_cast<long>(num)), Integer(q));
          }
          if (err <= lattice_tolerance * 1e-3) break;
        }
        best.canonicalize();
        lerr = std::max(lerr, best_err);
        coords.push_back(best);
      }
      Complex rebuilt = MQElement::from_coords(e, coords).to_complex();
      lerr = std::max(lerr, std::abs(rebuilt - c));
      rep.max_lattice_error = std::max(rep.max_lattice_error, lerr);
      if (lerr > lattice_tolerance)
        note("c(" + name(gi) + "," + name(di) + ") is not near an element of E");

      for (std::size_t ei = 0; ei < n; ++ei) {
        std::size_t de = index_of(els[di] ^ els[ei]);
        Complex lhs = c * cocycle(gd, ei, 1);
        Complex rhs = cocycle(di, ei, b_of[els[gi]]) * cocycle(gi, de, 1);
        double err = std::abs(lhs - rhs);
        rep.max_identity_error = std::max(rep.max_identity_error, err);
        ++rep.triples_checked;
        if (err > tolerance)
          note("cocycle identity fails at (" + name(gi) + "," + name(di) + "," + name(ei) + ")");
      }
    }
  }
  return rep;
}

}  // namespace modbrauer
