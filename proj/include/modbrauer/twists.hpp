#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modbrauer/dirichlet.hpp"
#include "modbrauer/newform.hpp"
#include "modbrauer/quadfield.hpp"

namespace modbrauer {

/// gamma in Aut(E) with a_p^gamma = a_p chi(p), together with one
/// decomposition chi = psi * sqrt(eps)^(gamma - 1). The lift records how gamma
/// acts on zeta_{2m} (m = ord eps): zeta_{2m} -> zeta_{2m}^lift, lift odd, so
/// that sqrt(eps)^(gamma - 1) = eps^((lift - 1) / 2).
struct ExtraTwist {
  Mask gamma = 0;
  DirichletCharacter chi;
  std::int64_t lift = 1;
  DirichletCharacter psi;  // primitive, order <= 2
  std::int64_t t = 1;      // discriminant of the psi field, 1 when psi is trivial
};

struct TwistCheck {
  bool holds = true;
  std::optional<std::int64_t> witness;  // first prime where it fails
};

/// Search moduli tried by candidate_chi: the level, then lcm(level, 8).
std::vector<std::int64_t> twist_search_moduli(std::int64_t level);

/// The character chi of the first search modulus with a_p^gamma = a_p chi(p)
/// at every usable prime, or nothing. Raises kInsufficientData when the
/// usable primes do not generate (Z/M)^x for some search modulus (the data
/// cannot pin chi down there).
std::optional<DirichletCharacter> candidate_chi(const NewformData& f, Mask gamma);

/// Checks a_p^gamma = a_p chi(p) for every prime p <= bound prime to
/// the modulus of chi and to the level.
TwistCheck verify_twist(const NewformData& f, Mask gamma, const DirichletCharacter& chi);

/// All decompositions of (gamma, chi), one per admissible lift; the first is
/// the canonical one. Raises kConsistency if chi does not have the shape psi
/// times a power of eps.
std::vector<ExtraTwist> psi_decompose(const NewformData& f, Mask gamma,
                                      const DirichletCharacter& chi);

struct GammaGroup {
  std::vector<Mask> elements;           // sorted; includes 0
  std::vector<DirichletCharacter> chis;  // chi for each element
  std::vector<Mask> fixed_basis;        // masks S with b_S fixed by the group
  std::vector<std::int64_t> fixed_gens;  // F = Q(sqrt of these)
  bool fixed_field_is_q = true;
};

/// Runs candidate_chi over Aut(E) and checks the result is a subgroup.
/// Raises kConsistency if it is not closed.
GammaGroup gamma_group(const NewformData& f);

/// Every (gamma, lift) decomposition over the group, including the
/// nontrivial lift of the identity when it exists.
std::vector<ExtraTwist> all_decompositions(const NewformData& f, const GammaGroup& g);

/// A subset whose psi form an F2-basis of the span of all psi, greedy over
/// entries sorted by (|t|, t).
std::vector<ExtraTwist> psi_basis(const std::vector<ExtraTwist>& twists);

/// F2-rank of the span of the given psi.
std::size_t psi_rank(const std::vector<ExtraTwist>& twists);

struct CocycleReport {
  bool passed = true;
  double max_identity_error = 0;
  double max_magnitude_error = 0;
  double max_lattice_error = 0;
  std::size_t triples_checked = 0;
  std::vector<std::string> failures;
};

/// Checks the Gauss-sum cocycle c(g, d) = G(chi_g^-1) G(chi_d^-g) / G(chi_gd^-1)
/// numerically: its magnitudes, the 2-cocycle identity and that each value
/// lies near E (each coordinate on the basis b_S within lattice_tolerance of a
/// rational of denominator at most 10^4). Both tolerances must be positive.
CocycleReport cocycle_check_numeric(const NewformData& f, const GammaGroup& g, double tolerance,
                                    double lattice_tolerance = 1e-6);

}  // namespace modbrauer
