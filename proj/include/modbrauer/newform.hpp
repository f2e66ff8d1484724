#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modbrauer/dirichlet.hpp"
#include "modbrauer/quadfield.hpp"

namespace modbrauer {

/// Level, weight, nebentypus, Hecke field and prime coefficients a_p for
/// every prime p <= bound. Construct through make_newform, which enforces
/// the ingestion invariants.
struct NewformData {
  std::string name;  // display only, may be empty
  std::int64_t level = 1;
  int weight = 2;
  DirichletCharacter eps;
  MQField field;
  std::int64_t bound = 0;
  std::map<std::int64_t, MQElement> coeffs;
  bool non_cm = true;
  std::string source;

  bool is_good(std::int64_t p) const { return level % p != 0; }
  /// Throws kInsufficientData for primes beyond the table.
  const MQElement& a(std::int64_t p) const;
  /// eps(n) inside E (0 for n not prime to the level).
  MQElement eps_value(std::int64_t n) const;
  /// Primes up to the bound, ascending.
  std::vector<std::int64_t> primes() const;
  /// a_n for n coprime to the level, squarefree, built multiplicatively.
  MQElement a_squarefree(std::int64_t n) const;
  /// Tr_{E/Q} a_n for n = 1..limit via multiplicativity and the Hecke recursion.
  std::vector<Integer> trace_sequence(std::int64_t limit) const;
};

/// Smallest coefficient bound accepted at ingestion.
std::int64_t minimum_bound(std::int64_t level);

/// Validates and returns the form. Invariant violations raise kInvariant,
/// non-CM violations and unsupported characters raise kScope.
NewformData make_newform(NewformData raw);

}  // namespace modbrauer
