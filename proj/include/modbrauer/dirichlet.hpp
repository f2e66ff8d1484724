#pragma once

// Dirichlet characters stored by their values on canonical generators of
// each prime-power factor of the modulus:
//   odd p:          the least positive generator g of (Z/p^a)^x
//   p = 2, a <= 2:  -1
//   p = 2, a > 2:   -1 and 5
// A character is the list of exponents e_j with chi(g_j) = exp(2 pi i e_j / n_j),
// n_j the order of the j-th generator. This is also the text encoding
// "[e1,e2,...]", where the a > 2 case at p = 2 occupies two slots.

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace modbrauer {

/// exp(2 pi i numerator / order) in lowest terms, or the distinguished Zero
/// (the value of a character on a residue that is not coprime to the modulus).
class RootOfUnity {
 public:
  static RootOfUnity zero() { return RootOfUnity(); }
  static RootOfUnity one() { return RootOfUnity(0, 1); }
  RootOfUnity(std::int64_t numerator, std::int64_t order);

  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && numerator_ == 0; }
  std::int64_t numerator() const { return numerator_; }
  std::int64_t order() const { return order_; }

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity inverse() const;
  RootOfUnity pow(std::int64_t e) const;
  bool operator==(const RootOfUnity&) const = default;

  std::complex<double> to_complex() const;
  /// "0", "1", "-1" or "e(n/m)".
  std::string to_string() const;

 private:
  RootOfUnity() : zero_(true), numerator_(0), order_(1) {}
  bool zero_;
  std::int64_t numerator_;
  std::int64_t order_;
};

/// (Z/p^a)^x together with its canonical generators and a discrete-log table.
struct LocalGroup {
  std::int64_t prime = 0;
  int exponent = 0;
  std::int64_t modulus = 1;                // p^a
  std::vector<std::int64_t> generators;    // residues mod p^a
  std::vector<std::int64_t> orders;        // order of each generator
  // logs[r * slots + j]: exponent of generator j in residue r (or -1).
  std::vector<std::int32_t> logs;

  std::size_t slots() const { return generators.size(); }
};

/// Factorization data and discrete-log tables for one modulus. Built once
/// and shared (immutably) by every character with that modulus.
class ModulusStructure {
 public:
  static constexpr std::int64_t kMaxModulus = 1'000'000;

  static std::shared_ptr<const ModulusStructure> make(std::int64_t modulus);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<LocalGroup>& locals() const { return locals_; }
  std::size_t slot_count() const { return slot_count_; }
  std::int64_t slot_order(std::size_t slot) const;
  /// Residue mod N congruent to the slot generator at its prime and 1 at the others.
  std::int64_t slot_residue(std::size_t slot) const { return slot_residues_[slot]; }
  /// Prime owning a slot.
  std::int64_t slot_prime(std::size_t slot) const { return slot_primes_[slot]; }
  /// Residue mod N congruent to x mod p^a (for the factor at prime p) and 1 elsewhere.
  std::int64_t crt_embed(std::int64_t prime, std::int64_t x) const;

  /// Per-slot exponents of n; n must be coprime to the modulus.
  std::vector<std::int64_t> log(std::int64_t n) const;

 private:
  explicit ModulusStructure(std::int64_t modulus);
  std::int64_t modulus_;
  std::vector<LocalGroup> locals_;
  std::size_t slot_count_ = 0;
  std::vector<std::int64_t> slot_residues_;
  std::vector<std::int64_t> slot_primes_;
};

/// Least g >= 2 generating (Z/p^a)^x, p odd.
std::int64_t smallest_generator(std::int64_t p, int alpha);

class DirichletCharacter {
 public:
  /// Trivial character mod 1.
  DirichletCharacter();
  static DirichletCharacter trivial(std::int64_t modulus);
  /// Throws kParse naming the prime on a wrong entry count or an
  /// out-of-range exponent.
  static DirichletCharacter from_encoding(std::int64_t modulus,
                                          const std::vector<std::int64_t>& codes);
  /// Parses "[e1,e2,...]" (no whitespace).
  static DirichletCharacter from_string(std::int64_t modulus, std::string_view text);
  /// Character of the given modulus whose value on each canonical generator
  /// is value_at(residue mod modulus). Throws kInvalidArgument when a value is
  /// not a power of the generator's root of unity.
  template <class F>
  static DirichletCharacter from_generator_values(std::int64_t modulus, F value_at);
  /// Every character of the given modulus, in encoding order.
  static std::vector<DirichletCharacter> all(std::int64_t modulus);

  std::int64_t modulus() const { return structure_->modulus(); }
  const std::vector<std::int64_t>& encode() const { return exps_; }
  std::string to_string() const;

  RootOfUnity operator()(std::int64_t n) const;

  /// Throws kInvalidArgument on a modulus mismatch; use lift_to_modulus.
  DirichletCharacter operator*(const DirichletCharacter& other) const;
  DirichletCharacter inverse() const;
  DirichletCharacter pow(std::int64_t e) const;
  /// pow(a) with a coprime to order() is the Galois conjugate zeta -> zeta^a.
  /// chi composed with reduction mod modulus(); target must be a multiple.
  DirichletCharacter lift_to_modulus(std::int64_t target) const;

  std::int64_t order() const;
  bool is_trivial() const;
  std::int64_t conductor() const;
  DirichletCharacter primitive_part() const;
  /// Factor at p as a character mod p^a (trivial mod 1 when p does not divide).
  DirichletCharacter local_component(std::int64_t p) const;
  bool is_even_local(std::int64_t p) const;
  /// chi(-1) as +1 or -1.
  int parity() const;
  /// Exponent of p in the conductor.
  int conductor_exponent(std::int64_t p) const;
  /// For a character of order <= 2: the discriminant of the field it cuts
  /// out (1 for the trivial character). Throws for larger orders.
  std::int64_t quadratic_discriminant() const;

  bool operator==(const DirichletCharacter& other) const;
  bool operator<(const DirichletCharacter& other) const;

 private:
  DirichletCharacter(std::shared_ptr<const ModulusStructure> s, std::vector<std::int64_t> e);
  static DirichletCharacter build(std::shared_ptr<const ModulusStructure> s,
                                  const std::vector<RootOfUnity>& values);
  RootOfUnity local_value(const LocalGroup& g, std::size_t first_slot, std::int64_t x) const;
  std::size_t first_slot_of(std::int64_t p) const;

  std::shared_ptr<const ModulusStructure> structure_;
  std::vector<std::int64_t> exps_;
};

template <class F>
DirichletCharacter DirichletCharacter::from_generator_values(std::int64_t modulus, F value_at) {
  auto s = ModulusStructure::make(modulus);
  std::vector<RootOfUnity> values;
  values.reserve(s->slot_count());
  for (std::size_t j = 0; j < s->slot_count(); ++j) values.push_back(value_at(s->slot_residue(j)));
  return build(std::move(s), values);
}

}  // namespace modbrauer
