#pragma once

// Prime ideals of Γ = K[t_1..t_d] with a primality certificate, their
// height and coheight, and the two families of specialization-closed
// subsets of Spec Γ the library works with.

#include <string>
#include <variant>
#include <vector>

#include "hcs/ideal.hpp"

namespace hcs {

enum class Certificate {
  monomial,               // generated by a subset of the variables
  linear_maximal,         // t_i - c_i for every variable
  principal_irreducible,  // one generator, irreducibility asserted by the caller
  declared,               // primality asserted by the caller, not checked
};

std::string to_string(Certificate c);
Certificate certificate_from_string(std::string_view s);

class PrimeIdeal {
 public:
  /// Verifies properness and the structural part of the certificate;
  /// throws DomainError on failure.
  PrimeIdeal(Ideal ideal, Certificate cert);

  /// Generated by the listed variable indices (empty list: the zero ideal).
  static PrimeIdeal from_variables(const RingPtr& ring, const std::vector<std::size_t>& vars);
  /// ⟨t_1 - c_1, ..., t_d - c_d⟩.
  static PrimeIdeal maximal_at(const RingPtr& ring, const std::vector<Rational>& point);
  static PrimeIdeal principal(const Poly& generator);

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  Certificate certificate() const { return cert_; }
  /// Primality was asserted rather than checked.
  bool conditional() const { return cert_ == Certificate::declared; }

  std::string to_string() const { return ideal_.to_string(); }

  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) { return a.ideal_ == b.ideal_; }

 private:
  Ideal ideal_;
  Certificate cert_;
};

/// Krull dimension of Γ/p.
int coheight(const PrimeIdeal& p);
/// d - coheight(p); Γ is Cohen-Macaulay and equidimensional.
int height(const PrimeIdeal& p);

/// p ⊆ q, by membership of p's generators in q.
bool prime_contained(const PrimeIdeal& p, const PrimeIdeal& q);

/// Inclusion-minimal members, in input order; equal primes appear once.
std::vector<PrimeIdeal> min_elements(const std::vector<PrimeIdeal>& family);

/// Z_i: primes of coheight at most i.
struct CoheightAtMost {
  int bound;
};

/// Primes containing some member of a finite antichain.
class UpClosureOf {
 public:
  /// Rejects strict containments; duplicates collapse.
  explicit UpClosureOf(std::vector<PrimeIdeal> antichain);
  const std::vector<PrimeIdeal>& antichain() const { return antichain_; }

 private:
  std::vector<PrimeIdeal> antichain_;
};

using SpecSubset = std::variant<CoheightAtMost, UpClosureOf>;

bool z_contains(const SpecSubset& Z, const PrimeIdeal& p);
std::string to_string(const SpecSubset& Z);

}  // namespace hcs
