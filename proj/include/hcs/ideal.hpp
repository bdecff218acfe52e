#pragma once

// Ideals of a polynomial ring and the ideal-theoretic operations built on
// Groebner bases. All boolean answers depend only on reduced bases computed
// over Q, so they are unchanged when the field is extended to its algebraic
// closure.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcs/poly.hpp"

namespace hcs {

class Ideal {
 public:
  // Zero generators are dropped; the zero ideal has no generators.
  Ideal(RingPtr ring, std::vector<Poly> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  /// Reduced Groebner basis, memoized per order. Safe to call concurrently.
  const std::vector<Poly>& groebner_basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  // True when the ideal is generated by monomials.
  bool is_monomial() const;
  // Leading monomials of the grevlex reduced basis.
  std::vector<Monomial> leading_monomials() const;

  // Reduced grevlex basis in braces, e.g. "{x, y}".
  std::string to_string() const;

  // Equality as sets, decided by reduced grevlex bases.
  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

const std::vector<Poly>& groebner_basis(const Ideal& I, const MonomialOrder& order = MonomialOrder::grevlex());
Poly normal_form(const Poly& f, const Ideal& I, const MonomialOrder& order = MonomialOrder::grevlex());
bool contains(const Ideal& I, const Poly& f);
// I ⊆ J.
bool is_subset(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned k);

/// I ∩ J by eliminating w from ⟨w·I, (1-w)·J⟩.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
/// Intersection of a nonempty family.
Ideal ideal_intersection(std::span<const Ideal> family);

/// I : f = (I ∩ ⟨f⟩)/f. Throws DomainError for f = 0.
Ideal ideal_quotient(const Ideal& I, const Poly& f);
/// I : J = ∩ over generators g of J of (I : g); I : ⟨0⟩ = ⟨1⟩.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

/// I : J^∞, iterating I_{k+1} = I_k : J until the reduced bases agree.
Ideal saturation(const Ideal& I, const Ideal& J);

/// 1 ∈ I + J.
bool is_comaximal(const Ideal& I, const Ideal& J);

/// f ∈ √I, via 1 ∈ I + ⟨1 - w·f⟩ in K[w, ...].
bool radical_membership(const Poly& f, const Ideal& I);

/// Krull dimension of Γ/I from a maximal independent set of the initial
/// ideal; -1 for the unit ideal.
int dimension(const Ideal& I);

/// dim_K Γ/I when finite (count of standard monomials), otherwise nullopt.
std::optional<std::size_t> vector_space_dimension(const Ideal& I);

/// Image of I under a ring endomorphism, generator by generator.
Ideal apply(const Substitution& sigma, const Ideal& I);

}  // namespace hcs
