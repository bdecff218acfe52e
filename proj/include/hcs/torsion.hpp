#pragma once

// Cyclic Γ-modules Γ/I, their assassins, and the torsion radicals of the
// hereditary torsion theories attached to specialization-closed subsets of
// Spec Γ.
//
// A module carries a primary decomposition I = Q_1 ∩ ... ∩ Q_r with
// √Q_j = p_j. For monomial I it is computed; otherwise it must be declared
// and is verified (intersection and radicals; primary-ness is trusted).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcs/spectrum.hpp"

namespace hcs {

struct PrimaryComponent {
  Ideal primary;
  PrimeIdeal prime;
};

/// numerator / denominator, a submodule of Γ/denominator.
class SubquotientHandle {
 public:
  SubquotientHandle(Ideal numerator, Ideal denominator);

  const Ideal& numerator() const { return numerator_; }
  const Ideal& denominator() const { return denominator_; }
  bool is_zero() const { return numerator_ == denominator_; }
  bool is_whole() const { return numerator_.is_unit(); }
  // Contains the class of x.
  bool contains(const Poly& x) const { return hcs::contains(numerator_, x); }

  std::string to_string() const;

 private:
  Ideal numerator_;
  Ideal denominator_;
};

class CyclicModule {
 public:
  /// Γ/I for a proper monomial ideal I (decomposition computed).
  explicit CyclicModule(Ideal defining);
  /// Γ/I with a declared primary decomposition, verified on construction.
  CyclicModule(Ideal defining, std::vector<PrimaryComponent> decomposition);
  /// Γ/p with the trivial decomposition p = p.
  static CyclicModule of_prime(const PrimeIdeal& p);

  const Ideal& defining_ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  bool declared() const { return declared_; }
  const std::vector<PrimaryComponent>& components() const { return components_; }

  /// Trust metadata: unchecked primary-ness, declared primes.
  std::vector<std::string> notes() const;

 private:
  Ideal ideal_;
  std::vector<PrimaryComponent> components_;
  bool declared_ = false;
};

/// Irredundant primary decomposition of a proper monomial ideal, one
/// component per associated prime.
std::vector<PrimaryComponent> monomial_primary_decomposition(const Ideal& I);

/// Associated primes. Monomial case: brute force over the colon ideals
/// (I : m) for monomials m bounded by the generator exponents. Declared
/// case: the declared primes.
std::vector<PrimeIdeal> ass_module(const CyclicModule& M);

/// Min Ass(M), which equals Min Supp(M).
std::vector<PrimeIdeal> min_supp(const CyclicModule& M);

/// t_Z(Γ/I) = (∩ of Q_j with p_j ∉ Z) / I; the empty intersection is Γ.
SubquotientHandle torsion_radical(const CyclicModule& M, const SpecSubset& Z);

/// Whether every prime over (I : x) has coheight ≤ i, decided as
/// dimension(I : x) ≤ i. Independent of the decomposition.
bool torsion_by_coheight(const CyclicModule& M, const Poly& x, int i);

struct StratumStatus {
  int index;
  bool nonzero;
  bool whole;
};

struct StrataProfile {
  std::vector<StratumStatus> strata;  // i = 0..d
  // The i with t_i(M) = M and t_{i-1}(M) = 0, when it exists.
  std::optional<int> pure;
};

StrataProfile strata_profile(const CyclicModule& M);

/// M(p) = (I : p^∞) / I.
SubquotientHandle p_component(const CyclicModule& M, const PrimeIdeal& p);

struct CrtComponent {
  PrimeIdeal prime;
  SubquotientHandle part;
  std::optional<std::size_t> vector_space_dim;
};

struct CrtDecomposition {
  std::vector<CrtComponent> components;
  bool direct = false;  // each part meets the sum of the others in 0
  bool covers = false;  // the parts sum to M
  std::optional<std::size_t> module_dim;  // dim_K M when finite
  std::vector<std::string> warnings;
};

/// M = ⊕ M(p) over p ∈ Min Ass(M). Throws DomainError unless the minimal
/// primes are pairwise comaximal.
CrtDecomposition crt_decompose(const CyclicModule& M);

/// Hom(Γ/I, Γ/J) ≅ (J : I)/J vanishes.
bool hom_cyclic_is_zero(const Ideal& I, const Ideal& J);

/// ⟨seq⟩ is proper and each f_k is a nonzerodivisor modulo its predecessors.
bool is_regular_sequence(const RingPtr& ring, std::span<const Poly> seq);

}  // namespace hcs
