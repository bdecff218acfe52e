#pragma once

// Harish-Chandra data of automorphism type: each generator u of the
// algebra U ⊇ Γ satisfies g·u = u·σ_u(g) for a ring automorphism σ_u of Γ.
// For such u, ΓuΓ/(quΓ + Γup) ≅ Γ/(σ_u(q) + p), so q ≡_u p holds exactly
// when σ_u(q) and p are not comaximal.

#include <optional>
#include <string>
#include <vector>

#include "hcs/spectrum.hpp"

namespace hcs {

class HCGenerator {
 public:
  /// Throws DomainError unless `inverse` undoes `automorphism` on every
  /// variable, in both orders.
  HCGenerator(std::string name, Substitution automorphism, Substitution inverse);

  const std::string& name() const { return name_; }
  const Substitution& automorphism() const { return sigma_; }
  const Substitution& inverse() const { return inverse_; }

 private:
  std::string name_;
  Substitution sigma_;
  Substitution inverse_;
};

class HCDatum {
 public:
  HCDatum(RingPtr ring, std::vector<HCGenerator> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<HCGenerator>& generators() const { return gens_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

 private:
  RingPtr ring_;
  std::vector<HCGenerator> gens_;
};

/// A_n(K) over Γ = K[t_1..t_n], t_i = X_i Y_i. Generators Y_1..Y_n carry
/// t_i -> t_i + 1 and X_1..X_n carry t_i -> t_i - 1, in that order.
HCDatum weyl_datum(int n);

/// NOT is_comaximal(σ_u(q), p). The q side is shifted.
bool equiv_u(const PrimeIdeal& q, const PrimeIdeal& p, const HCGenerator& u);

/// q_0 ≡_{u_{k_1}} q_1 ≡ ... ≡_{u_{k_s}} q_s.
struct ChainWitness {
  std::vector<PrimeIdeal> primes;
  std::vector<std::size_t> generator_indices;

  std::size_t length() const { return generator_indices.size(); }
};

/// Re-checks every edge with equiv_u and the shared-coheight clause.
bool verify_chain(const ChainWitness& chain, const HCDatum& datum);

struct Reachable {
  std::size_t candidate_index;
  PrimeIdeal prime;
  ChainWitness chain;
};

/// Breadth-first search from `start` over {start} ∪ candidates, with an
/// edge q -> q' whenever q ≡_u q' for some generator u. Returns each
/// candidate reachable in 1..max_depth steps with a shortest chain, in
/// candidate order. Throws DomainError on mixed coheights.
std::vector<Reachable> equiv_reachable(const PrimeIdeal& start, const std::vector<PrimeIdeal>& candidates,
                                       const HCDatum& datum, int max_depth);

struct AssassinBound {
  // p itself followed by every admitted candidate distinct from p.
  std::vector<PrimeIdeal> admitted;
  // One chain q = q_0, ..., q_s = p per admitted prime (empty for p).
  std::vector<ChainWitness> chains;
};

/// Candidates q with a chain q ≡ ... ≡ p of length ≤ max_depth. A
/// candidate left out cannot be an associated prime of a cyclic module Ux
/// with ann_Γ(x) = p, relative to this candidate universe and depth.
AssassinBound assassin_bound(const PrimeIdeal& p, const std::vector<PrimeIdeal>& candidates, const HCDatum& datum,
                             int max_depth);

/// entry[i][j][k] = equiv_u(candidates[i], candidates[j], generator k).
using StepMatrix = std::vector<std::vector<std::vector<bool>>>;
StepMatrix single_step_matrix(const std::vector<PrimeIdeal>& candidates, const HCDatum& datum);

}  // namespace hcs
