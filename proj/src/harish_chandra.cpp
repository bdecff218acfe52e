#include "hcs/harish_chandra.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hcs {

HCGenerator::HCGenerator(std::string name, Substitution automorphism, Substitution inverse)
    : name_(std::move(name)), sigma_(std::move(automorphism)), inverse_(std::move(inverse)) {
  if (name_.empty()) throw DomainError("generator name must be nonempty");
  require_same_ring(sigma_.ring(), inverse_.ring(), "generator " + name_);
  if (!sigma_.followed_by(inverse_).is_identity() || !inverse_.followed_by(sigma_).is_identity())
    throw DomainError("generator " + name_ + ": stored inverse does not undo the automorphism");
}

HCDatum::HCDatum(RingPtr ring, std::vector<HCGenerator> generators) : ring_(std::move(ring)), gens_(std::move(generators)) {
  std::set<std::string> names;
  for (const auto& g : gens_) {
    require_same_ring(ring_, g.automorphism().ring(), "generator " + g.name());
    if (!names.insert(g.name()).second) throw DomainError("duplicate generator name '" + g.name() + "'");
  }
}

std::optional<std::size_t> HCDatum::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name() == name) return i;
  return std::nullopt;
}

HCDatum weyl_datum(int n) {
  if (n < 1) throw DomainError("weyl_datum requires n >= 1");
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("t" + std::to_string(i));
  RingPtr ring = PolyRing::make(std::move(vars));

  auto shift = [&ring](std::size_t i, int by) {
    auto s = Substitution::identity(ring);
    std::vector<Poly> images;
    for (std::size_t j = 0; j < ring->dimension(); ++j) images.push_back(s.image(j));
    images[i] = images[i] + Poly::constant(ring, by);
    return Substitution(ring, std::move(images));
  };

  std::vector<HCGenerator> gens;
  // Y_i t_i = (t_i - 1) Y_i, i.e. t_i Y_i = Y_i (t_i + 1).
  for (int i = 0; i < n; ++i) gens.emplace_back("Y" + std::to_string(i + 1), shift(i, 1), shift(i, -1));
  // t_i X_i = X_i (t_i - 1).
  for (int i = 0; i < n; ++i) gens.emplace_back("X" + std::to_string(i + 1), shift(i, -1), shift(i, 1));
  return HCDatum(ring, std::move(gens));
}

bool equiv_u(const PrimeIdeal& q, const PrimeIdeal& p, const HCGenerator& u) {
  require_same_ring(q.ring(), p.ring(), "equiv_u");
  require_same_ring(q.ring(), u.automorphism().ring(), "equiv_u");
  return !is_comaximal(apply(u.automorphism(), q.ideal()), p.ideal());
}

bool verify_chain(const ChainWitness& chain, const HCDatum& datum) {
  if (chain.primes.empty() || chain.generator_indices.size() + 1 != chain.primes.size()) return false;
  const int c = coheight(chain.primes.front());
  for (const auto& q : chain.primes)
    if (coheight(q) != c) return false;
  for (std::size_t i = 0; i < chain.generator_indices.size(); ++i) {
    auto k = chain.generator_indices[i];
    if (k >= datum.generators().size()) return false;
    if (!equiv_u(chain.primes[i], chain.primes[i + 1], datum.generators()[k])) return false;
  }
  return true;
}

StepMatrix single_step_matrix(const std::vector<PrimeIdeal>& candidates, const HCDatum& datum) {
  const auto& gens = datum.generators();
  StepMatrix m(candidates.size(), std::vector<std::vector<bool>>(candidates.size(), std::vector<bool>(gens.size())));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::vector<Ideal> shifted;
    for (const auto& u : gens) shifted.push_back(apply(u.automorphism(), candidates[i].ideal()));
    for (std::size_t j = 0; j < candidates.size(); ++j)
      for (std::size_t k = 0; k < gens.size(); ++k) m[i][j][k] = !is_comaximal(shifted[k], candidates[j].ideal());
  }
  return m;
}

namespace {

void require_same_coheight(const PrimeIdeal& anchor, const std::vector<PrimeIdeal>& candidates) {
  const int c = coheight(anchor);
  for (const auto& q : candidates)
    if (coheight(q) != c)
      throw DomainError("candidate " + q.to_string() + " has coheight " + std::to_string(coheight(q)) +
                        ", expected " + std::to_string(c));
}

// Generator labelling the edge a -> b: among the witnesses, those whose
// automorphism moves a variable occurring in a come first, then
// declaration order. nullopt when there is no edge.
using EdgeLabels = std::vector<std::vector<std::optional<std::size_t>>>;

EdgeLabels edge_labels(const std::vector<PrimeIdeal>& nodes, const HCDatum& datum) {
  const auto matrix = single_step_matrix(nodes, datum);
  const auto& gens = datum.generators();
  EdgeLabels labels(nodes.size(), std::vector<std::optional<std::size_t>>(nodes.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    std::vector<bool> acts(gens.size(), false);
    for (const auto& g : nodes[a].ideal().generators())
      for (auto v : g.support())
        for (std::size_t k = 0; k < gens.size(); ++k)
          if (gens[k].automorphism().moves(v)) acts[k] = true;
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      std::optional<std::size_t> fallback;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!matrix[a][b][k]) continue;
        if (acts[k]) {
          labels[a][b] = k;
          break;
        }
        if (!fallback) fallback = k;
      }
      if (!labels[a][b]) labels[a][b] = fallback;
    }
  }
  return labels;
}

}  // namespace

std::vector<Reachable> equiv_reachable(const PrimeIdeal& start, const std::vector<PrimeIdeal>& candidates,
                                       const HCDatum& datum, int max_depth) {
  if (max_depth < 1) throw DomainError("max_depth must be at least 1");
  require_same_coheight(start, candidates);

  std::vector<PrimeIdeal> nodes{start};
  nodes.insert(nodes.end(), candidates.begin(), candidates.end());
  const auto labels = edge_labels(nodes, datum);

  const std::size_t n = nodes.size();
  std::vector<int> dist(n, -1);
  std::vector<std::size_t> parent(n, 0);
  std::deque<std::size_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    auto a = queue.front();
    queue.pop_front();
    if (dist[a] == max_depth) continue;
    for (std::size_t b = 1; b < n; ++b) {
      if (dist[b] >= 0 || !labels[a][b]) continue;
      dist[b] = dist[a] + 1;
      parent[b] = a;
      queue.push_back(b);
    }
  }

  std::vector<Reachable> out;
  for (std::size_t b = 1; b < n; ++b) {
    if (dist[b] < 0) continue;
    std::vector<std::size_t> path{b};
    while (path.back() != 0) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    ChainWitness chain;
    for (std::size_t i = 0; i < path.size(); ++i) {
      chain.primes.push_back(nodes[path[i]]);
      if (i > 0) chain.generator_indices.push_back(*labels[path[i - 1]][path[i]]);
    }
    out.push_back({b - 1, nodes[b], std::move(chain)});
  }
  return out;
}

AssassinBound assassin_bound(const PrimeIdeal& p, const std::vector<PrimeIdeal>& candidates, const HCDatum& datum,
                             int max_depth) {
  if (max_depth < 1) throw DomainError("max_depth must be at least 1");
  require_same_coheight(p, candidates);

  std::vector<PrimeIdeal> nodes{p};
  nodes.insert(nodes.end(), candidates.begin(), candidates.end());
  const auto labels = edge_labels(nodes, datum);

  // Backward search: next[a] is the successor of a on a shortest path to p.
  const std::size_t n = nodes.size();
  std::vector<int> dist(n, -1);
  std::vector<std::size_t> next(n, 0);
  std::deque<std::size_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    auto b = queue.front();
    queue.pop_front();
    if (dist[b] == max_depth) continue;
    for (std::size_t a = 1; a < n; ++a) {
      if (dist[a] >= 0 || !labels[a][b]) continue;
      dist[a] = dist[b] + 1;
      next[a] = b;
      queue.push_back(a);
    }
  }

  AssassinBound out;
  out.admitted.push_back(p);
  out.chains.push_back(ChainWitness{{p}, {}});
  for (std::size_t a = 1; a < n; ++a) {
    if (dist[a] < 0 || nodes[a] == p) continue;
    if (std::any_of(out.admitted.begin(), out.admitted.end(), [&](const PrimeIdeal& q) { return q == nodes[a]; }))
      continue;
    ChainWitness chain;
    std::size_t cur = a;
    chain.primes.push_back(nodes[cur]);
    while (cur != 0) {
      chain.generator_indices.push_back(*labels[cur][next[cur]]);
      cur = next[cur];
      chain.primes.push_back(nodes[cur]);
    }
    out.admitted.push_back(nodes[a]);
    out.chains.push_back(std::move(chain));
  }
  return out;
}

}  // namespace hcs
