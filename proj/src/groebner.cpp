#include "hcs/groebner.hpp"

#include <algorithm>

namespace hcs {

namespace {

// Terms sorted descending under a fixed order.
using Terms = std::vector<Term>;

class Engine {
 public:
  explicit Engine(const MonomialOrder& order) : order_(order) {}

  Terms ordered(const Poly& p) const {
    Terms t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(),
              [this](const Term& a, const Term& b) { return order_.greater(a.monomial, b.monomial); });
    return t;
  }

  // f - c*m*g where the leading terms are known to cancel.
  Terms cancel_lead(const Terms& f, const Rational& c, const Monomial& m, const Terms& g) const {
    Terms out;
    out.reserve(f.size() + g.size());
    std::size_t i = 1, j = 1;
    while (i < f.size() && j < g.size()) {
      Monomial gm = g[j].monomial * m;
      auto cmp = order_.compare(f[i].monomial, gm);
      if (cmp > 0) {
        out.push_back(f[i++]);
      } else if (cmp < 0) {
        out.push_back({std::move(gm), -c * g[j].coeff});
        ++j;
      } else {
        Rational s = f[i].coeff - c * g[j].coeff;
        if (s != 0) out.push_back({std::move(gm), std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].monomial * m, -c * g[j].coeff});
    return out;
  }

  // Full reduction of f by `basis` (each element monic).
  Terms reduce(Terms f, const std::vector<Terms>& basis, std::size_t skip = SIZE_MAX) const {
    Terms rem;
    while (!f.empty()) {
      const Term& lead = f.front();
      const Terms* divisor = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == skip || basis[k].empty()) continue;
        if (basis[k].front().monomial.divides(lead.monomial)) {
          divisor = &basis[k];
          break;
        }
      }
      if (divisor) {
        Monomial m = lead.monomial / divisor->front().monomial;
        Rational c = lead.coeff / divisor->front().coeff;
        f = cancel_lead(f, c, m, *divisor);
      } else {
        rem.push_back(std::move(f.front()));
        f.erase(f.begin());
      }
    }
    return rem;
  }

  static void make_monic(Terms& t) {
    if (t.empty()) return;
    Rational inv = 1 / t.front().coeff;
    for (auto& term : t) term.coeff *= inv;
  }

  Terms spoly(const Terms& f, const Terms& g) const {
    Monomial l = f.front().monomial.lcm(g.front().monomial);
    // Both are monic: S = (l/lm f) f - (l/lm g) g.
    Monomial mf = l / f.front().monomial;
    Monomial mg = l / g.front().monomial;
    Terms fs;
    fs.reserve(f.size());
    for (const auto& t : f) fs.push_back({t.monomial * mf, t.coeff});
    return cancel_lead(fs, 1, mg, g);
  }

  std::vector<Terms> buchberger(const std::vector<Terms>& input) const;

 private:
  const MonomialOrder& order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

std::vector<Terms> Engine::buchberger(const std::vector<Terms>& input) const {
  std::vector<Terms> basis;
  std::vector<Pair> queue;
  std::vector<std::vector<bool>> pending;

  auto is_unit = [](const Terms& t) { return t.size() == 1 && t.front().monomial.is_one(); };

  auto add = [&](Terms g) -> bool {
    make_monic(g);
    if (is_unit(g)) {
      basis.assign(1, std::move(g));
      return true;
    }
    const std::size_t k = basis.size();
    basis.push_back(std::move(g));
    for (auto& row : pending) row.push_back(false);
    pending.emplace_back(basis.size(), false);
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].empty()) continue;
      queue.push_back({i, k, basis[i].front().monomial.lcm(basis[k].front().monomial)});
      pending[i][k] = pending[k][i] = true;
    }
    return false;
  };

  for (const auto& g : input) {
    Terms r = reduce(g, basis);
    if (r.empty()) continue;
    if (add(std::move(r))) return basis;
  }

  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), [this](const Pair& a, const Pair& b) {
      auto c = order_.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = std::move(*best);
    queue.erase(best);
    pending[p.i][p.j] = pending[p.j][p.i] = false;

    const Monomial& li = basis[p.i].front().monomial;
    const Monomial& lj = basis[p.j].front().monomial;
    if (li.coprime(lj)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j || basis[k].empty()) continue;
      if (pending[p.i][k] || pending[p.j][k]) continue;
      if (basis[k].front().monomial.divides(p.lcm)) chain = true;
    }
    if (chain) continue;

    Terms r = reduce(spoly(basis[p.i], basis[p.j]), basis);
    if (r.empty()) continue;
    if (add(std::move(r))) return basis;
  }
  return basis;
}

}  // namespace

std::vector<Poly> reduced_groebner_basis(std::span<const Poly> generators, const MonomialOrder& order) {
  if (generators.empty()) return {};
  const RingPtr ring = generators.front().ring();
  Engine engine(order);
  std::vector<Terms> input;
  for (const auto& g : generators) {
    require_same_ring(ring, g.ring(), "groebner_basis");
    if (!g.is_zero()) input.push_back(engine.ordered(g));
  }
  // Low-degree generators first keeps the early reductions cheap.
  std::stable_sort(input.begin(), input.end(), [&order](const Terms& a, const Terms& b) {
    return order.compare(a.front().monomial, b.front().monomial) < 0;
  });

  std::vector<Terms> basis = engine.buchberger(input);

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::sort(basis.begin(), basis.end(), [&order](const Terms& a, const Terms& b) {
    return order.compare(a.front().monomial, b.front().monomial) < 0;
  });
  std::vector<Terms> minimal;
  for (auto& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&g](const Terms& h) {
      return h.front().monomial.divides(g.front().monomial);
    });
    if (!redundant) minimal.push_back(std::move(g));
  }

  // Interreduce tails.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Terms tail(minimal[k].begin() + 1, minimal[k].end());
    Terms reduced = engine.reduce(std::move(tail), minimal, k);
    Terms full;
    full.reserve(reduced.size() + 1);
    full.push_back(minimal[k].front());
    full.insert(full.end(), reduced.begin(), reduced.end());
    minimal[k] = std::move(full);
  }

  std::vector<Poly> out;
  out.reserve(minimal.size());
  for (auto it = minimal.rbegin(); it != minimal.rend(); ++it) out.push_back(Poly::from_terms(ring, *it));
  return out;
}

Poly reduce_fully(const Poly& f, std::span<const Poly> basis, const MonomialOrder& order) {
  Engine engine(order);
  std::vector<Terms> b;
  for (const auto& g : basis) {
    require_same_ring(f.ring(), g.ring(), "normal_form");
    if (g.is_zero()) continue;
    Terms t = engine.ordered(g);
    Engine::make_monic(t);
    b.push_back(std::move(t));
  }
  return Poly::from_terms(f.ring(), engine.reduce(engine.ordered(f), b));
}

}  // namespace hcs
