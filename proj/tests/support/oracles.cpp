#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "hcs/groebner.hpp"

namespace oracle {

using hcs::Monomial;
using hcs::Rational;

namespace {

void monomials_up_to(std::size_t nvars, int bound, std::vector<Monomial>& out) {
  Monomial m(nvars);
  auto rec = [&](auto& self, std::size_t var, int left) -> void {
    if (var == nvars) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[var] = e;
      self(self, var + 1, left - e);
    }
    m[var] = 0;
  };
  rec(rec, 0, bound);
}

// Rank test: is `target` in the column span of `columns`?
bool in_span(std::vector<std::vector<Rational>> columns, std::vector<Rational> target) {
  const std::size_t rows = target.size();
  // Row-reduce the transpose: each column becomes a pivot row.
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivots;
  auto reduce = [&](std::vector<Rational>& v) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto p = pivots[k];
      if (v[p] == 0) continue;
      Rational factor = v[p] / basis[k][p];
      for (std::size_t r = 0; r < rows; ++r)
        if (basis[k][r] != 0) v[r] -= factor * basis[k][r];
    }
  };
  for (auto& col : columns) {
    reduce(col);
    auto it = std::find_if(col.begin(), col.end(), [](const Rational& q) { return q != 0; });
    if (it == col.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - col.begin()));
    basis.push_back(std::move(col));
  }
  reduce(target);
  return std::all_of(target.begin(), target.end(), [](const Rational& q) { return q == 0; });
}

std::vector<Poly> eliminate_first(const RingPtr& base, const std::vector<Poly>& gens) {
  auto gb = hcs::reduced_groebner_basis(gens, hcs::MonomialOrder::block(1));
  std::vector<Poly> out;
  for (const auto& g : gb)
    if (g.degree_in(0) <= 0) out.push_back(g.dropped(base, 1));
  return out;
}

Ideal intersect_by_elimination(const Ideal& A, const Ideal& B) {
  const RingPtr& base = A.ring();
  RingPtr lifted = base->with_leading_variable("w_oracle");
  Poly w = Poly::variable(lifted, 0);
  Poly one = Poly::constant(lifted, 1);
  std::vector<Poly> gens;
  for (const auto& a : A.generators()) gens.push_back(w * a.lifted(lifted, 1));
  for (const auto& b : B.generators()) gens.push_back((one - w) * b.lifted(lifted, 1));
  return Ideal(base, eliminate_first(base, gens));
}

}  // namespace

bool bounded_membership(const std::vector<Poly>& gens, const Poly& f, int bound) {
  if (f.is_zero()) return true;
  if (f.degree() > bound) return false;
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->dimension();
  std::vector<Monomial> rows;
  monomials_up_to(n, bound, rows);
  std::map<Monomial, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;

  auto vectorize = [&](const Poly& p) {
    std::vector<Rational> v(rows.size());
    for (const auto& t : p.terms()) v[row_of.at(t.monomial)] = t.coeff;
    return v;
  };

  std::vector<std::vector<Rational>> columns;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > bound) continue;
    std::vector<Monomial> multipliers;
    monomials_up_to(n, bound - static_cast<int>(g.degree()), multipliers);
    for (const auto& m : multipliers) columns.push_back(vectorize(g.times_term(m, 1)));
  }
  return in_span(std::move(columns), vectorize(f));
}

bool same_ideal_bounded(const std::vector<Poly>& gens, const std::vector<Poly>& basis, int bound) {
  for (const auto& g : basis)
    if (!bounded_membership(gens, g, bound)) return false;
  for (const auto& g : gens)
    if (!bounded_membership(basis, g, bound)) return false;
  return true;
}

Ideal saturation_rabinowitsch(const Ideal& I, const Ideal& J) {
  const RingPtr& base = I.ring();
  RingPtr lifted = base->with_leading_variable("w_oracle");
  Poly w = Poly::variable(lifted, 0);
  Poly one = Poly::constant(lifted, 1);

  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    std::vector<Poly> gens;
    for (const auto& f : I.generators()) gens.push_back(f.lifted(lifted, 1));
    gens.push_back(one - w * g.lifted(lifted, 1));
    Ideal part(base, eliminate_first(base, gens));
    acc = acc ? intersect_by_elimination(*acc, part) : part;
  }
  // J = 0: I : 0^inf is the unit ideal.
  return acc ? *acc : Ideal::unit(base);
}

std::vector<std::vector<std::size_t>> monomial_minimal_primes(const Ideal& I) {
  const std::size_t n = I.ring()->dimension();
  std::vector<std::uint32_t> containing;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    // I is inside <x_s : s in mask> iff every generator has a variable in mask.
    bool ok = true;
    for (const auto& g : I.generators()) {
      const Monomial& m = g.terms().front().monomial;
      bool hit = false;
      for (std::size_t v = 0; v < n; ++v)
        if ((mask >> v & 1u) && m[v] > 0) hit = true;
      ok = ok && hit;
    }
    if (ok) containing.push_back(mask);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto mask : containing) {
    bool minimal = std::none_of(containing.begin(), containing.end(),
                                [&](std::uint32_t other) { return other != mask && (other & mask) == other; });
    if (!minimal) continue;
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1u) vars.push_back(v);
    out.push_back(vars);
  }
  return out;
}

Poly RandomPolys::poly(const RingPtr& ring, int max_degree, int max_terms, int c) {
  const std::size_t n = ring->dimension();
  for (;;) {
    std::vector<hcs::Term> terms;
    int nterms = uniform(1, max_terms);
    for (int k = 0; k < nterms; ++k) {
      Monomial m(n);
      int left = uniform(0, max_degree);
      for (int step = 0; step < left; ++step) m[uniform(0, static_cast<int>(n) - 1)] += 1;
      terms.push_back({m, Rational(uniform(-c, c))});
    }
    Poly p = Poly::from_terms(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

Ideal RandomPolys::monomial_ideal(const RingPtr& ring, int ngens, int max_degree) {
  const std::size_t n = ring->dimension();
  std::vector<Poly> gens;
  for (int k = 0; k < ngens; ++k) {
    Monomial m(n);
    int deg = uniform(1, max_degree);
    for (int step = 0; step < deg; ++step) m[uniform(0, static_cast<int>(n) - 1)] += 1;
    gens.push_back(Poly::monomial(ring, m));
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace oracle
