#include "hcs/torsion.hpp"

#include <algorithm>
#include <map>

namespace hcs {

SubquotientHandle::SubquotientHandle(Ideal numerator, Ideal denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  require_same_ring(numerator_.ring(), denominator_.ring(), "subquotient");
  if (!is_subset(denominator_, numerator_)) throw DomainError("subquotient denominator is not contained in numerator");
}

std::string SubquotientHandle::to_string() const {
  return numerator_.to_string() + " / " + denominator_.to_string();
}

// ---------------------------------------------------------------------------
// Monomial ideals

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  std::vector<Monomial> out;
  for (auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&g](const Monomial& h) { return h.divides(g); }))
      out.push_back(std::move(g));
  return out;
}

bool monomial_in(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&m](const Monomial& g) { return g.divides(m); });
}

bool monomial_subset(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  return std::all_of(a.begin(), a.end(), [&b](const Monomial& m) { return monomial_in(b, m); });
}

// Splits I = (I + x^a) ∩ (I + m/x^a) until every generator is a pure power.
void split_irreducible(std::vector<Monomial> gens, std::vector<std::vector<Monomial>>& leaves) {
  gens = minimalize(std::move(gens));
  auto mixed = std::find_if(gens.begin(), gens.end(), [](const Monomial& m) { return m.support_size() > 1; });
  if (mixed == gens.end()) {
    leaves.push_back(std::move(gens));
    return;
  }
  const Monomial m = *mixed;
  std::size_t var = 0;
  while (m[var] == 0) ++var;
  Monomial power = Monomial::variable(m.size(), var, m[var]);
  auto left = gens;
  left.push_back(power);
  auto right = gens;
  right.push_back(m / power);
  split_irreducible(std::move(left), leaves);
  split_irreducible(std::move(right), leaves);
}

std::vector<std::size_t> support_of(const std::vector<Monomial>& gens, std::size_t d) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < d; ++i)
    if (std::any_of(gens.begin(), gens.end(), [i](const Monomial& m) { return m[i] > 0; })) vars.push_back(i);
  return vars;
}

bool prime_key_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Ideal monomial_ideal(const RingPtr& ring, const std::vector<Monomial>& gens) {
  std::vector<Poly> polys;
  for (const auto& m : gens) polys.push_back(Poly::monomial(ring, m));
  return Ideal(ring, std::move(polys));
}

std::vector<Monomial> monomial_generators(const Ideal& I) { return I.leading_monomials(); }

}  // namespace

std::vector<PrimaryComponent> monomial_primary_decomposition(const Ideal& I) {
  if (!I.is_monomial()) throw DomainError("monomial_primary_decomposition: ideal is not monomial");
  if (I.is_unit()) throw DomainError("monomial_primary_decomposition: unit ideal");
  const RingPtr& ring = I.ring();
  const std::size_t d = ring->dimension();

  std::vector<std::vector<Monomial>> leaves;
  split_irreducible(monomial_generators(I), leaves);

  // Irredundant irreducible components: drop any that contains another.
  std::vector<std::vector<Monomial>> irreducible;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leaves.size() && !redundant; ++j) {
      if (i == j || !monomial_subset(leaves[j], leaves[i])) continue;
      // Equal components: keep the first occurrence only.
      redundant = !monomial_subset(leaves[i], leaves[j]) || j < i;
    }
    if (!redundant) irreducible.push_back(leaves[i]);
  }

  // Components sharing a radical are intersected into one primary component.
  std::map<std::vector<std::size_t>, std::vector<Monomial>, decltype(&prime_key_less)> grouped(&prime_key_less);
  for (const auto& comp : irreducible) {
    auto key = support_of(comp, d);
    auto it = grouped.find(key);
    if (it == grouped.end()) {
      grouped.emplace(std::move(key), comp);
      continue;
    }
    std::vector<Monomial> lcms;
    for (const auto& a : it->second)
      for (const auto& b : comp) lcms.push_back(a.lcm(b));
    it->second = minimalize(std::move(lcms));
  }

  std::vector<PrimaryComponent> out;
  for (const auto& [vars, gens] : grouped)
    out.push_back({monomial_ideal(ring, gens), PrimeIdeal::from_variables(ring, vars)});
  return out;
}

// ---------------------------------------------------------------------------
// CyclicModule

CyclicModule::CyclicModule(Ideal defining) : ideal_(std::move(defining)) {
  if (ideal_.is_unit()) throw DomainError("cyclic module Γ/I requires a proper ideal I");
  if (!ideal_.is_monomial())
    throw DomainError("module " + ideal_.to_string() + " is not monomial and has no declared decomposition");
  components_ = monomial_primary_decomposition(ideal_);
}

CyclicModule::CyclicModule(Ideal defining, std::vector<PrimaryComponent> decomposition)
    : ideal_(std::move(defining)), components_(std::move(decomposition)), declared_(true) {
  if (ideal_.is_unit()) throw DomainError("cyclic module Γ/I requires a proper ideal I");
  if (components_.empty()) throw DomainError("declared decomposition is empty");
  std::vector<Ideal> primaries;
  for (const auto& c : components_) {
    require_same_ring(ideal_.ring(), c.primary.ring(), "declared decomposition");
    require_same_ring(ideal_.ring(), c.prime.ring(), "declared decomposition");
    if (!is_subset(c.primary, c.prime.ideal()))
      throw DomainError("declared component " + c.primary.to_string() + " is not contained in its prime " +
                        c.prime.to_string());
    for (const auto& g : c.prime.ideal().generators())
      if (!radical_membership(g, c.primary))
        throw DomainError("radical of declared component " + c.primary.to_string() + " is not " +
                          c.prime.to_string());
    primaries.push_back(c.primary);
  }
  if (!(ideal_intersection(primaries) == ideal_))
    throw DomainError("declared components do not intersect to " + ideal_.to_string());
}

CyclicModule CyclicModule::of_prime(const PrimeIdeal& p) {
  return CyclicModule(p.ideal(), {PrimaryComponent{p.ideal(), p}});
}

std::vector<std::string> CyclicModule::notes() const {
  std::vector<std::string> out;
  if (declared_) out.push_back("declared components: primary-ness not verified");
  for (const auto& c : components_)
    if (c.prime.conditional()) out.push_back("conditional on declared primality of " + c.prime.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// Assassin and support

std::vector<PrimeIdeal> ass_module(const CyclicModule& M) {
  if (M.declared()) {
    std::vector<PrimeIdeal> out;
    for (const auto& c : M.components())
      if (std::none_of(out.begin(), out.end(), [&c](const PrimeIdeal& p) { return p == c.prime; }))
        out.push_back(c.prime);
    return out;
  }

  const auto gens = monomial_generators(M.defining_ideal());
  const std::size_t d = M.ring()->dimension();
  std::vector<Monomial::Exponent> bound(d, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < d; ++i) bound[i] = std::max(bound[i], g[i]);

  std::vector<std::vector<std::size_t>> found;
  Monomial m(d);
  auto visit = [&] {
    if (monomial_in(gens, m)) return;
    std::vector<Monomial> colon;
    for (const auto& g : gens) colon.push_back(g / g.gcd(m));
    colon = minimalize(std::move(colon));
    if (std::any_of(colon.begin(), colon.end(), [](const Monomial& c) { return c.degree() != 1; })) return;
    auto key = support_of(colon, d);
    if (std::find(found.begin(), found.end(), key) == found.end()) found.push_back(std::move(key));
  };
  auto walk = [&](auto&& self, std::size_t var) -> void {
    if (var == d) {
      visit();
      return;
    }
    for (Monomial::Exponent e = 0; e <= bound[var]; ++e) {
      m[var] = e;
      self(self, var + 1);
    }
    m[var] = 0;
  };
  walk(walk, 0);

  std::sort(found.begin(), found.end(), prime_key_less);
  std::vector<PrimeIdeal> out;
  for (const auto& vars : found) out.push_back(PrimeIdeal::from_variables(M.ring(), vars));
  return out;
}

std::vector<PrimeIdeal> min_supp(const CyclicModule& M) { return min_elements(ass_module(M)); }

// ---------------------------------------------------------------------------
// Torsion radicals

SubquotientHandle torsion_radical(const CyclicModule& M, const SpecSubset& Z) {
  std::vector<Ideal> survivors;
  for (const auto& c : M.components())
    if (!z_contains(Z, c.prime)) survivors.push_back(c.primary);
  Ideal numerator = survivors.empty() ? Ideal::unit(M.ring()) : ideal_intersection(survivors);
  return SubquotientHandle(std::move(numerator), M.defining_ideal());
}

bool torsion_by_coheight(const CyclicModule& M, const Poly& x, int i) {
  return dimension(ideal_quotient(M.defining_ideal(), x)) <= i;
}

StrataProfile strata_profile(const CyclicModule& M) {
  StrataProfile profile;
  const int d = static_cast<int>(M.ring()->dimension());
  for (int i = 0; i <= d; ++i) {
    auto t = torsion_radical(M, CoheightAtMost{i});
    profile.strata.push_back({i, !t.is_zero(), t.is_whole()});
  }
  for (int i = 0; i <= d; ++i) {
    bool below_zero = i == 0 || !profile.strata[i - 1].nonzero;
    if (profile.strata[i].whole && below_zero) {
      profile.pure = i;
      break;
    }
  }
  return profile;
}

SubquotientHandle p_component(const CyclicModule& M, const PrimeIdeal& p) {
  return SubquotientHandle(saturation(M.defining_ideal(), p.ideal()), M.defining_ideal());
}

CrtDecomposition crt_decompose(const CyclicModule& M) {
  const auto ass = ass_module(M);
  const auto minimal = min_elements(ass);
  for (std::size_t i = 0; i < minimal.size(); ++i)
    for (std::size_t j = i + 1; j < minimal.size(); ++j)
      if (!is_comaximal(minimal[i].ideal(), minimal[j].ideal()))
        throw DomainError("minimal associated primes " + minimal[i].to_string() + " and " + minimal[j].to_string() +
                          " are not comaximal");

  CrtDecomposition out;
  if (minimal.size() != ass.size())
    out.warnings.push_back("embedded associated primes present; decomposing over the minimal primes");

  const Ideal& I = M.defining_ideal();
  const auto total = vector_space_dimension(I);
  out.module_dim = total;
  for (const auto& p : minimal) {
    auto part = p_component(M, p);
    std::optional<std::size_t> dim;
    if (total) dim = *total - *vector_space_dimension(part.numerator());
    out.components.push_back({p, std::move(part), dim});
  }

  out.direct = true;
  Ideal sum_all = I;
  for (std::size_t k = 0; k < out.components.size(); ++k) {
    Ideal others = I;
    for (std::size_t j = 0; j < out.components.size(); ++j)
      if (j != k) others = ideal_sum(others, out.components[j].part.numerator());
    if (!(ideal_intersection(out.components[k].part.numerator(), others) == I)) out.direct = false;
    sum_all = ideal_sum(sum_all, out.components[k].part.numerator());
  }
  out.covers = sum_all.is_unit();
  return out;
}

bool hom_cyclic_is_zero(const Ideal& I, const Ideal& J) { return ideal_quotient(J, I) == J; }

bool is_regular_sequence(const RingPtr& ring, std::span<const Poly> seq) {
  std::vector<Poly> prefix;
  for (const auto& f : seq) {
    require_same_ring(ring, f.ring(), "is_regular_sequence");
    if (f.is_zero()) return false;
    Ideal before(ring, prefix);
    if (!(ideal_quotient(before, f) == before)) return false;
    prefix.push_back(f);
  }
  return !Ideal(ring, prefix).is_unit();
}

}  // namespace hcs
